"""Ideals, primality, nilradicals and prime spectra of finite rngs.

Ideal enumeration follows two exact routes: closure of the principal ideals
under pairwise sums (the reference route, also used as the small-instance
oracle target), and, for larger unital rings, splitting the ring along a
nontrivial idempotent and combining factor ideals. Both routes produce the
same canonical list; tests cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config, kernels
from .errors import NotIdealError, SizeLimitError, VerificationFault
from .rng import FiniteRng, _reindex, make_rng


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRng
    members: frozenset[int]

    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.size, dtype=bool)
        if self.members:
            m[np.asarray(sorted(self.members), dtype=np.int64)] = True
        return m

    def sort_key(self):
        return (len(self.members), sorted(self.members))

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def describe(self) -> str:
        ms = sorted(self.members)
        if len(ms) <= 8:
            return "{" + ",".join(map(str, ms)) + "}"
        return "{" + ",".join(map(str, ms[:6])) + f",..}}#{len(ms)}"


@dataclass(frozen=True)
class PrimeIdeal(Ideal):
    certificate: str = ""


@dataclass(frozen=True)
class PrimalityResult:
    is_prime: bool
    reason: str = ""
    witness: tuple[int, int] | None = None


def ideal_violation(r: FiniteRng, members) -> tuple | None:
    mask = np.zeros(r.size, dtype=bool)
    ms = sorted(int(m) for m in members)
    if ms:
        mask[np.asarray(ms, dtype=np.int64)] = True
    return kernels.ideal_violation(r.add, r.mul, r.zero, mask, r.neg())


def as_ideal(r: FiniteRng, members) -> Ideal:
    witness = ideal_violation(r, members)
    if witness is not None:
        raise NotIdealError(witness)
    return Ideal(r, frozenset(int(m) for m in members))


def generated_ideal(r: FiniteRng, gens) -> Ideal:
    """Least ideal containing gens: ring multiples, then additive closure."""
    for g in gens:
        if not 0 <= int(g) < r.size:
            raise ValueError(f"generator {g} out of range")
    seed = kernels.absorb_seed_mask(r.mul, [int(g) for g in gens])
    mask = kernels.additive_closure_mask(r.add, seed, r.zero)
    return Ideal(r, frozenset(int(x) for x in np.flatnonzero(mask)))


def principal_masks(r: FiniteRng) -> list[np.ndarray]:
    out = []
    for x in range(r.size):
        seed = kernels.absorb_seed_mask(r.mul, [x])
        out.append(kernels.additive_closure_mask(r.add, seed, r.zero))
    return out


def enumerate_ideals(r: FiniteRng) -> list[Ideal]:
    """Every ideal of r, sorted by cardinality then member list."""
    if "ideals" in r._cache:
        return r._cache["ideals"]
    if r.is_unital and r.size > config.SPLIT_THRESHOLD:
        masks = _ideals_by_splitting(r)
        if masks is None:
            masks = _ideals_by_join_closure(r)
    else:
        masks = _ideals_by_join_closure(r)
    ideals = [Ideal(r, frozenset(int(x) for x in np.flatnonzero(m))) for m in masks]
    ideals.sort(key=Ideal.sort_key)
    r._cache["ideals"] = ideals
    return ideals


def _ideals_by_join_closure(r: FiniteRng) -> list[np.ndarray]:
    zero_mask = np.zeros(r.size, dtype=bool)
    zero_mask[r.zero] = True
    known: dict[bytes, np.ndarray] = {zero_mask.tobytes(): zero_mask}
    gens: list[tuple[int, np.ndarray]] = []
    queue: list[np.ndarray] = [zero_mask]
    for x, pmask in enumerate(principal_masks(r)):
        b = pmask.tobytes()
        if b not in known:
            known[b] = pmask
            gens.append((x, pmask))
            queue.append(pmask)
    while queue:
        cur = queue.pop()
        for x, pmask in gens:
            if cur[x]:
                continue  # the principal ideal of x is already inside
            joined = kernels.sumset_mask(r.add, cur, pmask)
            b = joined.tobytes()
            if b not in known:
                if len(known) >= config.MAX_IDEALS:
                    raise SizeLimitError(f"more than {config.MAX_IDEALS} ideals in {r.label}")
                known[b] = joined
                queue.append(joined)
    return list(known.values())


def _ideals_by_splitting(r: FiniteRng) -> list[np.ndarray] | None:
    """Ideals via R = eR x (1-e)R for a nontrivial idempotent e, or None."""
    idems = [int(e) for e in kernels.idempotent_indices(r.mul) if int(e) not in (r.zero, r.identity)]
    if not idems:
        return None
    e = idems[0]
    f = int(r.add[r.identity, r.neg()[e]])  # 1 - e
    part_masks = []
    for a_mask, b_mask in _factor_ideal_pairs(r, e, f):
        part_masks.append(kernels.sumset_mask(r.add, a_mask, b_mask))
    return part_masks


def _corner(r: FiniteRng, e: int) -> tuple[FiniteRng, np.ndarray]:
    """The ring e*R with identity e, plus its member indices inside r."""
    members = np.unique(r.mul[e])
    sub = make_rng(_reindex(r.add, members), _reindex(r.mul, members),
                   zero=int(np.searchsorted(members, r.zero)),
                   label=f"{r.label}|e{e}")
    return sub, members


def _factor_ideal_pairs(r: FiniteRng, e: int, f: int):
    ring_e, mem_e = _corner(r, e)
    ring_f, mem_f = _corner(r, f)
    ideals_e = enumerate_ideals(ring_e)
    ideals_f = enumerate_ideals(ring_f)
    if len(ideals_e) * len(ideals_f) > config.MAX_IDEALS:
        raise SizeLimitError(f"more than {config.MAX_IDEALS} ideals in {r.label}")
    for ia in ideals_e:
        a_mask = np.zeros(r.size, dtype=bool)
        a_mask[mem_e[sorted(ia.members)]] = True
        for ib in ideals_f:
            b_mask = np.zeros(r.size, dtype=bool)
            b_mask[mem_f[sorted(ib.members)]] = True
            yield a_mask, b_mask


def is_prime(r: FiniteRng, i: Ideal) -> PrimalityResult:
    witness = kernels.prime_violation(r.mul, i.mask())
    if witness is None:
        return PrimalityResult(True, reason="proper and the elementwise law holds")
    if witness[0] == "improper":
        return PrimalityResult(False, reason="improper")
    return PrimalityResult(False, reason="product falls in without a factor",
                           witness=(witness[1], witness[2]))


def spectrum(r: FiniteRng) -> list[PrimeIdeal]:
    """All prime ideals, canonically sorted."""
    if "spectrum" in r._cache:
        return r._cache["spectrum"]
    primes = []
    for i in enumerate_ideals(r):
        res = is_prime(r, i)
        if res.is_prime:
            primes.append(PrimeIdeal(r, i.members, certificate=res.reason))
    primes.sort(key=Ideal.sort_key)
    r._cache["spectrum"] = primes
    return primes


def nilpotent_members(r: FiniteRng) -> frozenset[int]:
    return frozenset(int(x) for x in np.flatnonzero(kernels.nilpotent_mask(r.mul, r.zero)))


def nilradical(r: FiniteRng) -> Ideal:
    """Nilpotent elements; cross-checked against the kernel of the spectrum
    (with the empty intersection taken to be the whole ring)."""
    if "nilradical" in r._cache:
        return r._cache["nilradical"]
    by_power = nilpotent_members(r)
    by_primes = kernel_of(r, spectrum(r)).members
    if by_power != by_primes:
        raise VerificationFault(
            f"nilradical mismatch in {r.label}: nilpotents {sorted(by_power)} "
            f"vs prime kernel {sorted(by_primes)}")
    out = Ideal(r, by_power)
    r._cache["nilradical"] = out
    return out


def kernel_of(r: FiniteRng, points) -> Ideal:
    """Intersection of a set of primes; everything when the set is empty."""
    pts = list(points)
    if not pts:
        return Ideal(r, frozenset(range(r.size)))
    members = frozenset.intersection(*[p.members for p in pts])
    return Ideal(r, members)


def basic_open(r: FiniteRng, a: int) -> list[PrimeIdeal]:
    return [p for p in spectrum(r) if a not in p.members]


def vanishing(r: FiniteRng, i: Ideal) -> list[PrimeIdeal]:
    return [p for p in spectrum(r) if p.members >= i.members]
