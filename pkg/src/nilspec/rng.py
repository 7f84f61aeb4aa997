"""Finite commutative rings, with or without identity, as explicit tables.

Elements are dense indices 0..size-1; `add` and `mul` are row-major index
tables. Everything is immutable after construction and every constructor
validates the laws it can afford (cubic checks are exhaustive up to
config.EXHAUSTIVE_VALIDATE_LIMIT, sampled above it; `build_table` is always
exhaustive because it accepts untrusted input).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import config, kernels
from .errors import (
    NotEMorphismError,
    NotHomomorphismError,
    NotIdealError,
    RingAxiomError,
    SearchBudgetError,
    SizeLimitError,
)

TABLE_DTYPE = np.int32


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=TABLE_DTYPE)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteRng:
    size: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    identity: Optional[int]
    label: str
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def is_unital(self) -> bool:
        return self.identity is not None

    def elements(self) -> range:
        return range(self.size)

    def neg(self) -> np.ndarray:
        if "neg" not in self._cache:
            self._cache["neg"] = kernels.negation_vector(self.add, self.zero)
        return self._cache["neg"]

    def table_signature(self) -> bytes:
        if "sig" not in self._cache:
            self._cache["sig"] = self.add.tobytes() + b"|" + self.mul.tobytes()
        return self._cache["sig"]

    def __repr__(self) -> str:  # keep reprs short; tables can be huge
        return f"FiniteRng({self.label}, size={self.size})"


def make_rng(add, mul, zero: int = 0, label: str = "", validate: str = "auto") -> FiniteRng:
    """Build a validated ring from tables.

    validate: "full" forces the cubic exhaustive check, "auto" samples
    triples above the exhaustive limit (formula-built tables only).
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
        raise RingAxiomError(("shape", add.shape, mul.shape), "tables must be square and equally sized")
    n = add.shape[0]
    if n < 1:
        raise RingAxiomError(("shape", 0, 0), "a ring has at least the zero element")
    if n > config.MAX_RING_SIZE:
        raise SizeLimitError(f"ring size {n} exceeds limit {config.MAX_RING_SIZE}")
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise RingAxiomError(("range", -1, -1), "table entries must be element indices")
    if not (0 <= zero < n):
        raise RingAxiomError(("range", zero, -1), "zero index out of range")
    add = np.ascontiguousarray(add, dtype=TABLE_DTYPE)
    mul = np.ascontiguousarray(mul, dtype=TABLE_DTYPE)
    if validate == "full" or n <= config.EXHAUSTIVE_VALIDATE_LIMIT:
        witness = kernels.validate_tables(add, mul, zero)
    else:
        witness = kernels.sampled_law_violation(add, mul, zero, config.SAMPLED_VALIDATE_TRIPLES, seed=0)
    if witness is not None:
        raise RingAxiomError(witness)
    e = kernels.find_identity_index(mul)
    return FiniteRng(
        size=n,
        add=_freeze(add),
        mul=_freeze(mul),
        zero=int(zero),
        identity=None if e < 0 else int(e),
        label=label or f"R{n}",
    )


def build_zmod(n: int) -> FiniteRng:
    """Integers modulo n. n=1 gives the zero ring, where 0 acts as identity."""
    if n < 1:
        raise SizeLimitError("modulus must be at least 1")
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return make_rng(add, mul, zero=0, label=f"Z{n}")


def build_product(a: FiniteRng, b: FiniteRng) -> FiniteRng:
    """Componentwise ring on index pairs (i, j) -> i*b.size + j."""
    n = a.size * b.size
    if n > config.MAX_RING_SIZE:
        raise SizeLimitError(f"product size {n} exceeds limit {config.MAX_RING_SIZE}")
    ia = np.repeat(np.arange(a.size), b.size)
    ib = np.tile(np.arange(b.size), a.size)
    add = a.add[ia[:, None], ia[None, :]] * b.size + b.add[ib[:, None], ib[None, :]]
    mul = a.mul[ia[:, None], ia[None, :]] * b.size + b.mul[ib[:, None], ib[None, :]]
    zero = a.zero * b.size + b.zero
    return make_rng(add, mul, zero=zero, label=f"{a.label}x{b.label}")


def build_table(add, mul, label: str = "") -> FiniteRng:
    """Validate untrusted tables exhaustively; zero is located by scan."""
    add = np.asarray(add)
    if add.ndim != 2 or add.shape[0] != add.shape[1]:
        raise RingAxiomError(("shape", add.shape, None), "addition table must be square")
    n = add.shape[0]
    ar = np.arange(n)
    zeros = np.flatnonzero((add == ar[None, :]).all(axis=1))
    if zeros.size == 0:
        raise RingAxiomError(("add-zero", -1, -1, -1), "no neutral element for addition")
    return make_rng(add, mul, zero=int(zeros[0]), label=label or f"table{n}", validate="full")


def find_identity(r: FiniteRng) -> Optional[int]:
    e = kernels.find_identity_index(r.mul)
    return None if e < 0 else int(e)


def same_ring(a: FiniteRng, b: FiniteRng) -> bool:
    """Identical presentations: equal tables over the same index set."""
    return a is b or (
        a.size == b.size
        and a.zero == b.zero
        and a.identity == b.identity
        and a.table_signature() == b.table_signature()
    )


def additive_exponent(r: FiniteRng) -> int:
    """Least m >= 1 with m*x = 0 for every x."""
    if "exponent" not in r._cache:
        orders = kernels.additive_order_vector(r.add, r.zero)
        r._cache["exponent"] = int(math.lcm(*[int(o) for o in orders]))
    return r._cache["exponent"]


@dataclass(frozen=True, eq=False)
class RngHom:
    source: FiniteRng
    target: FiniteRng
    map: np.ndarray
    label: str = ""

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    @property
    def is_injective(self) -> bool:
        return len(set(self.map.tolist())) == self.source.size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map.tolist())) == self.target.size

    @property
    def is_unital(self) -> bool:
        return (
            self.source.identity is not None
            and self.target.identity is not None
            and int(self.map[self.source.identity]) == self.target.identity
        )

    def image_members(self) -> frozenset[int]:
        return frozenset(int(v) for v in self.map)

    def kernel_members(self) -> frozenset[int]:
        return frozenset(int(x) for x in np.flatnonzero(self.map == self.target.zero))

    def compose(self, inner: "RngHom") -> "RngHom":
        if not same_ring(inner.target, self.source):
            raise ValueError("composition mismatch")
        return make_hom(inner.source, self.target, self.map[inner.map], label=f"{self.label}*{inner.label}")

    def __repr__(self) -> str:
        return f"RngHom({self.source.label}->{self.target.label})"


def make_hom(source: FiniteRng, target: FiniteRng, mapping, label: str = "") -> RngHom:
    m = np.ascontiguousarray(mapping, dtype=TABLE_DTYPE)
    if m.shape != (source.size,):
        raise NotHomomorphismError(("shape", m.shape), "map length must equal source size")
    if m.min() < 0 or m.max() >= target.size:
        raise NotHomomorphismError(("range", int(m.min()), int(m.max())))
    witness = kernels.hom_violation(m, source.add, source.mul, target.add, target.mul, source.zero, target.zero)
    if witness is not None:
        raise NotHomomorphismError(witness)
    m.setflags(write=False)
    return RngHom(source=source, target=target, map=m, label=label)


@dataclass(frozen=True, eq=False)
class IExtension:
    """A ring embedded as an ideal of an ambient ring."""

    sub: FiniteRng
    amb: FiniteRng
    embed: RngHom
    label: str
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def is_e_object(self) -> bool:
        """Extensions with a unital ambient ring are the pair-category objects."""
        return self.amb.is_unital

    def image_indices(self) -> np.ndarray:
        if "img_idx" not in self._cache:
            self._cache["img_idx"] = np.sort(self.embed.map.astype(np.int64))
        return self._cache["img_idx"]

    def image_mask(self) -> np.ndarray:
        if "img_mask" not in self._cache:
            mask = np.zeros(self.amb.size, dtype=bool)
            mask[self.embed.map] = True
            mask.setflags(write=False)
            self._cache["img_mask"] = mask
        return self._cache["img_mask"]

    def pull_back(self, amb_members) -> frozenset[int]:
        """Sub-ring indices whose embedding lands in the given ambient set."""
        inv = self._inverse()
        return frozenset(inv[x] for x in amb_members if x in inv)

    def push(self, sub_members) -> frozenset[int]:
        return frozenset(int(self.embed.map[s]) for s in sub_members)

    def _inverse(self) -> dict[int, int]:
        if "inv" not in self._cache:
            self._cache["inv"] = {int(v): i for i, v in enumerate(self.embed.map)}
        return self._cache["inv"]

    def __repr__(self) -> str:
        return f"IExtension({self.label})"


def make_extension(sub: FiniteRng, amb: FiniteRng, embed: RngHom, label: str = "") -> IExtension:
    if not (same_ring(embed.source, sub) and same_ring(embed.target, amb)):
        raise ValueError("embedding endpoints do not match the given rings")
    if not embed.is_injective:
        raise NotIdealError(("embed-injective", -1, -1), "embedding must be injective")
    mask = np.zeros(amb.size, dtype=bool)
    mask[embed.map] = True
    witness = kernels.ideal_violation(amb.add, amb.mul, amb.zero, mask, kernels.negation_vector(amb.add, amb.zero))
    if witness is not None:
        raise NotIdealError(witness, f"image of {sub.label} is not an ideal of {amb.label}")
    return IExtension(sub=sub, amb=amb, embed=embed, label=label or f"{sub.label}<{amb.label}")


def subring_extension(r: FiniteRng, members, label: str = "") -> IExtension:
    """Package an ideal of r as a ring in its own right, with its embedding."""
    idx = np.asarray(sorted(int(m) for m in members), dtype=np.int64)
    sub_add = _reindex(r.add, idx)
    sub_mul = _reindex(r.mul, idx)
    zero_pos = int(np.searchsorted(idx, r.zero))
    if zero_pos >= len(idx) or idx[zero_pos] != r.zero:
        raise NotIdealError(("zero", r.zero, -1))
    sub_label = label or _ideal_label(members, r)
    sub = make_rng(sub_add, sub_mul, zero=zero_pos, label=sub_label)
    embed = make_hom(sub, r, idx, label=f"embed:{sub_label}")
    return make_extension(sub, r, embed)


def _reindex(table: np.ndarray, idx: np.ndarray) -> np.ndarray:
    pos = np.full(table.shape[0], -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    sub = pos[table[np.ix_(idx, idx)]]
    if (sub < 0).any():
        raise NotIdealError(("closure", -1, -1), "member set is not closed under the operation")
    return sub


def _ideal_label(members, r: FiniteRng) -> str:
    ms = sorted(int(m) for m in members)
    shown = ",".join(str(m) for m in ms[:4]) + (",.." if len(ms) > 4 else "")
    return f"({shown}){r.label}"


def ideal_subrng(r: FiniteRng, gens) -> IExtension:
    """The ideal of r generated by gens, repackaged as an embedded sub-ring."""
    gens = sorted(int(g) for g in gens)
    for g in gens:
        if not 0 <= g < r.size:
            raise ValueError(f"generator {g} out of range for {r.label}")
    seed = kernels.absorb_seed_mask(r.mul, gens)
    mask = kernels.additive_closure_mask(r.add, seed, r.zero)
    members = [int(x) for x in np.flatnonzero(mask)]
    shown = ",".join(str(g) for g in gens[:4]) + (",.." if len(gens) > 4 else "")
    return subring_extension(r, members, label=f"({shown or '0'}){r.label}")


def quotient(r: FiniteRng, members) -> tuple[FiniteRng, RngHom]:
    """Coset ring of r by an ideal, with the canonical surjection."""
    mask = np.zeros(r.size, dtype=bool)
    mask[np.asarray(sorted(int(m) for m in members), dtype=np.int64)] = True
    witness = kernels.ideal_violation(r.add, r.mul, r.zero, mask, r.neg())
    if witness is not None:
        raise NotIdealError(witness, f"quotient of {r.label} by a non-ideal")
    idx = np.flatnonzero(mask)
    rep = np.full(r.size, -1, dtype=np.int64)
    for x in range(r.size):
        if rep[x] < 0:
            rep[r.add[x, idx]] = x  # x is minimal in its coset
    reps = np.flatnonzero(rep == np.arange(r.size))
    cidx = np.full(r.size, -1, dtype=np.int64)
    cidx[reps] = np.arange(len(reps))
    proj = cidx[rep]
    qadd = proj[r.add[np.ix_(reps, reps)]]
    qmul = proj[r.mul[np.ix_(reps, reps)]]
    q = make_rng(qadd, qmul, zero=int(proj[r.zero]), label=f"{r.label}/|{len(idx)}|")
    pr = make_hom(r, q, proj, label=f"proj:{r.label}")
    return q, pr


def unitization(s: FiniteRng, m: int) -> IExtension:
    """Adjoin Z_m to s: pairs (x, a) with (x,a)(y,b) = (xy + b*x + a*y, ab).

    m must be a multiple of the additive exponent of s so that integer
    scaling of elements is well defined modulo m. The result is unital with
    identity (0, 1), and s sits inside as the ideal s x {0}.
    """
    exp = additive_exponent(s)
    if m < 1 or m % exp != 0:
        raise ValueError(f"modulus {m} is not a multiple of the additive exponent {exp}")
    key = ("unitization", m)
    if key in s._cache:
        return s._cache[key]
    n = s.size * m
    if n > config.MAX_RING_SIZE:
        raise SizeLimitError(f"unitization size {n} exceeds limit {config.MAX_RING_SIZE}")
    ar = np.arange(s.size)
    scale = np.zeros((m, s.size), dtype=np.int64)  # scale[k, x] = k*x
    scale[0, :] = s.zero
    for k in range(1, m):
        scale[k] = s.add[scale[k - 1], ar]
    X = np.repeat(np.arange(s.size), m)
    A = np.tile(np.arange(m), s.size)
    sx, sy = X[:, None], X[None, :]
    aa, ab = A[:, None], A[None, :]
    add = s.add[sx, sy] * m + (aa + ab) % m
    sprod = s.add[s.add[s.mul[sx, sy], scale[ab, sx]], scale[aa, sy]]
    mul = sprod * m + (aa * ab) % m
    zero = s.zero * m
    u = make_rng(add, mul, zero=int(zero), label=f"U{m}({s.label})")
    expected_one = s.zero * m + (1 % m)
    if u.identity != expected_one:
        raise RingAxiomError(("identity", u.identity, expected_one), "unitization identity is not (0,1)")
    embed = make_hom(s, u, np.arange(s.size) * m, label=f"embed:{s.label}")
    ext = make_extension(s, u, embed, label=f"{s.label}<U{m}")
    s._cache[key] = ext
    return ext


def unitization_reduction(big: IExtension, small: IExtension) -> RngHom:
    """Coordinatewise reduction U_m2(s) -> U_m1(s) for m1 | m2."""
    s = big.sub
    if not same_ring(small.sub, s):
        raise ValueError("reductions require the same sub-ring presentation")
    m2 = big.amb.size // s.size
    m1 = small.amb.size // s.size
    if m1 < 1 or m2 % m1 != 0:
        raise ValueError(f"modulus {m1} does not divide {m2}")
    X = np.repeat(np.arange(s.size), m2)
    A = np.tile(np.arange(m2), s.size)
    return make_hom(big.amb, small.amb, X * m1 + A % m1, label=f"red:U{m2}->U{m1}({s.label})")


@dataclass(frozen=True, eq=False)
class EMorphism:
    """A unital homomorphism of ambient rings carrying sub-ideal to sub-ideal."""

    hom: RngHom
    src: IExtension
    dst: IExtension
    label: str = ""

    @property
    def fixes_sub(self) -> bool:
        """True when src and dst share the sub-ring object and the morphism
        restricts to its identity (the fixed-sub-ring subcategory)."""
        if not same_ring(self.src.sub, self.dst.sub):
            return False
        return bool(np.array_equal(self.hom.map[self.src.embed.map], self.dst.embed.map))

    @property
    def is_surjective(self) -> bool:
        return self.hom.is_surjective

    def __repr__(self) -> str:
        return f"EMorphism({self.label or self.hom!r})"


def check_e_morphism(h: RngHom, src: IExtension, dst: IExtension, label: str = "") -> EMorphism:
    """Validate h as a morphism of pairs; raises NotEMorphismError with a
    counterexample element otherwise."""
    if not (same_ring(h.source, src.amb) and same_ring(h.target, dst.amb)):
        raise NotEMorphismError("endpoints", None)
    if not (src.is_e_object and dst.is_e_object):
        raise NotEMorphismError("ambient rings must be unital", None)
    if not h.is_unital:
        raise NotEMorphismError("not unital", src.amb.identity)
    img = frozenset(int(h.map[x]) for x in src.embed.map)
    want = frozenset(int(x) for x in dst.embed.map)
    if img != want:
        diff = sorted(img.symmetric_difference(want))
        raise NotEMorphismError("image of sub-ideal differs from target sub-ideal", diff[0])
    return EMorphism(hom=h, src=src, dst=dst, label=label or f"{src.label}->{dst.label}")


def enumerate_homs(a: FiniteRng, b: FiniteRng, unital: bool = False,
                   node_budget: Optional[int] = None) -> list[RngHom]:
    """All ring homomorphisms a -> b, by backtracking over images of a small
    additive generating set; each completed map is validated exhaustively."""
    if unital and (a.identity is None or b.identity is None):
        return []
    budget = node_budget if node_budget is not None else config.HOM_SEARCH_NODE_BUDGET
    counter = [0]
    first = [a.identity] if unital and a.identity != a.zero else []
    gens = _additive_generators(a, first)
    results: list[np.ndarray] = []
    mask0 = np.zeros(a.size, dtype=bool)
    mask0[a.zero] = True
    map0 = np.full(a.size, -1, dtype=TABLE_DTYPE)
    map0[a.zero] = b.zero
    _hom_extend(a, b, unital, gens, 0, mask0, map0, results, counter, budget)
    results.sort(key=lambda mv: tuple(int(v) for v in mv))
    return [RngHom(a, b, _freeze(mv), label=f"hom{i}:{a.label}->{b.label}") for i, mv in enumerate(results)]


def _additive_generators(r: FiniteRng, first: list[int]) -> list[int]:
    mask = np.zeros(r.size, dtype=bool)
    mask[r.zero] = True
    gens: list[int] = []
    for x in list(first) + list(range(r.size)):
        if not mask[x]:
            gens.append(int(x))
            seed = mask.copy()
            seed[x] = True
            mask = kernels.additive_closure_mask(r.add, seed, r.zero)
    return gens


def _hom_extend(a, b, unital, gens, gi, mask, mapv, results, counter, budget):
    counter[0] += 1
    if counter[0] > budget:
        raise SearchBudgetError(f"homomorphism search exceeded {budget} nodes")
    if gi == len(gens):
        witness = kernels.hom_violation(mapv, a.add, a.mul, b.add, b.mul, a.zero, b.zero)
        if witness is None and (not unital or int(mapv[a.identity]) == b.identity):
            results.append(mapv.copy())
        return
    g = gens[gi]
    # relative order: least k with k*g already in the current subgroup
    k0 = 1
    p = g
    while not mask[p]:
        p = int(a.add[p, g])
        k0 += 1
    anchor_image = int(mapv[p])
    if unital and g == a.identity:
        candidates = [b.identity]
    else:
        candidates = range(b.size)
    members = np.flatnonzero(mask)
    member_images = mapv[members]
    for y in candidates:
        # consistency: k0*y must hit the already-chosen image of k0*g
        q = int(y)
        for _ in range(k0 - 1):
            q = int(b.add[q, y])
        if q != anchor_image:
            continue
        nmask = mask.copy()
        nmap = mapv.copy()
        tg, ty = g, int(y)
        for _ in range(k0 - 1):
            elts = a.add[members, tg]
            vals = b.add[member_images, ty]
            nmap[elts] = vals
            nmask[elts] = True
            tg = int(a.add[tg, g])
            ty = int(b.add[ty, y])
        _hom_extend(a, b, unital, gens, gi + 1, nmask, nmap, results, counter, budget)


def find_isomorphism(a: FiniteRng, b: FiniteRng) -> Optional[RngHom]:
    """A ring isomorphism a -> b found by exhaustive search, or None."""
    if a.size != b.size:
        return None
    unital = a.is_unital and b.is_unital
    if a.is_unital != b.is_unital:
        return None
    for h in enumerate_homs(a, b, unital=unital):
        if h.is_injective and h.is_surjective:
            return h
    return None
