"""The rng of finite subsets of the naturals, and its unit extension.

Spec of this rng is an infinite discrete space, so nothing here enumerates
ideals; everything is a total decision procedure plus seeded law sampling.
Addition is symmetric difference, multiplication is intersection; every
element is idempotent and 2x = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .errors import SizeLimitError
from .rng import FiniteRng, make_rng

FinSet = frozenset


def finset(items: Iterable[int]) -> FinSet:
    out = frozenset(int(i) for i in items)
    if any(i < 0 for i in out):
        raise ValueError("members must be naturals")
    return out


def bool_add(x: FinSet, y: FinSet) -> FinSet:
    return x ^ y


def bool_mul(x: FinSet, y: FinSet) -> FinSet:
    return x & y


def int_scale(alpha: int, x: FinSet) -> FinSet:
    """alpha*x in a characteristic-2 rng: x for odd alpha, empty for even."""
    return x if alpha % 2 else frozenset()


class UPair(NamedTuple):
    """Element (a, alpha) of the unit extension: finite set plus integer."""

    a: FinSet
    alpha: int


def u_add(p: UPair, q: UPair) -> UPair:
    return UPair(bool_add(p.a, q.a), p.alpha + q.alpha)


def u_mul(p: UPair, q: UPair) -> UPair:
    part = bool_add(bool_add(bool_mul(p.a, q.a), int_scale(q.alpha, p.a)), int_scale(p.alpha, q.a))
    return UPair(part, p.alpha * q.alpha)


def transfer_action(p: UPair, x: FinSet) -> FinSet:
    """The product of (a, alpha) with (x, 0), first coordinate: ax + alpha*x."""
    return bool_add(bool_mul(p.a, x), int_scale(p.alpha, x))


@dataclass(frozen=True)
class PrimeAt:
    """The prime ideal of sets omitting n; these are the points of the spectrum."""

    n: int

    def __contains__(self, x: FinSet) -> bool:
        return self.n not in x

    def law_sample(self, samples: int, seed: int, universe: int = 24) -> Optional[tuple]:
        """Sampled ideal and primality laws; returns a counterexample or None."""
        rnd = random.Random(seed)
        for _ in range(samples):
            x = _random_set(rnd, universe)
            y = _random_set(rnd, universe)
            if x in self and y in self and bool_add(x, y) not in self:
                return ("add", x, y)
            if y in self and bool_mul(x, y) not in self:
                return ("absorb", x, y)
            if bool_mul(x, y) in self and x not in self and y not in self:
                return ("prime", x, y)
        return None


def prime_at(n: int) -> PrimeAt:
    if n < 0:
        raise ValueError("points are indexed by naturals")
    return PrimeAt(n)


def _random_set(rnd: random.Random, universe: int) -> FinSet:
    size = rnd.randrange(0, 6)
    return frozenset(rnd.randrange(0, universe) for _ in range(size))


@dataclass(frozen=True)
class TransferDecision:
    member: bool
    witness: Optional[FinSet] = None

    def describe(self) -> str:
        if self.member:
            return "member"
        return f"nonmember, witness x={sorted(self.witness)}"


def psi0_decide(p: UPair) -> TransferDecision:
    """Decide membership of (a, alpha) in the transfer of the zero ideal:
    the pair annihilates every x exactly when a is empty and alpha is even.
    Nonmembership comes with an explicit x that it fails to annihilate."""
    if not p.a and p.alpha % 2 == 0:
        return TransferDecision(True)
    if p.alpha % 2 == 0:
        # even scaling vanishes, so x = a is moved to a itself
        return TransferDecision(False, witness=p.a)
    fresh = (max(p.a) + 1) if p.a else 0
    witness = frozenset([fresh])
    return TransferDecision(False, witness=witness)


@dataclass(frozen=True)
class NonCompactness:
    missed_point: int
    cover_size: int

    def describe(self) -> str:
        return (f"point {self.missed_point} of the spectrum avoids all "
                f"{self.cover_size} basic opens of the cover")


def noncompactness_witness(cover: list[FinSet]) -> NonCompactness:
    """Every finite family of basic opens misses a point: return n outside
    the union, so the prime of sets omitting n avoids each basic open."""
    union = frozenset().union(*cover) if cover else frozenset()
    n_star = (max(union) + 1) if union else 0
    # the point of sets omitting n lies in the basic open of x iff n is in x
    for x in cover:
        if n_star in x:
            raise AssertionError("internal: witness landed inside the cover")
    return NonCompactness(missed_point=n_star, cover_size=len(cover))


@dataclass(frozen=True)
class InfinityCertificate:
    count: int
    coset_table_ok: bool
    samples: int

    def describe(self) -> str:
        return (f"{self.count} point beyond the spectrum: the unit extension "
                f"modulo (sets x even integers) is the two-element field "
                f"(coset arithmetic sampled {self.samples} times: "
                f"{'ok' if self.coset_table_ok else 'FAILED'})")


def coset_parity(p: UPair) -> int:
    """Class of (a, alpha) modulo the ideal of pairs with even integer part."""
    return p.alpha % 2


def infinity_point_count(seed: int = 0, samples: int = 200) -> InfinityCertificate:
    """Exactly one point lies over the ideal generated by the embedded rng:
    cosets modulo (sets x even integers) are classified by integer parity,
    their arithmetic is the two-element field, and a field has one prime."""
    rnd = random.Random(seed)
    ok = True
    for _ in range(samples):
        p = UPair(_random_set(rnd, 16), rnd.randrange(-10, 11))
        q = UPair(_random_set(rnd, 16), rnd.randrange(-10, 11))
        if coset_parity(u_add(p, q)) != coset_parity(p) ^ coset_parity(q):
            ok = False
            break
        if coset_parity(u_mul(p, q)) != (coset_parity(p) & coset_parity(q)):
            ok = False
            break
        # membership in the quotiented ideal is decided by parity alone
        if (coset_parity(p) == 0) != (p.alpha % 2 == 0):
            ok = False
            break
    return InfinityCertificate(count=1 if ok else 0, coset_table_ok=ok, samples=samples)


def truncate(n: int) -> FiniteRng:
    """The power-set ring of {0..n-1} as explicit tables (size 2^n).

    The identity is the full set; this is the finite cross-check target for
    the decision procedures above.
    """
    if n < 0 or n > 12:
        raise SizeLimitError("truncation is supported for 0 <= n <= 12")
    size = 1 << n
    ar = np.arange(size, dtype=np.int64)
    add = ar[:, None] ^ ar[None, :]
    mul = ar[:, None] & ar[None, :]
    return make_rng(add, mul, zero=0, label=f"Pow{n}")
