"""Finite T0 spaces via their specialization order.

The relation x <= y means y lies in the closure of {x}; for spectra this is
ideal inclusion. Closed sets are exactly the up-sets, so the order carries
the whole topology and the constructor stores only its reflexive-transitive
closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Optional

from .errors import SizeLimitError, VerificationFault
from .ideals import kernel_of, spectrum
from .rng import FiniteRng

Point = Hashable


class FiniteSpace:
    def __init__(self, points: Iterable[Point], pairs: Iterable[tuple[Point, Point]]):
        self.points: tuple[Point, ...] = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate points")
        up = {p: {p} for p in self.points}
        for x, y in pairs:
            up[x].add(y)
        # reflexive-transitive closure; antisymmetry is NOT forced here so
        # that defective relations can be detected by is_spectral.
        changed = True
        while changed:
            changed = False
            for p in self.points:
                grown = set(up[p])
                for q in up[p]:
                    grown |= up[q]
                if grown != up[p]:
                    up[p] = grown
                    changed = True
        self._up = {p: frozenset(s) for p, s in up.items()}

    def leq(self, x: Point, y: Point) -> bool:
        return y in self._up[x]

    def up_set(self, x: Point) -> frozenset:
        return self._up[x]

    def closure(self, subset) -> frozenset:
        out = set()
        for p in subset:
            out |= self._up[p]
        return frozenset(out)

    def is_dense(self, subset) -> bool:
        return self.closure(subset) == frozenset(self.points)

    def is_open(self, subset) -> bool:
        """Open iff the complement is an up-set, i.e. the subset is a down-set."""
        sub = frozenset(subset)
        return all(q in sub for p in sub for q in self.points if self.leq(q, p))

    def is_closed(self, subset) -> bool:
        sub = frozenset(subset)
        return self.closure(sub) == sub

    def open_sets(self, limit: int = 16) -> list[frozenset]:
        if len(self.points) > limit:
            raise SizeLimitError(f"too many points ({len(self.points)}) to list all open sets")
        opens = []
        n = len(self.points)
        for bits in range(1 << n):
            sub = frozenset(self.points[i] for i in range(n) if bits >> i & 1)
            if self.is_open(sub):
                opens.append(sub)
        return opens

    def induced_order_pairs(self, subset) -> list[tuple[Point, Point]]:
        sub = list(subset)
        return [(p, q) for p in sub for q in sub if self.leq(p, q)]

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"FiniteSpace({len(self.points)} points)"


@dataclass(eq=False)
class SpaceMap:
    source: FiniteSpace
    target: FiniteSpace
    mapping: dict
    label: str = ""

    def __call__(self, p: Point) -> Point:
        return self.mapping[p]

    def image(self) -> frozenset:
        return frozenset(self.mapping[p] for p in self.source.points)

    def is_continuous(self) -> bool:
        """Monotone w.r.t. specialization, which is continuity here."""
        return all(
            self.target.leq(self.mapping[p], self.mapping[q])
            for p in self.source.points
            for q in self.source.up_set(p)
        )

    def is_injective(self) -> bool:
        return len(self.image()) == len(self.source.points)

    def compose(self, inner: "SpaceMap") -> "SpaceMap":
        if inner.target is not self.source and set(inner.target.points) != set(self.source.points):
            raise ValueError("composition mismatch")
        return SpaceMap(inner.source, self.target,
                        {p: self.mapping[inner.mapping[p]] for p in inner.source.points},
                        label=f"{self.label}*{inner.label}")

    def inverse(self) -> "SpaceMap":
        if not self.is_injective() or len(self.image()) != len(self.target.points):
            raise ValueError("only bijections invert")
        return SpaceMap(self.target, self.source,
                        {v: k for k, v in self.mapping.items()}, label=f"inv:{self.label}")


def spec_space(r: FiniteRng) -> FiniteSpace:
    """The spectrum of r ordered by inclusion; points are member frozensets.

    Construction asserts that order closure and hull-kernel closure agree on
    every subset (exhaustively up to 12 points).
    """
    if "spec_space" in r._cache:
        return r._cache["spec_space"]
    primes = spectrum(r)
    points = [p.members for p in primes]
    pairs = [(a, b) for a in points for b in points if a <= b]
    space = FiniteSpace(points, pairs)
    if len(points) <= 12:
        _assert_hull_kernel(r, space, primes)
    r._cache["spec_space"] = space
    return space


def _assert_hull_kernel(r: FiniteRng, space: FiniteSpace, primes) -> None:
    bitmasks = []
    for p in primes:
        m = 0
        for x in p.members:
            m |= 1 << x
        bitmasks.append(m)
    full = (1 << r.size) - 1
    n = len(primes)
    for bits in range(1 << n):
        chosen = [i for i in range(n) if bits >> i & 1]
        ker = full
        for i in chosen:
            ker &= bitmasks[i]
        hull = frozenset(primes[i].members for i in range(n) if bitmasks[i] & ker == ker)
        order_closure = space.closure([primes[i].members for i in chosen])
        if hull != order_closure:
            raise VerificationFault(
                f"hull-kernel closure disagrees with specialization closure in {r.label}")


@dataclass(frozen=True)
class SpectralReport:
    ok: bool
    t0: bool
    compact: bool = True
    sober: bool = True
    coherent: bool = True
    cycle: Optional[tuple] = None

    def describe(self) -> str:
        if self.ok:
            return "finite T0: compact, sober and coherent hold automatically"
        return f"not T0: cycle {self.cycle}"


def is_spectral(x: FiniteSpace) -> SpectralReport:
    """Finite spaces are spectral exactly when T0, i.e. antisymmetric."""
    for p, q in combinations(x.points, 2):
        if x.leq(p, q) and x.leq(q, p):
            return SpectralReport(ok=False, t0=False, cycle=(p, q))
    return SpectralReport(ok=True, t0=True)


def homeomorphic(f: SpaceMap) -> bool:
    """True iff f is a bijective order isomorphism."""
    if len(f.source.points) != len(f.target.points) or not f.is_injective():
        return False
    return all(
        f.source.leq(p, q) == f.target.leq(f.mapping[p], f.mapping[q])
        for p in f.source.points
        for q in f.source.points
    )


def strongly_continuous(f: SpaceMap) -> bool:
    """Preimages of compact opens are compact opens; on finite spaces every
    open is compact, so this iterates the full open-set lattice literally."""
    for u in f.target.open_sets():
        pre = frozenset(p for p in f.source.points if f.mapping[p] in u)
        if not f.source.is_open(pre):
            return False
    return True


def open_onto_image(f: SpaceMap) -> bool:
    """Each open of the source maps to an open of the image subspace."""
    img = list(f.image())
    for u in f.source.open_sets():
        fu = frozenset(f.mapping[p] for p in u)
        # open in the subspace order on the image: a down-set of it
        for p in img:
            for q in img:
                if f.target.leq(p, q) and q in fu and p not in fu:
                    return False
    return True


def to_dot(space: FiniteSpace, name: str = "spectrum") -> str:
    """Deterministic DOT rendering: one node per point, edges on cover pairs."""
    def fmt(p) -> str:
        if isinstance(p, frozenset):
            return "{" + ",".join(str(v) for v in sorted(p)) + "}"
        return str(p)

    order = sorted(range(len(space.points)), key=lambda i: fmt(space.points[i]))
    index = {space.points[i]: f"p{rank}" for rank, i in enumerate(order)}
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for rank, i in enumerate(order):
        lines.append(f'  p{rank} [label="{fmt(space.points[i])}"];')
    for i in order:
        p = space.points[i]
        for q in space.points:
            if p is q or not space.leq(p, q):
                continue
            # covering pair: nothing strictly between
            strict_between = any(
                r not in (p, q) and space.leq(p, r) and space.leq(r, q)
                for r in space.points)
            if not strict_between:
                lines.append(f"  {index[p]} -> {index[q]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
