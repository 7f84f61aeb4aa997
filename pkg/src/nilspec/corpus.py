"""The built-in verification corpus.

Rings: all integers mod n up to a bound, plus two-factor products within a
size budget. Extensions: every ideal of every corpus ring, repackaged as an
embedded sub-ring. Morphisms: unital homomorphisms found by search between
small ambient rings whenever they carry one sub-ideal onto another, plus
the constructed unitization reductions and unit-extension arrows. Subjects
for the unitization suite are the distinct sub-rings within an exponent
budget.

Everything is built in a fixed order so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import config
from .errors import NilspecError
from .ideals import enumerate_ideals, ideal_violation
from .nilcomp import universal_arrow
from .rng import (
    EMorphism,
    FiniteRng,
    IExtension,
    additive_exponent,
    build_product,
    build_zmod,
    check_e_morphism,
    enumerate_homs,
    subring_extension,
    unitization,
    unitization_reduction,
)


@dataclass
class CorpusConfig:
    zmod_max: int = 24
    product_cap: int = 36
    unitization_cap: int = 144     # sub size times additive exponent
    hom_ring_cap: int = 12         # ambient size bound for morphism search
    max_morphisms: int = 400
    seed: int = 0
    mutate: bool = False
    ring_docs: list | None = None  # replaces the built-in base rings


@dataclass
class Corpus:
    rings: list[FiniteRng] = field(default_factory=list)
    broken_rings: list[tuple[FiniteRng, tuple]] = field(default_factory=list)
    extensions: list[IExtension] = field(default_factory=list)
    morphisms: list[EMorphism] = field(default_factory=list)
    unit_subjects: list[tuple[FiniteRng, IExtension]] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "rings": len(self.rings) + len(self.broken_rings),
            "extensions": len(self.extensions),
            "morphisms": len(self.morphisms),
            "unitization_subjects": len(self.unit_subjects),
        }


def _base_rings(cfg: CorpusConfig) -> list[FiniteRng]:
    if cfg.ring_docs is not None:
        from .specs import build_ring

        return [build_ring(doc) for doc in cfg.ring_docs]
    rings = [build_zmod(n) for n in range(1, cfg.zmod_max + 1)]
    for a in range(2, cfg.product_cap + 1):
        for b in range(a, cfg.product_cap // a + 1):
            rings.append(build_product(build_zmod(a), build_zmod(b)))
    return rings


def _mutate_first_usable(rings: list[FiniteRng]) -> list[FiniteRng]:
    """Corrupt one multiplication entry of the first big-enough ring,
    bypassing validation; the verify suite must catch it."""
    out = []
    done = False
    for r in rings:
        if not done and r.size >= 3:
            mul = np.array(r.mul)
            mul[1, 2] = (mul[1, 2] + 1) % r.size
            mul[2, 1] = mul[1, 2]
            mul.setflags(write=False)
            out.append(FiniteRng(size=r.size, add=r.add, mul=mul, zero=r.zero,
                                 identity=r.identity, label=r.label + "!mutated"))
            done = True
        else:
            out.append(r)
    return out


def build_corpus(cfg: CorpusConfig) -> Corpus:
    from . import kernels

    corpus = Corpus()
    rings = _base_rings(cfg)
    if cfg.mutate:
        rings = _mutate_first_usable(rings)

    for r in rings:
        if r.size <= config.EXHAUSTIVE_VALIDATE_LIMIT:
            witness = kernels.validate_tables(r.add, r.mul, r.zero)
        else:
            witness = kernels.sampled_law_violation(r.add, r.mul, r.zero,
                                                    config.SAMPLED_VALIDATE_TRIPLES, cfg.seed)
        if witness is None:
            corpus.rings.append(r)
        else:
            corpus.broken_rings.append((r, witness))

    for r in corpus.rings:
        for ideal in enumerate_ideals(r):
            corpus.extensions.append(subring_extension(r, ideal.members))

    seen_subjects: set[bytes] = set()
    for ext in corpus.extensions:
        sig = ext.sub.table_signature()
        if sig in seen_subjects:
            continue
        seen_subjects.add(sig)
        if ext.sub.size * additive_exponent(ext.sub) <= cfg.unitization_cap:
            corpus.unit_subjects.append((ext.sub, ext))

    corpus.morphisms = _discover_morphisms(cfg, corpus)
    return corpus


def _discover_morphisms(cfg: CorpusConfig, corpus: Corpus) -> list[EMorphism]:
    # constructed arrows first: unitization reductions and unit-extension
    # arrows are the load-bearing instances, the search only adds breadth
    morphisms: list[EMorphism] = []
    for sub, native_ext in corpus.unit_subjects:
        exp = additive_exponent(sub)
        try:
            u1 = unitization(sub, exp)
            u2 = unitization(sub, 2 * exp)
            u3 = unitization(sub, 3 * exp)
        except NilspecError:
            continue
        for big, small in ((u2, u1), (u3, u1)):
            red = unitization_reduction(big, small)
            morphisms.append(check_e_morphism(
                red, big, small, label=f"{red.label}[{big.label}=>{small.label}]"))
        morphisms.append(universal_arrow(sub, native_ext))

    by_ring: dict[int, list[IExtension]] = {}
    for ext in corpus.extensions:
        by_ring.setdefault(id(ext.amb), []).append(ext)
    small_rings = [r for r in corpus.rings if r.size <= cfg.hom_ring_cap and r.is_unital]
    for r1 in small_rings:
        for r2 in small_rings:
            if len(morphisms) >= cfg.max_morphisms:
                return morphisms
            for hom in enumerate_homs(r1, r2, unital=True):
                for src in by_ring.get(id(r1), []):
                    image = frozenset(int(hom.map[x]) for x in src.embed.map)
                    if ideal_violation(r2, image) is not None:
                        continue
                    for dst in by_ring.get(id(r2), []):
                        if frozenset(int(x) for x in dst.embed.map) != image:
                            continue
                        morphisms.append(check_e_morphism(
                            hom, src, dst, label=f"{hom.label}[{src.label}=>{dst.label}]"))
                        if len(morphisms) >= cfg.max_morphisms:
                            return morphisms
    return morphisms
