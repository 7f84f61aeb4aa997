"""The property suite: every structural claim, run over the whole corpus.

Each check produces one record; failures carry witnesses instead of raising
so a corrupted corpus (see the mutation flag) yields a readable report.
Output is byte-deterministic for a fixed seed: no timestamps or durations
appear in the rendered report.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

import numpy as np

from . import booleanrng, config, kernels
from .corpus import Corpus, CorpusConfig, build_corpus
from .errors import NilspecError
from .ideals import (
    Ideal,
    enumerate_ideals,
    generated_ideal,
    nilradical,
    spectrum,
    vanishing,
)
from .nilcomp import (
    canonical_extension,
    compare_compactifications,
    eta,
    modulus_independence,
    nc_of_hom,
    nilcompactification,
    psi_spec,
    q_of_hom,
    reduce_mod_nil,
    spec_open_checks,
    universal_arrow,
    verify_naturality,
)
from .rng import additive_exponent, quotient
from .spaces import homeomorphic, spec_space


@dataclass(frozen=True)
class CheckRecord:
    name: str
    instance: str
    ok: bool
    witness: str = ""

    def render(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" {self.witness}" if self.witness and not self.ok else ""
        return f"CHECK {self.name} {self.instance} {status}{tail}"


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)
    seed: int = 0
    corpus_summary: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.ok]

    @property
    def all_ok(self) -> bool:
        return not self.failures

    def records_named(self, *prefixes: str) -> list[CheckRecord]:
        return [r for r in self.records if any(r.name.startswith(p) for p in prefixes)]

    def render_text(self) -> str:
        lines = [r.render() for r in self.records]
        counts = self.corpus_summary
        lines.append(
            f"SUMMARY total={self.total} pass={self.total - len(self.failures)} "
            f"fail={len(self.failures)} seed={self.seed} "
            f"rings={counts.get('rings', 0)} extensions={counts.get('extensions', 0)} "
            f"morphisms={counts.get('morphisms', 0)} subjects={counts.get('unitization_subjects', 0)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "corpus": self.corpus_summary,
            "checks": [
                {"name": r.name, "instance": r.instance,
                 "status": "PASS" if r.ok else "FAIL", "witness": r.witness}
                for r in self.records
            ],
            "summary": {
                "total": self.total,
                "pass": self.total - len(self.failures),
                "fail": len(self.failures),
            },
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _guard(records: list[CheckRecord], name: str, instance: str, fn) -> None:
    """Run one check; fn returns (ok, witness) or raises a package error."""
    try:
        ok, witness = fn()
    except NilspecError as exc:
        records.append(CheckRecord(name, instance, False, str(exc)))
        return
    records.append(CheckRecord(name, instance, bool(ok), "" if ok else witness))


def run_suite(cfg: CorpusConfig | None = None) -> VerificationReport:
    cfg = cfg or CorpusConfig()
    corpus = build_corpus(cfg)
    report = VerificationReport(seed=cfg.seed, corpus_summary=corpus.summary())
    rec = report.records

    for broken, witness in corpus.broken_rings:
        rec.append(CheckRecord("ring-axioms", broken.label, False, f"witness {witness}"))
    for r in corpus.rings:
        _ring_checks(rec, r)
    for ext in corpus.extensions:
        _extension_checks(rec, ext)
    for m in corpus.morphisms:
        _morphism_checks(rec, m)
    for sub, native_ext in corpus.unit_subjects:
        _unit_subject_checks(rec, sub, native_ext)
    _boolean_checks(rec, cfg.seed)
    return report


# ---------------------------------------------------------------- rings


def _ring_checks(rec: list[CheckRecord], r) -> None:
    _guard(rec, "ring-axioms", r.label, lambda: (True, ""))

    def nil_two_routes():
        nilradical(r)  # internally rechecks nilpotents against the prime kernel
        return True, ""

    _guard(rec, "nilradical-two-routes", r.label, nil_two_routes)

    if r.size <= 8:
        def oracle():
            ours = {i.members for i in enumerate_ideals(r)}
            naive = set(_naive_ideals(r))
            if ours != naive:
                return False, f"enumerated {len(ours)} ideals, naive filter found {len(naive)}"
            return True, ""

        _guard(rec, "ideal-enumeration-oracle", r.label, oracle)

    def semiprime():
        reduced, _ = quotient(r, nilradical(r).members)
        left = nilradical(reduced).members
        if left != frozenset({reduced.zero}):
            return False, f"quotient by the nilradical still has nilpotents {sorted(left)}"
        return True, ""

    _guard(rec, "semiprime-after-reduction", r.label, semiprime)

    def discrete():
        primes = spectrum(r)
        for p, q in itertools.combinations(primes, 2):
            if p.members < q.members or q.members < p.members:
                return False, f"comparable primes {sorted(p.members)} and {sorted(q.members)}"
        return True, ""

    _guard(rec, "spectrum-discrete", r.label, discrete)

    def hull_kernel():
        spec_space(r)  # construction asserts closure agreement on all subsets
        return True, ""

    _guard(rec, "hull-kernel-closure", r.label, hull_kernel)

    def vanishing_generated():
        primes = spectrum(r)
        for i in enumerate_ideals(r):
            if vanishing(r, i) != vanishing(r, generated_ideal(r, i.members)):
                return False, f"vanishing set changed by regeneration of {i.describe()}"
        for a in range(r.size):
            d = {p.members for p in primes if a not in p.members}
            v = {p.members for p in vanishing(r, generated_ideal(r, [a]))}
            if d != {p.members for p in primes} - v:
                return False, f"basic open of {a} is not the complement of its vanishing set"
        return True, ""

    _guard(rec, "basic-open-vanishing", r.label, vanishing_generated)


def _naive_ideals(r) -> list[frozenset]:
    out = []
    elements = list(range(r.size))
    for bits in range(1 << r.size):
        members = frozenset(x for x in elements if bits >> x & 1)
        if not members:
            continue
        mask = np.zeros(r.size, dtype=bool)
        mask[sorted(members)] = True
        if kernels.ideal_violation(r.add, r.mul, r.zero, mask, r.neg()) is None:
            out.append(members)
    return out


# ------------------------------------------------------------ extensions


def _extension_checks(rec: list[CheckRecord], ext) -> None:
    _guard(rec, "transfer-laws", ext.label, lambda: (psi_spec(ext) is not None, ""))

    def identities():
        rep = spec_open_checks(ext)
        return rep.ok, rep.witness

    _guard(rec, "subspectrum-identities", ext.label, identities)

    def compactification():
        nilcompactification(ext)  # asserts embedding, density, spectrality
        return True, ""

    _guard(rec, "compactification-invariants", ext.label, compactification)


# ------------------------------------------------------------- morphisms


def _morphism_checks(rec: list[CheckRecord], m) -> None:
    def squares():
        rep = verify_naturality(m)
        return rep.ok, rep.witness

    _guard(rec, "naturality-squares", m.label, squares)

    if m.fixes_sub:
        def injective():
            return q_of_hom(m).is_injective, "descended map is not injective"

        _guard(rec, "descended-injective", m.label, injective)

        def triangle():
            ncm = nc_of_hom(m)
            src_nc = nilcompactification(m.src)
            dst_nc = nilcompactification(m.dst)
            for p in spectrum(m.src.sub):
                if ncm.mapping[dst_nc.lam.mapping[p.members]] != src_nc.lam.mapping[p.members]:
                    return False, f"triangle fails at prime {sorted(p.members)}"
            return True, ""

        _guard(rec, "embedding-triangle", m.label, triangle)

        def dense():
            ncm = nc_of_hom(m)
            return (nilcompactification(m.src).nc_space.is_dense(ncm.image()),
                    "induced image is not dense")

        _guard(rec, "induced-dense-image", m.label, dense)

        if m.is_surjective:
            def iso():
                qh = q_of_hom(m)
                if not (qh.is_injective and qh.is_surjective):
                    return False, "descended map is not bijective"
                return homeomorphic(nc_of_hom(m)), "induced map is not a homeomorphism"

            _guard(rec, "surjective-descends-to-iso", m.label, iso)


# ------------------------------------------------------ unitization suite


def _unit_subject_checks(rec: list[CheckRecord], sub, native_ext) -> None:
    label = sub.label

    def arrow_unique():
        universal_arrow(sub, native_ext)  # uniqueness asserted inside
        universal_arrow(sub, canonical_extension(sub))
        return True, ""

    _guard(rec, "unit-arrow-unique", label, arrow_unique)

    exp = additive_exponent(sub)

    def independence(mult):
        def inner():
            rep = modulus_independence(sub, exp, mult * exp)
            return rep.ok, f"modulus {exp} vs {mult * exp} changed the compactification"
        return inner

    _guard(rec, "modulus-independence-2x", label, independence(2))
    _guard(rec, "modulus-independence-3x", label, independence(3))

    def nil_quotient():
        rep = reduce_mod_nil(sub)
        return rep.ok, "compactification changed after quotienting the nilradical"

    _guard(rec, "nil-quotient-compactification", label, nil_quotient)

    def eta_bounds():
        res = eta(sub, native_ext)
        if not res.contains_spectrum:
            return False, "canonical image misses part of the embedded spectrum"
        if not res.dense:
            return False, "canonical image is not dense"
        if not res.subspace_spectral:
            return False, "canonical image subspace is not T0"
        return True, ""

    _guard(rec, "eta-bounds", label, eta_bounds)

    def canonical_compare():
        arrow = universal_arrow(sub, native_ext)
        rep = compare_compactifications(arrow)
        witness = ""
        if not rep.eta_antitone_ok:
            witness = "canonical image grew along the arrow"
        elif not rep.triangle_ok:
            witness = "embedding triangle broke"
        elif not rep.dense_image_ok:
            witness = "induced image is not dense"
        elif rep.surjective and not rep.homeomorphism_ok:
            witness = "surjective arrow did not induce a homeomorphism"
        return rep.ok, witness

    _guard(rec, "canonical-comparison", label, canonical_compare)

    def minimal_when_hausdorff():
        # finite compactified spectra are discrete, hence Hausdorff; the
        # canonical one is then the smallest: each image fills it entirely
        res = eta(sub, native_ext)
        nc0 = nilcompactification(canonical_extension(sub))
        return (res.points == frozenset(nc0.nc_space.points),
                "canonical compactification not minimal despite being Hausdorff")

    _guard(rec, "canonical-minimal-hausdorff", label, minimal_when_hausdorff)


# --------------------------------------------------------- boolean witness


def _boolean_checks(rec: list[CheckRecord], seed: int) -> None:
    def transfer_grid():
        rnd = random.Random(seed)
        universe = list(range(8))
        grid = [frozenset(c) for k in range(9) for c in itertools.combinations(universe, k)]
        for trial in range(1000):
            a = frozenset(x for x in universe if rnd.random() < 0.4)
            alpha = rnd.randrange(-10, 11)
            p = booleanrng.UPair(a, alpha)
            decision = booleanrng.psi0_decide(p)
            brute = all(booleanrng.transfer_action(p, x) == frozenset() for x in grid)
            if decision.member != brute:
                return False, f"trial {trial}: decision {decision.member} vs brute {brute}"
            if not decision.member:
                if booleanrng.transfer_action(p, decision.witness) == frozenset():
                    return False, f"trial {trial}: witness does not separate"
        return True, ""

    _guard(rec, "bool-transfer-decision", "B", transfer_grid)

    def point_laws():
        for n in range(6):
            bad = booleanrng.prime_at(n).law_sample(400, seed + n)
            if bad is not None:
                return False, f"point {n} failed {bad[0]} on {sorted(bad[1])},{sorted(bad[2])}"
        return True, ""

    _guard(rec, "bool-point-laws", "B", point_laws)

    def covers():
        rnd = random.Random(seed)
        for trial in range(100):
            cover = [frozenset(rnd.randrange(0, 30) for _ in range(rnd.randrange(0, 5)))
                     for _ in range(rnd.randrange(0, 7))]
            cert = booleanrng.noncompactness_witness(cover)
            if any(cert.missed_point in x for x in cover):
                return False, f"trial {trial}: witness inside the cover"
        return True, ""

    _guard(rec, "bool-noncompactness", "B", covers)

    def infinity():
        cert = booleanrng.infinity_point_count(seed)
        return cert.count == 1, cert.describe()

    _guard(rec, "bool-one-point-at-infinity", "B", infinity)

    def truncations():
        for n in range(0, 13):
            r = booleanrng.truncate(n)
            primes = spectrum(r)
            if len(primes) != n:
                return False, f"power-set ring on {n} atoms has {len(primes)} primes"
            for p, q in itertools.combinations(primes, 2):
                if p.members < q.members or q.members < p.members:
                    return False, f"comparable primes in the power-set ring on {n} atoms"
        return True, ""

    _guard(rec, "bool-truncation-spectra", "B", truncations)
