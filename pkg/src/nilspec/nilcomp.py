"""Compactification of the spectrum of an embedded ideal.

Given a pair (S, R) with S an ideal of R, the transfer map sends an ideal I
of S to {x in R : xS inside I}. Quotienting R by the transfer of the
nilradical of S yields a ring whose spectrum compactifies Spec S; the
embedding sends a prime P to the coset image of its transfer.

Every operation here re-verifies, on the concrete instance, the structural
laws it relies on (primality of transfers, injectivity, round trips,
density, uniqueness of unit-extension arrows, ...). Failures raise
VerificationFault with a witness: they mean corrupt tables or a bug, never
a legitimate outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import NotHomomorphismError, VerificationFault
from .ideals import Ideal, is_prime, nilradical, spectrum
from .rng import (
    EMorphism,
    FiniteRng,
    IExtension,
    RngHom,
    additive_exponent,
    check_e_morphism,
    enumerate_homs,
    make_hom,
    quotient,
    same_ring,
    subring_extension,
    unitization,
    unitization_reduction,
)
from .spaces import (
    SpaceMap,
    homeomorphic,
    is_spectral,
    open_onto_image,
    spec_space,
    strongly_continuous,
)


class PsiMap:
    """The ideal-transfer map of one extension, with cached images."""

    def __init__(self, ext: IExtension):
        self.ext = ext
        self._images: dict[frozenset, Ideal] = {}

    def of(self, members) -> Ideal:
        key = frozenset(int(m) for m in members)
        if key not in self._images:
            ext = self.ext
            target = np.zeros(ext.amb.size, dtype=bool)
            pushed = sorted(ext.push(key))
            if pushed:
                target[np.asarray(pushed, dtype=np.int64)] = True
            mask = kernels.psi_mask(ext.amb.mul, ext.image_indices(), target)
            ideal = Ideal(ext.amb, frozenset(int(x) for x in np.flatnonzero(mask)))
            witness = kernels.ideal_violation(
                ext.amb.add, ext.amb.mul, ext.amb.zero, mask, ext.amb.neg())
            if witness is not None:
                raise VerificationFault(f"transfer of an ideal is not an ideal in {ext.label}: {witness}")
            self._images[key] = ideal
        return self._images[key]


def psi(ext: IExtension, i) -> Ideal:
    """Transfer an ideal of the sub-ring to an ideal of the ambient ring."""
    members = i.members if isinstance(i, Ideal) else i
    if "psimap" not in ext._cache:
        ext._cache["psimap"] = PsiMap(ext)
    return ext._cache["psimap"].of(members)


def psi_spec(ext: IExtension) -> SpaceMap:
    """The transfer map on spectra, P -> psi(P), with its laws asserted:

    each transfer is prime and omits the sub-ideal; the map is injective;
    primes of the ambient ring not containing the sub-ideal pull back and
    round-trip; and transfer commutes with the kernel intersection.
    """
    sub, amb = ext.sub, ext.amb
    spec_sub = spectrum(sub)
    spec_amb = spectrum(amb)
    amb_points = {p.members for p in spec_amb}
    sub_points = {p.members for p in spec_sub}
    image_set = frozenset(int(x) for x in ext.embed.map)
    mapping = {}
    for p in spec_sub:
        img = psi(ext, p.members)
        res = is_prime(amb, img)
        if not res.is_prime:
            raise VerificationFault(
                f"{ext.label}: transfer of prime {sorted(p.members)} is not prime ({res.reason} {res.witness})")
        if image_set <= img.members:
            raise VerificationFault(
                f"{ext.label}: transfer of {sorted(p.members)} contains the whole sub-ideal")
        if img.members not in amb_points:
            raise VerificationFault(f"{ext.label}: transfer image missing from the ambient spectrum")
        mapping[p.members] = img.members
    if len(set(mapping.values())) != len(mapping):
        raise VerificationFault(f"{ext.label}: transfer map on primes is not injective")
    for q in spec_amb:
        if image_set <= q.members:
            continue
        pulled = ext.pull_back(q.members)
        if pulled not in sub_points:
            raise VerificationFault(
                f"{ext.label}: contraction of {sorted(q.members)} is not a prime of the sub-ring")
        if psi(ext, pulled).members != q.members:
            raise VerificationFault(
                f"{ext.label}: contraction of {sorted(q.members)} does not round-trip")
    nil_sub = nilradical(sub)
    lhs = psi(ext, nil_sub.members).members
    if spec_sub:
        rhs = frozenset.intersection(*[mapping[p.members] for p in spec_sub])
    else:
        rhs = frozenset(range(amb.size))
    if lhs != rhs:
        raise VerificationFault(f"{ext.label}: transfer does not commute with the kernel intersection")
    m = SpaceMap(spec_space(sub), spec_space(amb), mapping, label=f"psi:{ext.label}")
    if not m.is_continuous():
        raise VerificationFault(f"{ext.label}: transfer map on spectra is not monotone")
    return m


@dataclass(frozen=True)
class SubspectrumReport:
    """Outcomes of the literal set identities behind continuity and openness
    of the spectrum embedding."""

    preimage_identity_ok: bool
    image_identity_ok: bool
    union_identity_ok: bool
    image_characterized_ok: bool
    open_ok: bool
    closure_ok: bool
    witness: str = ""

    @property
    def ok(self) -> bool:
        return (self.preimage_identity_ok and self.image_identity_ok
                and self.union_identity_ok and self.image_characterized_ok
                and self.open_ok and self.closure_ok)


def spec_open_checks(ext: IExtension) -> SubspectrumReport:
    sub, amb = ext.sub, ext.amb
    spec_sub = spectrum(sub)
    spec_amb = spectrum(amb)
    image_set = frozenset(int(x) for x in ext.embed.map)
    transfer = {p.members: psi(ext, p.members).members for p in spec_sub}
    inv = {int(v): i for i, v in enumerate(ext.embed.map)}
    emb = ext.embed.map
    witness = ""

    preimage_ok = True
    for r in range(amb.size):
        lhs = frozenset(p.members for p in spec_sub if r not in transfer[p.members])
        rhs = set()
        for s in range(sub.size):
            rs = inv[int(amb.mul[r, emb[s]])]
            rhs |= {p.members for p in spec_sub if rs not in p.members}
        if lhs != frozenset(rhs):
            preimage_ok = False
            witness = witness or f"preimage identity fails at ambient element {r}"
            break

    image_total = frozenset(transfer.values())
    image_ok = True
    for s in range(sub.size):
        lhs = frozenset(transfer[p.members] for p in spec_sub if s not in p.members)
        rhs = frozenset(q for q in image_total if int(emb[s]) not in q)
        if lhs != rhs:
            image_ok = False
            witness = witness or f"image identity fails at sub element {s}"
            break

    subspectrum = frozenset(q.members for q in spec_amb if not image_set <= q.members)
    union = set()
    for s in range(sub.size):
        union |= {q.members for q in spec_amb if int(emb[s]) not in q.members}
    union_ok = subspectrum == frozenset(union)
    characterized_ok = image_total == subspectrum

    space_amb = spec_space(amb)
    open_ok = space_amb.is_open(subspectrum)
    nil_transfer = psi(ext, nilradical(sub).members).members
    vanish = frozenset(q.members for q in spec_amb if q.members >= nil_transfer)
    closure_ok = space_amb.closure(subspectrum) == vanish
    if not union_ok and not witness:
        witness = "sub-spectrum is not the union of its basic opens"
    if not characterized_ok and not witness:
        witness = "transfer image differs from the primes omitting the sub-ideal"
    if not open_ok and not witness:
        witness = "sub-spectrum is not open"
    if not closure_ok and not witness:
        witness = "closure of the sub-spectrum differs from the vanishing set of the nil transfer"
    return SubspectrumReport(preimage_ok, image_ok, union_ok, characterized_ok,
                             open_ok, closure_ok, witness)


@dataclass(eq=False)
class NilcompResult:
    """The compactified spectrum of one extension with its embedding data."""

    ext: IExtension
    q_ring: FiniteRng
    theta: RngHom
    nc_space: object
    lam: SpaceMap
    psi_nil: Ideal
    sub_nilradical: Ideal

    def describe(self) -> str:
        return (f"quotient {self.q_ring.label} (size {self.q_ring.size}), "
                f"{len(self.nc_space)} point(s), embeds {len(self.lam.source.points)} prime(s)")


def nilcompactification(ext: IExtension) -> NilcompResult:
    """Quotient the ambient ring by the transferred nilradical and embed the
    sub-ring spectrum densely and openly into the quotient spectrum."""
    if "nilcomp" in ext._cache:
        return ext._cache["nilcomp"]
    if not ext.is_e_object:
        raise ValueError(f"{ext.label}: ambient ring must be unital")
    sub, amb = ext.sub, ext.amb
    nil_sub = nilradical(sub)
    psi_nil = psi(ext, nil_sub.members)
    q, theta = quotient(amb, psi_nil.members)
    ncs = spec_space(q)
    nc_points = set(ncs.points)
    mapping = {}
    for p in spectrum(sub):
        img = psi(ext, p.members)
        if not psi_nil.members <= img.members:
            raise VerificationFault(f"{ext.label}: transfer not monotone over the nilradical")
        pt = frozenset(int(theta.map[x]) for x in img.members)
        if pt not in nc_points:
            raise VerificationFault(f"{ext.label}: embedded prime missing from the compactified spectrum")
        mapping[p.members] = pt
    lam = SpaceMap(spec_space(sub), ncs, mapping, label=f"lambda:{ext.label}")
    if not lam.is_injective():
        raise VerificationFault(f"{ext.label}: spectrum embedding is not injective")
    if not lam.is_continuous():
        raise VerificationFault(f"{ext.label}: spectrum embedding is not continuous")
    if not open_onto_image(lam):
        raise VerificationFault(f"{ext.label}: spectrum embedding is not open onto its image")
    if not ncs.is_dense(lam.image()):
        raise VerificationFault(f"{ext.label}: embedded spectrum is not dense")
    rep = is_spectral(ncs)
    if not rep.ok:
        raise VerificationFault(f"{ext.label}: compactified spectrum is not spectral: {rep.describe()}")
    image_set = frozenset(int(x) for x in ext.embed.map)
    for qp in spectrum(amb):
        if image_set <= qp.members and psi_nil.members <= qp.members:
            raise VerificationFault(
                f"{ext.label}: a prime contains both the sub-ideal and the transferred nilradical")
    out = NilcompResult(ext=ext, q_ring=q, theta=theta, nc_space=ncs, lam=lam,
                        psi_nil=psi_nil, sub_nilradical=nil_sub)
    ext._cache["nilcomp"] = out
    return out


def q_of_hom(m: EMorphism) -> RngHom:
    """Descend a pair morphism to the compactifying quotients.

    Well-definedness (the morphism maps one transferred nilradical into the
    other) is checked exhaustively; failure is a hard fault.
    """
    nr1 = nilcompactification(m.src)
    nr2 = nilcompactification(m.dst)
    h = m.hom
    for x in nr1.psi_nil.members:
        if int(h.map[x]) not in nr2.psi_nil.members:
            raise VerificationFault(
                f"{m.label}: element {x} of the transferred nilradical escapes the target one")
    theta1, theta2 = nr1.theta, nr2.theta
    reps = np.full(nr1.q_ring.size, -1, dtype=np.int64)
    for x in range(m.src.amb.size):
        c = int(theta1.map[x])
        if reps[c] < 0:
            reps[c] = x
    qmap = theta2.map[h.map[reps]]
    mismatch = np.flatnonzero(theta2.map[h.map] != qmap[theta1.map])
    if mismatch.size:
        raise VerificationFault(f"{m.label}: quotient map not well defined at element {int(mismatch[0])}")
    try:
        return make_hom(nr1.q_ring, nr2.q_ring, qmap, label=f"Q({m.label})")
    except NotHomomorphismError as exc:
        raise VerificationFault(f"{m.label}: quotient map is not a homomorphism: {exc.witness}") from exc


def nc_of_hom(m: EMorphism) -> SpaceMap:
    """The induced (contravariant) map between compactified spectra."""
    qh = q_of_hom(m)
    nr1 = nilcompactification(m.src)
    nr2 = nilcompactification(m.dst)
    nc1_points = set(nr1.nc_space.points)
    mapping = {}
    for p2 in nr2.nc_space.points:
        mask2 = np.zeros(nr2.q_ring.size, dtype=bool)
        mask2[np.asarray(sorted(p2), dtype=np.int64)] = True
        pre = frozenset(int(x) for x in np.flatnonzero(mask2[qh.map]))
        if pre not in nc1_points:
            raise VerificationFault(f"{m.label}: preimage of a prime is not a prime")
        mapping[p2] = pre
    out = SpaceMap(nr2.nc_space, nr1.nc_space, mapping, label=f"NC({m.label})")
    if not strongly_continuous(out):
        raise VerificationFault(f"{m.label}: induced spectrum map is not strongly continuous")
    return out


@dataclass(frozen=True)
class NaturalityReport:
    theta_ok: bool
    psi_ok: bool
    lambda_ok: bool
    j_ok: bool
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.theta_ok and self.psi_ok and self.lambda_ok and self.j_ok


def verify_naturality(m: EMorphism) -> NaturalityReport:
    """Check the four commuting squares attached to a pair morphism:
    with the quotient projections, with the ideal transfer on primes, with
    the spectrum embeddings, and with the inclusion of the transferred
    nilradicals."""
    h = m.hom
    nr1 = nilcompactification(m.src)
    nr2 = nilcompactification(m.dst)
    qh = q_of_hom(m)
    witness = ""

    theta_ok = bool(np.array_equal(qh.map[nr1.theta.map], nr2.theta.map[h.map]))
    if not theta_ok:
        bad = int(np.flatnonzero(qh.map[nr1.theta.map] != nr2.theta.map[h.map])[0])
        witness = f"projection square fails at ambient element {bad}"

    sub1, sub2 = m.src.sub, m.dst.sub
    emb1, emb2 = m.src.embed.map, m.dst.embed.map
    spec2 = spectrum(sub2)
    sub1_points = {p.members for p in spectrum(sub1)}
    psi_ok = True
    pulled_of: dict[frozenset, frozenset] = {}
    for p in spec2:
        target = m.dst.push(p.members)
        pulled = frozenset(
            s1 for s1 in range(sub1.size) if int(h.map[emb1[s1]]) in target)
        pulled_of[p.members] = pulled
        if pulled not in sub1_points:
            psi_ok = False
            witness = witness or f"contraction of {sorted(p.members)} is not a prime of the source sub-ring"
            break
        psi2p = psi(m.dst, p.members).members
        lhs = frozenset(x for x in range(m.src.amb.size) if int(h.map[x]) in psi2p)
        rhs = psi(m.src, pulled).members
        if lhs != rhs:
            psi_ok = False
            witness = witness or f"transfer square fails at prime {sorted(p.members)}"
            break

    lambda_ok = True
    if psi_ok:
        ncm = nc_of_hom(m)
        for p in spec2:
            lhs_pt = ncm.mapping[nr2.lam.mapping[p.members]]
            rhs_pt = nr1.lam.mapping[pulled_of[p.members]]
            if lhs_pt != rhs_pt:
                lambda_ok = False
                witness = witness or f"embedding square fails at prime {sorted(p.members)}"
                break
    else:
        lambda_ok = False

    j_ok = True
    for x in sorted(nr1.psi_nil.members):
        if int(h.map[x]) not in nr2.psi_nil.members:
            j_ok = False
            witness = witness or f"nil-transfer inclusion square fails at element {x}"
            break
    if j_ok:
        chi_src = subring_extension(m.src.amb, nr1.psi_nil.members)
        chi_dst = subring_extension(m.dst.amb, nr2.psi_nil.members)
        inv2 = {int(v): i for i, v in enumerate(chi_dst.embed.map)}
        try:
            chi = make_hom(chi_src.sub, chi_dst.sub,
                           [inv2[int(h.map[v])] for v in chi_src.embed.map],
                           label=f"chi({m.label})")
            commutes = all(
                int(chi_dst.embed.map[chi.map[i]]) == int(h.map[chi_src.embed.map[i]])
                for i in range(chi_src.sub.size))
            if not commutes:
                j_ok = False
                witness = witness or "nil-transfer square does not commute"
        except NotHomomorphismError as exc:
            j_ok = False
            witness = witness or f"restricted map on nil transfers is not a homomorphism: {exc.witness}"

    return NaturalityReport(theta_ok, psi_ok, lambda_ok, j_ok, witness)


def canonical_extension(s: FiniteRng) -> IExtension:
    """The least unital extension: adjoin integers modulo the additive exponent."""
    return unitization(s, additive_exponent(s))


def universal_arrow(s: FiniteRng, ext: IExtension) -> EMorphism:
    """The unique unital arrow from a unitization of s into an extension of s
    that fixes s pointwise; uniqueness is re-verified by exhaustive search."""
    if not same_ring(ext.sub, s):
        raise ValueError("extension must be over the given sub-ring presentation")
    if not ext.is_e_object:
        raise ValueError("target ambient ring must be unital")
    if "universal_arrow" in ext._cache:
        return ext._cache["universal_arrow"]
    amb = ext.amb
    ord_one = int(kernels.additive_order_vector(amb.add, amb.zero)[amb.identity])
    m = math.lcm(additive_exponent(s), ord_one)
    u_ext = unitization(s, m)
    one_mult = np.zeros(m, dtype=np.int64)
    for a in range(1, m):
        one_mult[a] = amb.add[one_mult[a - 1], amb.identity]
    big_x = np.repeat(np.arange(s.size), m)
    big_a = np.tile(np.arange(m), s.size)
    umap = amb.add[ext.embed.map[big_x], one_mult[big_a]]
    u = make_hom(u_ext.amb, amb, umap, label=f"u:{u_ext.amb.label}->{amb.label}")
    arrow = check_e_morphism(u, u_ext, ext, label=f"u[{ext.label}]")
    if not arrow.fixes_sub:
        raise VerificationFault(f"{ext.label}: unit-extension arrow does not fix the sub-ring")
    fixing = [
        hom for hom in enumerate_homs(u_ext.amb, amb, unital=True)
        if np.array_equal(hom.map[u_ext.embed.map], ext.embed.map)
    ]
    if len(fixing) != 1 or not np.array_equal(fixing[0].map, umap):
        raise VerificationFault(
            f"{ext.label}: expected exactly one unital arrow fixing the sub-ring, found {len(fixing)}")
    ext._cache["universal_arrow"] = arrow
    return arrow


@dataclass(frozen=True)
class ModulusReport:
    m_small: int
    m_big: int
    quotients_isomorphic: bool
    spectra_homeomorphic: bool

    @property
    def ok(self) -> bool:
        return self.quotients_isomorphic and self.spectra_homeomorphic


def modulus_independence(s: FiniteRng, m1: int, m2: int) -> ModulusReport:
    """The compactification does not depend on the unitization modulus:
    the reduction between the two unitizations descends to a ring
    isomorphism and a homeomorphism of compactified spectra."""
    if m2 % m1 != 0:
        raise ValueError("the small modulus must divide the big one")
    ext1 = unitization(s, m1)
    ext2 = unitization(s, m2)
    red = unitization_reduction(ext2, ext1)
    em = check_e_morphism(red, ext2, ext1, label=f"red[{s.label}:{m2}->{m1}]")
    if not em.fixes_sub:
        raise VerificationFault(f"{s.label}: modulus reduction does not fix the sub-ring")
    qh = q_of_hom(em)
    iso = qh.is_injective and qh.is_surjective
    ncm = nc_of_hom(em)
    return ModulusReport(m1, m2, iso, homeomorphic(ncm))


@dataclass(frozen=True)
class NilQuotientReport:
    homeomorphic: bool
    nc_points: int
    reduced_nc_points: int

    @property
    def ok(self) -> bool:
        return self.homeomorphic


def reduce_mod_nil(s: FiniteRng) -> NilQuotientReport:
    """The canonical compactification of s and of s modulo its nilradical are
    homeomorphic, via the unitization of the reduction surjection."""
    nil = nilradical(s)
    t, proj = quotient(s, nil.members)
    m = additive_exponent(s)
    can_s = canonical_extension(s)
    lift_target = unitization(t, m)
    big_x = np.repeat(np.arange(s.size), m)
    big_a = np.tile(np.arange(m), s.size)
    lift = make_hom(can_s.amb, lift_target.amb, proj.map[big_x] * m + big_a,
                    label=f"U{m}({proj.label})")
    em = check_e_morphism(lift, can_s, lift_target, label=f"U[{s.label}->red]")
    qh = q_of_hom(em)
    if not (qh.is_injective and qh.is_surjective):
        raise VerificationFault(f"{s.label}: lifted reduction does not descend to an isomorphism")
    nc_lift = nc_of_hom(em)
    can_t = canonical_extension(t)
    red = unitization_reduction(lift_target, can_t)
    em2 = check_e_morphism(red, lift_target, can_t, label=f"red[{t.label}]")
    nc_red = nc_of_hom(em2)
    composite = nc_lift.compose(nc_red)
    ok = homeomorphic(composite)
    return NilQuotientReport(ok, len(nilcompactification(can_s).nc_space),
                             len(nilcompactification(can_t).nc_space))


@dataclass(eq=False)
class EtaResult:
    """Image of one compactification inside the canonical one."""

    base_ext: IExtension
    other_ext: IExtension
    arrow: EMorphism
    points: frozenset
    contains_spectrum: bool
    dense: bool
    subspace_spectral: bool

    @property
    def ok(self) -> bool:
        return self.contains_spectrum and self.dense and self.subspace_spectral


def eta(s: FiniteRng, ext: IExtension) -> EtaResult:
    """Push the compactified spectrum of ext through the unit-extension arrow
    into the canonical compactification and record its image."""
    key = "eta"
    if key in ext._cache:
        return ext._cache[key]
    can = canonical_extension(s)
    nc0 = nilcompactification(can)
    arrow = universal_arrow(s, ext)
    nc_arrow = nc_of_hom(arrow)  # NC(ext) -> NC(U_m)
    red = unitization_reduction(arrow.src, can)
    em_red = check_e_morphism(red, arrow.src, can, label=f"red[{s.label}]")
    nc_red = nc_of_hom(em_red)  # NC(can) -> NC(U_m)
    if not homeomorphic(nc_red):
        raise VerificationFault(f"{s.label}: modulus bridge is not a homeomorphism")
    bridge = nc_red.inverse()
    points = frozenset(bridge.mapping[nc_arrow.mapping[p]]
                       for p in nilcompactification(ext).nc_space.points)
    lam0_image = frozenset(nc0.lam.mapping.values())
    contains = lam0_image <= points
    dense = nc0.nc_space.is_dense(points)
    sub_pairs = nc0.nc_space.induced_order_pairs(points)
    spectral = not any(a != b and (b, a) in sub_pairs for a, b in sub_pairs)
    out = EtaResult(base_ext=can, other_ext=ext, arrow=arrow, points=points,
                    contains_spectrum=contains, dense=dense, subspace_spectral=spectral)
    ext._cache[key] = out
    return out


@dataclass(frozen=True)
class ComparisonReport:
    eta_antitone_ok: bool
    triangle_ok: bool
    dense_image_ok: bool
    surjective: bool
    homeomorphism_ok: Optional[bool]

    @property
    def ok(self) -> bool:
        base = self.eta_antitone_ok and self.triangle_ok and self.dense_image_ok
        if self.surjective:
            return base and bool(self.homeomorphism_ok)
        return base


def compare_compactifications(m: EMorphism) -> ComparisonReport:
    """For a morphism between extensions of the same sub-ring: the canonical
    images shrink along it, the induced map commutes with both embeddings,
    has dense image, and is a homeomorphism when the morphism is onto."""
    if not m.fixes_sub:
        raise ValueError("comparison requires a morphism fixing the sub-ring")
    s = m.src.sub
    eta_src = eta(s, m.src)
    eta_dst = eta(s, m.dst)
    antitone = eta_dst.points <= eta_src.points
    nr_src = nilcompactification(m.src)
    nr_dst = nilcompactification(m.dst)
    ncm = nc_of_hom(m)
    triangle = all(
        ncm.mapping[nr_dst.lam.mapping[p.members]] == nr_src.lam.mapping[p.members]
        for p in spectrum(s))
    dense = nr_src.nc_space.is_dense(ncm.image())
    surj = m.is_surjective
    homeo = homeomorphic(ncm) if surj else None
    return ComparisonReport(antitone, triangle, dense, surj, homeo)
