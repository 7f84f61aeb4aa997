import numpy as np
import pytest

import oracles
from nilspec import (
    build_product,
    build_zmod,
    canonical_extension,
    check_e_morphism,
    compare_compactifications,
    enumerate_homs,
    eta,
    find_isomorphism,
    ideal_subrng,
    make_hom,
    modulus_independence,
    nc_of_hom,
    nilcompactification,
    nilradical,
    psi,
    psi_spec,
    q_of_hom,
    reduce_mod_nil,
    spec_open_checks,
    spectrum,
    unitization,
    universal_arrow,
    verify_naturality,
)
from nilspec.nilcomp import PsiMap
from nilspec.rng import additive_exponent, unitization_reduction


@pytest.fixture
def evens12():
    return ideal_subrng(build_zmod(12), [2])


@pytest.fixture
def evens8():
    return ideal_subrng(build_zmod(8), [2])


@pytest.fixture
def corner22():
    # Z2 x {0} inside Z2 x Z2; generator (1,0) has index 2
    return ideal_subrng(build_product(build_zmod(2), build_zmod(2)), [2])


def test_transfer_of_nilradical_evens12(evens12):
    nil = nilradical(evens12.sub)
    assert evens12.push(nil.members) == frozenset({0, 6})
    got = psi(evens12, nil).members
    assert got == frozenset({0, 3, 6, 9})
    assert got == oracles.naive_transfer(evens12, nil.members)


def test_transfer_of_whole_subring_is_everything(evens12):
    got = psi(evens12, frozenset(range(evens12.sub.size)))
    assert got.members == frozenset(range(12))


def test_transfer_of_zero_in_split_pair(corner22):
    got = psi(corner22, frozenset({corner22.sub.zero}))
    # the annihilator of Z2 x {0} is {0} x Z2, indices 0 and 1
    assert got.members == frozenset({0, 1})
    assert got.members == oracles.naive_transfer(corner22, {corner22.sub.zero})


def test_psi_map_caches_per_ideal(evens12):
    pm = PsiMap(evens12)
    first = pm.of(frozenset({evens12.sub.zero}))
    assert pm.of({evens12.sub.zero}) is first


def test_psi_spec_evens12(evens12):
    m = psi_spec(evens12)
    (p,) = spectrum(evens12.sub)
    assert m.mapping[p.members] == frozenset({0, 3, 6, 9})


def test_psi_spec_empty_spectrum(evens8):
    m = psi_spec(evens8)
    assert m.mapping == {}


def test_psi_spec_is_identity_when_sub_is_whole_ring():
    z12 = build_zmod(12)
    ext = ideal_subrng(z12, [1])
    m = psi_spec(ext)
    assert all(k == v for k, v in m.mapping.items())


def test_spec_open_checks_pass_on_examples(evens12, evens8):
    assert spec_open_checks(evens12).ok
    assert spec_open_checks(evens8).ok
    whole = ideal_subrng(build_zmod(12), [1])
    assert spec_open_checks(whole).ok


def test_subspectrum_of_evens12_is_the_prime_over_three(evens12):
    z12 = build_zmod(12)
    image = frozenset(int(v) for v in evens12.embed.map)
    sub_spectrum = {q.members for q in spectrum(z12) if not image <= q.members}
    assert sub_spectrum == {frozenset({0, 3, 6, 9})}


def test_nilcompactification_evens12(evens12):
    nr = nilcompactification(evens12)
    assert find_isomorphism(nr.q_ring, build_zmod(3)) is not None
    assert len(nr.nc_space) == 1
    assert len(nr.lam.mapping) == 1  # bijective onto the single point


def test_nilcompactification_nil_rng_is_empty(evens8):
    nr = nilcompactification(evens8)
    assert nr.q_ring.size == 1
    assert len(nr.nc_space) == 0


def test_nilcompactification_split_pair(corner22):
    nr = nilcompactification(corner22)
    assert find_isomorphism(nr.q_ring, build_zmod(2)) is not None
    assert len(nr.nc_space) == 1


def test_q_of_hom_identity_is_identity(evens12):
    z12 = build_zmod(12)
    ident = check_e_morphism(make_hom(z12, z12, np.arange(12)), evens12, evens12)
    qh = q_of_hom(ident)
    assert np.array_equal(qh.map, np.arange(qh.source.size))


def test_q_of_hom_reduction_collapses_to_zero_ring(evens12):
    z4 = build_zmod(4)
    h = enumerate_homs(build_zmod(12), z4, unital=True)[0]
    em = check_e_morphism(h, evens12, ideal_subrng(z4, [2]))
    qh = q_of_hom(em)
    assert qh.source.size == 3 and qh.target.size == 1
    assert qh.is_surjective and not qh.is_injective


def test_q_of_hom_unitization_reduction_is_bijective(evens12):
    s = evens12.sub
    big, small = unitization(s, 12), unitization(s, 6)
    em = check_e_morphism(unitization_reduction(big, small), big, small)
    qh = q_of_hom(em)
    assert qh.is_injective and qh.is_surjective


def test_naturality_identity(evens12):
    z12 = build_zmod(12)
    ident = check_e_morphism(make_hom(z12, z12, np.arange(12)), evens12, evens12)
    assert verify_naturality(ident).ok


def test_naturality_reduction_with_degenerate_target(evens12):
    z4 = build_zmod(4)
    h = enumerate_homs(build_zmod(12), z4, unital=True)[0]
    em = check_e_morphism(h, evens12, ideal_subrng(z4, [2]))
    rep = verify_naturality(em)
    assert rep.ok  # the embedding square is vacuous: the target spectrum is empty


def test_naturality_of_universal_arrow(evens12):
    arrow = universal_arrow(evens12.sub, evens12)
    assert verify_naturality(arrow).ok


def test_universal_arrow_evens12_is_sum_map(evens12):
    arrow = universal_arrow(evens12.sub, evens12)
    u_ext = arrow.src
    m = u_ext.amb.size // evens12.sub.size
    assert m == 12  # lcm of exponent 6 and the order 12 of 1 mod 12
    for x in range(evens12.sub.size):
        for a in range(m):
            idx = x * m + a
            expected = (int(evens12.embed.map[x]) + a) % 12
            assert int(arrow.hom.map[idx]) == expected


def test_universal_arrow_to_canonical_extension_is_identity(evens12):
    s = evens12.sub
    can = canonical_extension(s)
    arrow = universal_arrow(s, can)
    assert arrow.src.amb.size == can.amb.size
    assert np.array_equal(arrow.hom.map, np.arange(can.amb.size))


def test_universal_arrow_split_pair(corner22):
    s = corner22.sub
    arrow = universal_arrow(s, corner22)
    m = arrow.src.amb.size // s.size
    assert m == 2
    amb = corner22.amb
    for x in range(s.size):
        for a in range(m):
            got = int(arrow.hom.map[x * m + a])
            one_mult = amb.zero if a == 0 else amb.identity
            assert got == int(amb.add[corner22.embed.map[x], one_mult])


def test_modulus_independence_examples(evens12, corner22):
    assert modulus_independence(evens12.sub, 6, 12).ok
    zero = ideal_subrng(build_zmod(1), []).sub
    assert modulus_independence(zero, 1, 2).ok
    assert modulus_independence(corner22.sub, 2, 4).ok


def test_reduce_mod_nil_examples(evens12, evens8):
    already_reduced = build_zmod(6)
    rep = reduce_mod_nil(already_reduced)
    assert rep.ok and rep.nc_points == rep.reduced_nc_points
    rep8 = reduce_mod_nil(evens8.sub)
    assert rep8.ok and rep8.nc_points == 0
    rep12 = reduce_mod_nil(evens12.sub)
    assert rep12.ok and rep12.nc_points == 1


def test_eta_examples(evens12, corner22):
    res = eta(evens12.sub, evens12)
    assert res.ok and len(res.points) == 1
    can = canonical_extension(evens12.sub)
    res_can = eta(evens12.sub, can)
    assert res_can.ok and res_can.points == frozenset(
        nilcompactification(can).nc_space.points)
    res22 = eta(corner22.sub, corner22)
    assert res22.ok and len(res22.points) == 1


def test_compare_compactifications_on_unitization_reduction(evens12):
    s = evens12.sub
    big, small = unitization(s, 12), unitization(s, 6)
    em = check_e_morphism(unitization_reduction(big, small), big, small)
    rep = compare_compactifications(em)
    assert rep.ok and rep.surjective and rep.homeomorphism_ok
    assert eta(s, big).points == eta(s, small).points


def test_compare_compactifications_identity(evens12):
    z12 = build_zmod(12)
    ident = check_e_morphism(make_hom(z12, z12, np.arange(12)), evens12, evens12)
    rep = compare_compactifications(ident)
    assert rep.ok
    assert eta(evens12.sub, evens12).points == eta(evens12.sub, evens12).points


def test_nc_of_hom_is_strongly_continuous_by_construction(evens12):
    arrow = universal_arrow(evens12.sub, evens12)
    ncm = nc_of_hom(arrow)  # raises on any failure
    assert len(ncm.mapping) == len(nilcompactification(arrow.dst).nc_space)


def test_canonical_extension_of_z6_has_36_elements():
    z6 = build_zmod(6)
    assert canonical_extension(z6).amb.size == 36
    assert additive_exponent(z6) == 6
