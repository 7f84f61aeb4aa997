import numpy as np
import pytest

import oracles
from nilspec import (
    NotEMorphismError,
    NotIdealError,
    RingAxiomError,
    SizeLimitError,
    additive_exponent,
    build_product,
    build_table,
    build_zmod,
    check_e_morphism,
    enumerate_homs,
    find_identity,
    find_isomorphism,
    ideal_subrng,
    make_hom,
    quotient,
    subring_extension,
    unitization,
)
from nilspec.ideals import enumerate_ideals
from nilspec.rng import unitization_reduction


def test_zmod_zero_ring():
    z1 = build_zmod(1)
    assert z1.size == 1
    assert z1.identity == 0  # 0 acts as identity in the zero ring


def test_zmod_rejects_zero_modulus():
    with pytest.raises(SizeLimitError):
        build_zmod(0)


@pytest.mark.parametrize("n", [2, 4, 6, 12])
def test_zmod_tables_are_modular_arithmetic(n):
    r = build_zmod(n)
    for i in range(n):
        for j in range(n):
            assert r.add[i, j] == (i + j) % n
            assert r.mul[i, j] == (i * j) % n
    assert r.identity == (1 if n > 1 else 0)


def test_zmod4_has_square_zero_element():
    r = build_zmod(4)
    assert r.mul[2, 2] == 0


def test_product_z2_z3_isomorphic_to_z6():
    p = build_product(build_zmod(2), build_zmod(3))
    assert p.size == 6
    assert find_isomorphism(p, build_zmod(6)) is not None


def test_product_with_zero_ring_is_neutral():
    r = build_zmod(5)
    p = build_product(build_zmod(1), r)
    assert find_isomorphism(p, r) is not None


def test_product_z2_z2_has_two_nontrivial_idempotents():
    p = build_product(build_zmod(2), build_zmod(2))
    idem = [x for x in range(4) if p.mul[x, x] == x and x not in (p.zero, p.identity)]
    assert len(idem) == 2


def test_build_table_accepts_z2():
    r = build_table([[0, 1], [1, 0]], [[0, 0], [0, 1]])
    assert r.size == 2 and r.identity == 1


def test_build_table_klein_four_with_zero_multiplication():
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0] * 4 for _ in range(4)]
    r = build_table(add, mul)
    assert r.identity is None
    assert additive_exponent(r) == 2


def test_build_table_rejects_noncommutative_mul_with_witness():
    add = [[0, 1], [1, 0]]
    mul = [[0, 1], [0, 1]]  # mul(0,1)=1 but mul(1,0)=0
    with pytest.raises(RingAxiomError) as exc:
        build_table(add, mul)
    assert exc.value.witness[0] == "mul-comm"


def test_ideal_subrng_even_residues_mod_12():
    ext = ideal_subrng(build_zmod(12), [2])
    assert ext.sub.size == 6
    assert sorted(int(v) for v in ext.embed.map) == [0, 2, 4, 6, 8, 10]
    assert ext.is_e_object


def test_ideal_subrng_two_mod_four_is_square_zero_non_unital():
    ext = ideal_subrng(build_zmod(4), [2])
    assert sorted(int(v) for v in ext.embed.map) == [0, 2]
    assert ext.sub.identity is None
    assert ext.sub.mul[1, 1] == ext.sub.zero  # 2*2 = 0 mod 4


def test_ideal_subrng_empty_generators_gives_zero_subring():
    ext = ideal_subrng(build_zmod(9), [])
    assert ext.sub.size == 1


def test_quotient_z12_by_3z12_is_z3():
    q, proj = quotient(build_zmod(12), {0, 3, 6, 9})
    assert q.size == 3
    assert find_isomorphism(q, build_zmod(3)) is not None
    assert proj.is_surjective


def test_quotient_by_zero_and_by_everything():
    r = build_zmod(10)
    q0, _ = quotient(r, {0})
    assert find_isomorphism(q0, r) is not None
    qall, _ = quotient(r, set(range(10)))
    assert qall.size == 1


def test_quotient_rejects_non_ideal():
    with pytest.raises(NotIdealError):
        quotient(build_zmod(12), {0, 1})


@pytest.mark.parametrize("n", [4, 6, 12])
def test_projection_kernel_recovers_the_ideal(n):
    r = build_zmod(n)
    for ideal in enumerate_ideals(r):
        _, proj = quotient(r, ideal.members)
        assert proj.kernel_members() == ideal.members


def test_unitization_of_zero_ring_is_z2():
    zero = ideal_subrng(build_zmod(1), []).sub
    ext = unitization(zero, 2)
    assert find_isomorphism(ext.amb, build_zmod(2)) is not None


def test_unitization_of_square_zero_pair():
    s = ideal_subrng(build_zmod(4), [2]).sub
    assert additive_exponent(s) == 2
    ext = unitization(s, 2)
    assert ext.amb.size == 4
    assert ext.amb.identity is not None


def test_unitization_rejects_bad_modulus():
    s = ideal_subrng(build_zmod(12), [2]).sub  # additive exponent 6
    with pytest.raises(ValueError):
        unitization(s, 4)


def test_unitization_identity_is_zero_one_and_image_is_ideal():
    s = ideal_subrng(build_zmod(12), [2]).sub
    ext = unitization(s, 6)
    m = 6
    assert ext.amb.identity == s.zero * m + 1
    assert oracles.is_ideal_naive(ext.amb, {int(v) for v in ext.embed.map})


@pytest.mark.parametrize("m_small,m_big", [(6, 12), (6, 18)])
def test_unitization_reduction_is_surjective_and_fixes_sub(m_small, m_big):
    s = ideal_subrng(build_zmod(12), [2]).sub
    big, small = unitization(s, m_big), unitization(s, m_small)
    red = unitization_reduction(big, small)
    em = check_e_morphism(red, big, small)
    assert em.is_surjective and em.fixes_sub


def test_additive_exponent_examples():
    assert additive_exponent(build_zmod(6)) == 6
    assert additive_exponent(build_zmod(1)) == 1
    assert additive_exponent(build_product(build_zmod(2), build_zmod(4))) == 4


def test_find_identity_examples():
    assert find_identity(build_zmod(6)) == 1
    assert find_identity(ideal_subrng(build_zmod(12), [2]).sub) is None
    assert find_identity(build_zmod(1)) == 0


def test_enumerate_homs_counts():
    z6, z12, z4 = build_zmod(6), build_zmod(12), build_zmod(4)
    assert len(enumerate_homs(z6, z6, unital=True)) == 1
    assert len(enumerate_homs(z12, z4, unital=True)) == 1
    zero = build_zmod(1)
    homs = len(enumerate_homs(z12, zero))
    assert homs == 1  # only the zero map


@pytest.mark.parametrize("a_n,b_n,unital", [(4, 4, False), (6, 6, False), (6, 6, True),
                                            (4, 2, False), (6, 4, True), (2, 6, False)])
def test_enumerate_homs_matches_brute_force(a_n, b_n, unital):
    a, b = build_zmod(a_n), build_zmod(b_n)
    ours = {tuple(int(v) for v in h.map) for h in enumerate_homs(a, b, unital=unital)}
    assert ours == oracles.brute_homs(a, b, unital=unital)


def test_enumerate_homs_brute_force_on_product_source():
    a = build_product(build_zmod(2), build_zmod(2))
    b = build_zmod(2)
    ours = {tuple(int(v) for v in h.map) for h in enumerate_homs(a, b)}
    assert ours == oracles.brute_homs(a, b)


def test_check_e_morphism_accepts_identity():
    z12 = build_zmod(12)
    ext = ideal_subrng(z12, [2])
    ident = make_hom(z12, z12, np.arange(12))
    em = check_e_morphism(ident, ext, ext)
    assert em.fixes_sub


def test_check_e_morphism_accepts_reduction_mod_4():
    z12, z4 = build_zmod(12), build_zmod(4)
    h = enumerate_homs(z12, z4, unital=True)[0]
    em = check_e_morphism(h, ideal_subrng(z12, [2]), ideal_subrng(z4, [2]))
    assert em.is_surjective


def test_check_e_morphism_rejects_zero_map():
    z12, z4 = build_zmod(12), build_zmod(4)
    zero_map = make_hom(z12, z4, np.zeros(12, dtype=int))
    with pytest.raises(NotEMorphismError):
        check_e_morphism(zero_map, ideal_subrng(z12, [2]), ideal_subrng(z4, [2]))


def test_subring_extension_requires_an_ideal():
    with pytest.raises(NotIdealError):
        subring_extension(build_zmod(12), {0, 1, 2})
