import pytest

from nilspec import (
    FiniteSpace,
    SpaceMap,
    build_product,
    build_zmod,
    find_isomorphism,
    homeomorphic,
    ideal_subrng,
    is_spectral,
    spec_space,
    spectrum,
    strongly_continuous,
    to_dot,
)
from nilspec.spaces import open_onto_image


@pytest.fixture
def chain():
    # p specializes to q: the closure of {p} is {p, q}
    return FiniteSpace(["p", "q"], [("p", "q")])


def test_spec_space_z6_is_two_point_discrete():
    space = spec_space(build_zmod(6))
    assert len(space) == 2
    a, b = space.points
    assert not space.leq(a, b) and not space.leq(b, a)


def test_spec_space_zero_ring_is_empty():
    assert len(spec_space(build_zmod(1))) == 0


def test_spec_space_z4_is_one_point():
    assert len(spec_space(build_zmod(4))) == 1


def test_closure_of_empty_set():
    space = spec_space(build_zmod(6))
    assert space.closure([]) == frozenset()


def test_single_points_closed_not_dense_in_discrete_space():
    space = spec_space(build_zmod(6))
    for p in space.points:
        assert space.is_closed({p})
        assert not space.is_dense({p})


def test_chain_generic_point_is_dense_and_open(chain):
    assert chain.is_dense({"p"})
    assert chain.is_open({"p"})
    assert not chain.is_open({"q"})
    assert chain.is_closed({"q"})


def test_homeomorphic_identity(chain):
    ident = SpaceMap(chain, chain, {"p": "p", "q": "q"})
    assert homeomorphic(ident)


def test_homeomorphic_spec_z6_vs_z2xz3():
    z6 = build_zmod(6)
    p = build_product(build_zmod(2), build_zmod(3))
    iso = find_isomorphism(p, z6)
    assert iso is not None
    # pull each prime of Z6 back along the isomorphism
    mapping = {}
    for q in spectrum(z6):
        pre = frozenset(x for x in range(p.size) if int(iso.map[x]) in q.members)
        mapping[q.members] = pre
    f = SpaceMap(spec_space(z6), spec_space(p), mapping)
    assert homeomorphic(f)


def test_non_bijective_map_is_not_homeomorphism(chain):
    collapse = SpaceMap(chain, chain, {"p": "q", "q": "q"})
    assert not homeomorphic(collapse)


def test_is_spectral_on_spectra_and_cycles():
    assert is_spectral(spec_space(build_zmod(12))).ok
    assert is_spectral(spec_space(build_zmod(1))).ok  # empty space
    cycle = FiniteSpace(["a", "b"], [("a", "b"), ("b", "a")])
    rep = is_spectral(cycle)
    assert not rep.ok and set(rep.cycle) == {"a", "b"}


def test_strongly_continuous_collapses_to_monotonicity(chain):
    mono = SpaceMap(chain, chain, {"p": "p", "q": "q"})
    assert strongly_continuous(mono)
    anti = SpaceMap(chain, chain, {"p": "q", "q": "p"})
    assert not anti.is_continuous()
    assert not strongly_continuous(anti)


def test_open_onto_image_on_subspace_embedding(chain):
    bigger = FiniteSpace(["p", "q", "r"], [("p", "q")])
    emb = SpaceMap(chain, bigger, {"p": "p", "q": "q"})
    assert open_onto_image(emb)


def test_dot_export_is_deterministic_and_shows_cover_edges(chain):
    dot = to_dot(chain)
    assert dot == to_dot(chain)
    assert 'label="p"' in dot and "->" in dot
    empty = to_dot(spec_space(build_zmod(1)))
    assert empty.startswith("digraph") and empty.endswith("}\n")
    z6 = to_dot(spec_space(build_zmod(6)))
    assert "->" not in z6  # discrete: two isolated nodes


def test_spec_space_points_are_prime_member_sets():
    ext = ideal_subrng(build_zmod(12), [2])
    space = spec_space(ext.sub)
    assert space.points == (spectrum(ext.sub)[0].members,)
