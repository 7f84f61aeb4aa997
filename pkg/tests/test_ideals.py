import pytest

import oracles
from nilspec import (
    Ideal,
    basic_open,
    build_product,
    build_zmod,
    enumerate_ideals,
    generated_ideal,
    ideal_subrng,
    is_prime,
    kernel_of,
    nilradical,
    spectrum,
    truncate,
    vanishing,
)
from nilspec.ideals import _ideals_by_join_closure, _ideals_by_splitting


def members(ideals):
    return {i.members for i in ideals}


def test_generated_ideal_examples():
    z12 = build_zmod(12)
    assert generated_ideal(z12, [3]).members == frozenset({0, 3, 6, 9})
    assert generated_ideal(z12, [1]).members == frozenset(range(12))
    assert generated_ideal(z12, []).members == frozenset({0})


def test_enumerate_ideals_z6():
    got = [sorted(i.members) for i in enumerate_ideals(build_zmod(6))]
    assert got == [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]


def test_enumerate_ideals_zero_ring():
    assert len(enumerate_ideals(build_zmod(1))) == 1


def test_enumerate_ideals_evens_mod_8():
    ext = ideal_subrng(build_zmod(8), [2])
    ideals = enumerate_ideals(ext.sub)
    assert len(ideals) == 3
    pushed = {frozenset(ext.push(i.members)) for i in ideals}
    assert pushed == {frozenset({0}), frozenset({0, 4}), frozenset({0, 2, 4, 6})}


@pytest.mark.parametrize("build", [
    lambda: build_zmod(6),
    lambda: build_zmod(8),
    lambda: build_product(build_zmod(2), build_zmod(4)),
    lambda: build_product(build_zmod(2), build_zmod(2)),
    lambda: ideal_subrng(build_zmod(8), [2]).sub,
    lambda: ideal_subrng(build_zmod(16), [2]).sub,
])
def test_enumerate_ideals_matches_naive_filter(build):
    r = build()
    assert members(enumerate_ideals(r)) == oracles.naive_ideals(r)


@pytest.mark.parametrize("build", [
    lambda: build_zmod(24),
    lambda: build_product(build_zmod(4), build_zmod(6)),
    lambda: truncate(5),
])
def test_split_route_agrees_with_join_closure(build):
    r = build()
    by_join = {frozenset(int(x) for x in m.nonzero()[0]) for m in _ideals_by_join_closure(r)}
    split = _ideals_by_splitting(r)
    assert split is not None
    by_split = {frozenset(int(x) for x in m.nonzero()[0]) for m in split}
    assert by_join == by_split


def test_is_prime_examples():
    z6 = build_zmod(6)
    assert is_prime(z6, Ideal(z6, frozenset({0, 2, 4}))).is_prime
    res = is_prime(z6, Ideal(z6, frozenset({0})))
    assert not res.is_prime
    a, b = res.witness
    assert z6.mul[a, b] == 0 and a != 0 and b != 0
    improper = is_prime(z6, Ideal(z6, frozenset(range(6))))
    assert not improper.is_prime and improper.reason == "improper"


def test_spectrum_z6():
    assert members(spectrum(build_zmod(6))) == {frozenset({0, 3}), frozenset({0, 2, 4})}


def test_spectrum_of_nil_rng_is_empty():
    ext = ideal_subrng(build_zmod(8), [2])
    assert spectrum(ext.sub) == []


def test_spectrum_evens_mod_12_single_prime():
    ext = ideal_subrng(build_zmod(12), [2])
    primes = spectrum(ext.sub)
    assert len(primes) == 1
    assert ext.push(primes[0].members) == frozenset({0, 6})


@pytest.mark.parametrize("build", [
    lambda: build_zmod(4),
    lambda: build_zmod(6),
    lambda: build_zmod(12),
    lambda: ideal_subrng(build_zmod(8), [2]).sub,
    lambda: build_product(build_zmod(2), build_zmod(4)),
])
def test_spectrum_matches_naive_filter(build):
    r = build()
    assert members(spectrum(r)) == oracles.naive_spectrum(r)


def test_nilradical_examples():
    assert nilradical(build_zmod(4)).members == frozenset({0, 2})
    assert nilradical(build_zmod(6)).members == frozenset({0})
    nil_sub = ideal_subrng(build_zmod(8), [2]).sub
    assert nilradical(nil_sub).members == frozenset(range(nil_sub.size))


@pytest.mark.parametrize("build", [
    lambda: build_zmod(4),
    lambda: build_zmod(9),
    lambda: build_zmod(12),
    lambda: ideal_subrng(build_zmod(12), [2]).sub,
    lambda: build_product(build_zmod(4), build_zmod(9)),
])
def test_nilradical_matches_naive_nilpotents(build):
    r = build()
    assert nilradical(r).members == oracles.naive_nilpotents(r)


def test_kernel_of_examples():
    z6 = build_zmod(6)
    primes = spectrum(z6)
    assert kernel_of(z6, primes).members == frozenset({0})
    assert kernel_of(z6, []).members == frozenset(range(6))
    ext = ideal_subrng(build_zmod(12), [2])
    p = spectrum(ext.sub)
    assert kernel_of(ext.sub, p).members == p[0].members


def test_basic_open_and_vanishing_examples():
    z6 = build_zmod(6)
    assert members(basic_open(z6, 2)) == {frozenset({0, 3})}
    assert basic_open(z6, 0) == []
    assert members(vanishing(z6, Ideal(z6, frozenset({0})))) == members(spectrum(z6))


def test_transfer_oracle_agreement():
    ext = ideal_subrng(build_zmod(12), [2])
    nil = nilradical(ext.sub)
    assert oracles.naive_transfer(ext, nil.members) == frozenset({0, 3, 6, 9})
