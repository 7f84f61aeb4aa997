"""Parity between the compiled and portable kernel backends."""

import numpy as np
import pytest

from nilspec import _pykernels
from nilspec import build_product, build_zmod, ideal_subrng, unitization

try:
    from nilspec import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def rings():
    z12 = build_zmod(12)
    evens = ideal_subrng(z12, [2]).sub
    return [
        build_zmod(1),
        build_zmod(6),
        z12,
        build_product(build_zmod(2), build_zmod(4)),
        evens,
        unitization(evens, 6).amb,
    ]


@needs_compiled
@pytest.mark.parametrize("r", rings(), ids=lambda r: r.label)
def test_validate_and_scans_agree(r):
    assert _ckernels.validate_tables(r.add, r.mul, r.zero) is None
    assert _pykernels.validate_tables(r.add, r.mul, r.zero) is None
    assert _ckernels.find_identity_index(r.mul) == _pykernels.find_identity_index(r.mul)
    assert np.array_equal(_ckernels.negation_vector(r.add, r.zero),
                          _pykernels.negation_vector(r.add, r.zero))
    assert np.array_equal(_ckernels.additive_order_vector(r.add, r.zero),
                          _pykernels.additive_order_vector(r.add, r.zero))
    assert np.array_equal(_ckernels.nilpotent_mask(r.mul, r.zero),
                          _pykernels.nilpotent_mask(r.mul, r.zero))
    assert np.array_equal(_ckernels.idempotent_indices(r.mul),
                          _pykernels.idempotent_indices(r.mul))


@needs_compiled
@pytest.mark.parametrize("r", rings(), ids=lambda r: r.label)
def test_closure_and_mask_kernels_agree(r):
    for g in range(min(r.size, 8)):
        seed_c = _ckernels.absorb_seed_mask(r.mul, [g])
        seed_p = _pykernels.absorb_seed_mask(r.mul, [g])
        assert np.array_equal(seed_c, seed_p)
        closed_c = _ckernels.additive_closure_mask(r.add, seed_c, r.zero)
        closed_p = _pykernels.additive_closure_mask(r.add, seed_p, r.zero)
        assert np.array_equal(closed_c, closed_p)
        neg = _pykernels.negation_vector(r.add, r.zero)
        assert (_ckernels.ideal_violation(r.add, r.mul, r.zero, closed_c, neg) is None)
        assert (_pykernels.ideal_violation(r.add, r.mul, r.zero, closed_p, neg) is None)
        pv_c = _ckernels.prime_violation(r.mul, closed_c)
        pv_p = _pykernels.prime_violation(r.mul, closed_p)
        assert (pv_c is None) == (pv_p is None)
        if pv_c is not None:
            assert tuple(pv_c) == tuple(pv_p)  # same scan order, same witness


@needs_compiled
def test_witnesses_on_corrupted_tables():
    r = build_zmod(6)
    mul = np.array(r.mul)
    mul[2, 3] = 1
    mul[3, 2] = 1
    wc = _ckernels.validate_tables(r.add, mul, 0)
    wp = _pykernels.validate_tables(r.add, mul, 0)
    assert wc is not None and wp is not None
    for witness in (wc, wp):
        law, i, j, k = witness
        assert law in {"mul-comm", "mul-assoc", "distrib"}


@needs_compiled
def test_sampled_validation_catches_corruption():
    r = unitization(ideal_subrng(build_zmod(12), [2]).sub, 12).amb  # size 72
    mul = np.array(r.mul)
    mul[5, 7] = (mul[5, 7] + 1) % r.size
    mul[7, 5] = mul[5, 7]
    assert _ckernels.sampled_law_violation(r.add, mul, r.zero, 20000, 0) is not None
    assert _pykernels.sampled_law_violation(r.add, mul, r.zero, 20000, 0) is not None


@needs_compiled
def test_psi_and_hom_kernels_agree():
    ext = ideal_subrng(build_zmod(12), [2])
    amb = ext.amb
    target = np.zeros(amb.size, dtype=bool)
    target[[0, 6]] = True
    sub_idx = ext.image_indices()
    assert np.array_equal(_ckernels.psi_mask(amb.mul, sub_idx, target),
                          _pykernels.psi_mask(amb.mul, sub_idx, target))
    mapv = np.arange(amb.size, dtype=np.int32)
    assert _ckernels.hom_violation(mapv, amb.add, amb.mul, amb.add, amb.mul, 0, 0) is None
    assert _pykernels.hom_violation(mapv, amb.add, amb.mul, amb.add, amb.mul, 0, 0) is None
    bad = np.array(mapv)
    bad[3] = 4
    wc = _ckernels.hom_violation(bad, amb.add, amb.mul, amb.add, amb.mul, 0, 0)
    wp = _pykernels.hom_violation(bad, amb.add, amb.mul, amb.add, amb.mul, 0, 0)
    assert wc is not None and wp is not None


def test_portable_sumset():
    r = build_zmod(10)
    a = np.zeros(10, dtype=bool)
    b = np.zeros(10, dtype=bool)
    a[[0, 5]] = True
    b[[0, 2]] = True
    out = _pykernels.sumset_mask(r.add, a, b)
    assert set(np.flatnonzero(out)) == {0, 2, 5, 7}
