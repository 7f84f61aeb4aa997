"""Portable table kernels (NumPy). Same contract as the compiled backend.

All tables are square int32 arrays of element indices; subsets travel as
bool masks. Witnesses are plain tuples so callers can format them without
caring which backend produced them.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def validate_tables(add: np.ndarray, mul: np.ndarray, zero: int):
    """Exhaustive ring-law check. Returns None or (law, i, j, k)."""
    n = add.shape[0]
    ar = np.arange(n)
    bad = np.argwhere(add != add.T)
    if bad.size:
        i, j = bad[0]
        return ("add-comm", int(i), int(j), -1)
    if not np.array_equal(add[zero], ar):
        j = int(np.argmax(add[zero] != ar))
        return ("add-zero", int(zero), j, -1)
    has_inverse = (add == zero).any(axis=1)
    if not has_inverse.all():
        return ("add-inverse", int(np.argmax(~has_inverse)), -1, -1)
    for k in range(n):
        lhs = add[:, k][add]              # (i+j)+k
        rhs = add[:, add[:, k]]           # i+(j+k)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            i, j = bad[0]
            return ("add-assoc", int(i), int(j), k)
    bad = np.argwhere(mul != mul.T)
    if bad.size:
        i, j = bad[0]
        return ("mul-comm", int(i), int(j), -1)
    for k in range(n):
        lhs = mul[:, k][mul]              # (i*j)*k
        rhs = mul[:, mul[:, k]]           # i*(j*k)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            i, j = bad[0]
            return ("mul-assoc", int(i), int(j), k)
    # With commutativity already verified, left distributivity implies right.
    for k in range(n):
        lhs = mul[:, add[:, k]]                    # i*(j+k)
        rhs = add[mul, mul[:, k][:, None]]         # i*j + i*k
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            i, j = bad[0]
            return ("distrib", int(i), int(j), k)
    return None


def sampled_law_violation(add, mul, zero, samples: int, seed: int):
    """Cheap check for big formula-built rings: exact commutativity, zero and
    inverses, plus `samples` random associativity/distributivity triples."""
    n = add.shape[0]
    ar = np.arange(n)
    bad = np.argwhere(add != add.T)
    if bad.size:
        i, j = bad[0]
        return ("add-comm", int(i), int(j), -1)
    if not np.array_equal(add[zero], ar):
        j = int(np.argmax(add[zero] != ar))
        return ("add-zero", int(zero), j, -1)
    has_inverse = (add == zero).any(axis=1)
    if not has_inverse.all():
        return ("add-inverse", int(np.argmax(~has_inverse)), -1, -1)
    bad = np.argwhere(mul != mul.T)
    if bad.size:
        i, j = bad[0]
        return ("mul-comm", int(i), int(j), -1)
    rng = np.random.default_rng(seed)
    i = rng.integers(0, n, samples)
    j = rng.integers(0, n, samples)
    k = rng.integers(0, n, samples)
    bad = np.flatnonzero(add[add[i, j], k] != add[i, add[j, k]])
    if bad.size:
        b = bad[0]
        return ("add-assoc", int(i[b]), int(j[b]), int(k[b]))
    bad = np.flatnonzero(mul[mul[i, j], k] != mul[i, mul[j, k]])
    if bad.size:
        b = bad[0]
        return ("mul-assoc", int(i[b]), int(j[b]), int(k[b]))
    bad = np.flatnonzero(mul[i, add[j, k]] != add[mul[i, j], mul[i, k]])
    if bad.size:
        b = bad[0]
        return ("distrib", int(i[b]), int(j[b]), int(k[b]))
    return None


def find_identity_index(mul: np.ndarray) -> int:
    """Index of the multiplicative identity, or -1."""
    n = mul.shape[0]
    hits = np.flatnonzero((mul == np.arange(n)[None, :]).all(axis=1))
    return int(hits[0]) if hits.size else -1


def negation_vector(add: np.ndarray, zero: int) -> np.ndarray:
    neg = np.argmax(add == zero, axis=1)
    return neg.astype(np.int64)


def additive_order_vector(add: np.ndarray, zero: int) -> np.ndarray:
    n = add.shape[0]
    ar = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    acc = ar.copy()
    k = 1
    while (orders == 0).any():
        if k > n:
            raise ValueError("addition table is not a group table")
        hit = (acc == zero) & (orders == 0)
        orders[hit] = k
        acc = add[acc, ar]
        k += 1
    return orders


def sumset_mask(add: np.ndarray, amask: np.ndarray, bmask: np.ndarray) -> np.ndarray:
    """{a+b : a in A, b in B} as a mask."""
    out = np.zeros(add.shape[0], dtype=bool)
    ai = np.flatnonzero(amask)
    bi = np.flatnonzero(bmask)
    if ai.size and bi.size:
        out[add[np.ix_(ai, bi)].ravel()] = True
    return out


def additive_closure_mask(add: np.ndarray, seed_mask: np.ndarray, zero: int) -> np.ndarray:
    """Subgroup of (R,+) generated by the seed; always contains zero."""
    mask = seed_mask.copy()
    mask[zero] = True
    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[add[np.ix_(idx, idx)].ravel()] = True
        if (grown == mask).all():
            return mask
        mask = grown


def absorb_seed_mask(mul: np.ndarray, gens) -> np.ndarray:
    """gens together with every ring multiple r*g."""
    n = mul.shape[0]
    mask = np.zeros(n, dtype=bool)
    gi = np.asarray(sorted(gens), dtype=np.int64)
    if gi.size:
        mask[gi] = True
        mask[mul[:, gi].ravel()] = True
    return mask


def ideal_violation(add, mul, zero, mask, neg):
    """None if mask is an ideal, else (law, a, b)."""
    if not mask[zero]:
        return ("zero", int(zero), -1)
    idx = np.flatnonzero(mask)
    if idx.size:
        bad = ~mask[neg[idx]]
        if bad.any():
            return ("neg", int(idx[np.argmax(bad)]), -1)
        sums = add[np.ix_(idx, idx)]
        bad = np.argwhere(~mask[sums])
        if bad.size:
            a, b = bad[0]
            return ("add", int(idx[a]), int(idx[b]))
        prods = mul[:, idx]
        bad = np.argwhere(~mask[prods])
        if bad.size:
            r, a = bad[0]
            return ("absorb", int(r), int(idx[a]))
    return None


def prime_violation(mul, mask):
    """None if the mask is a prime ideal of the ambient multiplication.

    Returns ("improper", -1, -1) when the mask is everything, or
    ("pair", a, b) with a*b inside, a and b outside.
    """
    if mask.all():
        return ("improper", -1, -1)
    comp = np.flatnonzero(~mask)
    for a in comp:
        hits = mask[mul[a][comp]]
        if hits.any():
            b = comp[int(np.argmax(hits))]
            return ("pair", int(a), int(b))
    return None


def nilpotent_mask(mul, zero):
    n = mul.shape[0]
    ar = np.arange(n)
    power = ar.copy()
    nil = power == zero
    for _ in range(n):
        if nil.all():
            break
        power = mul[power, ar]
        nil |= power == zero
    return nil


def psi_mask(mul, sub_idx, target_mask):
    """{x : x*s lies in target for every s in sub_idx}."""
    n = mul.shape[0]
    if len(sub_idx) == 0:
        return np.ones(n, dtype=bool)
    vals = mul[:, np.asarray(sub_idx, dtype=np.int64)]
    return target_mask[vals].all(axis=1)


def hom_violation(mapv, add_a, mul_a, add_b, mul_b, zero_a, zero_b):
    """None if mapv respects zero, addition and multiplication."""
    m = mapv
    if m[zero_a] != zero_b:
        return ("zero", int(zero_a), -1)
    bad = np.argwhere(m[add_a] != add_b[np.ix_(m, m)])
    if bad.size:
        i, j = bad[0]
        return ("add", int(i), int(j))
    bad = np.argwhere(m[mul_a] != mul_b[np.ix_(m, m)])
    if bad.size:
        i, j = bad[0]
        return ("mul", int(i), int(j))
    return None


def idempotent_indices(mul):
    n = mul.shape[0]
    ar = np.arange(n)
    return np.flatnonzero(mul[ar, ar] == ar)
