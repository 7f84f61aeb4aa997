# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels. Contract mirrors _pykernels exactly."""

import numpy as np

cimport cython
cimport numpy as cnp

BACKEND = "compiled"

ctypedef cnp.int32_t ITYPE
ctypedef cnp.uint8_t MTYPE


def validate_tables(object add_o, object mul_o, int zero):
    cdef const ITYPE[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t i, j, k
    cdef bint ok
    for i in range(n):
        for j in range(n):
            if add[i, j] != add[j, i]:
                return ("add-comm", i, j, -1)
    for j in range(n):
        if add[zero, j] != j:
            return ("add-zero", zero, j, -1)
    for i in range(n):
        ok = False
        for j in range(n):
            if add[i, j] == zero:
                ok = True
                break
        if not ok:
            return ("add-inverse", i, -1, -1)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if add[add[i, j], k] != add[i, add[j, k]]:
                    return ("add-assoc", i, j, k)
    for i in range(n):
        for j in range(n):
            if mul[i, j] != mul[j, i]:
                return ("mul-comm", i, j, -1)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if mul[mul[i, j], k] != mul[i, mul[j, k]]:
                    return ("mul-assoc", i, j, k)
    # With commutativity already verified, left distributivity implies right.
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if mul[i, add[j, k]] != add[mul[i, j], mul[i, k]]:
                    return ("distrib", i, j, k)
    return None


def sampled_law_violation(object add_o, object mul_o, int zero, int samples, int seed):
    cdef const ITYPE[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t i, j
    cdef bint ok
    for i in range(n):
        for j in range(n):
            if add[i, j] != add[j, i]:
                return ("add-comm", i, j, -1)
    for j in range(n):
        if add[zero, j] != j:
            return ("add-zero", zero, j, -1)
    for i in range(n):
        ok = False
        for j in range(n):
            if add[i, j] == zero:
                ok = True
                break
        if not ok:
            return ("add-inverse", i, -1, -1)
    for i in range(n):
        for j in range(n):
            if mul[i, j] != mul[j, i]:
                return ("mul-comm", i, j, -1)
    rng = np.random.default_rng(seed)
    cdef const cnp.int64_t[::1] si = rng.integers(0, n, samples)
    cdef const cnp.int64_t[::1] sj = rng.integers(0, n, samples)
    cdef const cnp.int64_t[::1] sk = rng.integers(0, n, samples)
    cdef Py_ssize_t t, a, b, c
    for t in range(samples):
        a = si[t]
        b = sj[t]
        c = sk[t]
        if add[add[a, b], c] != add[a, add[b, c]]:
            return ("add-assoc", a, b, c)
        if mul[mul[a, b], c] != mul[a, mul[b, c]]:
            return ("mul-assoc", a, b, c)
        if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
            return ("distrib", a, b, c)
    return None


def find_identity_index(object mul_o):
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t e, x
    cdef bint ok
    for e in range(n):
        ok = True
        for x in range(n):
            if mul[e, x] != x:
                ok = False
                break
        if ok:
            return e
    return -1


def negation_vector(object add_o, int zero):
    cdef const ITYPE[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef Py_ssize_t n = add.shape[0]
    neg_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] neg = neg_arr
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if add[i, j] == zero:
                neg[i] = j
                break
    return neg_arr


def additive_order_vector(object add_o, int zero):
    cdef const ITYPE[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef Py_ssize_t n = add.shape[0]
    orders_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] orders = orders_arr
    cdef Py_ssize_t x, acc, k
    for x in range(n):
        acc = x
        k = 1
        while acc != zero:
            acc = add[acc, x]
            k += 1
            if k > n:
                raise ValueError("addition table is not a group table")
        orders[x] = k
    return orders_arr


def sumset_mask(object add_o, object amask_o, object bmask_o):
    cdef const ITYPE[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef const MTYPE[::1] amask = np.ascontiguousarray(amask_o, dtype=np.uint8)
    cdef const MTYPE[::1] bmask = np.ascontiguousarray(bmask_o, dtype=np.uint8)
    cdef Py_ssize_t n = add.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef MTYPE[::1] out = out_arr
    cdef Py_ssize_t a, b
    for a in range(n):
        if amask[a]:
            for b in range(n):
                if bmask[b]:
                    out[add[a, b]] = 1
    return out_arr.view(bool)


def additive_closure_mask(object add_o, object seed_o, int zero):
    cdef const ITYPE[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef const MTYPE[::1] seed = np.ascontiguousarray(seed_o, dtype=np.uint8)
    cdef Py_ssize_t n = add.shape[0]
    mask_arr = np.zeros(n, dtype=np.uint8)
    cdef MTYPE[::1] mask = mask_arr
    work_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] work = work_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef Py_ssize_t x, y, v
    mask[zero] = 1
    work[tail] = zero
    tail += 1
    for x in range(n):
        if seed[x] and not mask[x]:
            mask[x] = 1
            work[tail] = x
            tail += 1
    while head < tail:
        x = work[head]
        head += 1
        for y in range(tail):
            v = add[x, work[y]]
            if not mask[v]:
                mask[v] = 1
                work[tail] = v
                tail += 1
    return mask_arr.view(bool)


def absorb_seed_mask(object mul_o, object gens):
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef Py_ssize_t n = mul.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef MTYPE[::1] out = out_arr
    cdef Py_ssize_t g, r
    for g in sorted(gens):
        out[g] = 1
        for r in range(n):
            out[mul[r, g]] = 1
    return out_arr.view(bool)


def ideal_violation(object add_o, object mul_o, int zero, object mask_o, object neg_o):
    cdef const ITYPE[:, ::1] add = np.ascontiguousarray(add_o, dtype=np.int32)
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef const MTYPE[::1] mask = np.ascontiguousarray(mask_o, dtype=np.uint8)
    cdef const cnp.int64_t[::1] neg = np.ascontiguousarray(neg_o, dtype=np.int64)
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t a, b, r
    if not mask[zero]:
        return ("zero", zero, -1)
    for a in range(n):
        if mask[a] and not mask[neg[a]]:
            return ("neg", a, -1)
    for a in range(n):
        if mask[a]:
            for b in range(n):
                if mask[b] and not mask[add[a, b]]:
                    return ("add", a, b)
    for r in range(n):
        for a in range(n):
            if mask[a] and not mask[mul[r, a]]:
                return ("absorb", r, a)
    return None


def prime_violation(object mul_o, object mask_o):
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef const MTYPE[::1] mask = np.ascontiguousarray(mask_o, dtype=np.uint8)
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, b
    cdef bint proper = False
    for a in range(n):
        if not mask[a]:
            proper = True
            break
    if not proper:
        return ("improper", -1, -1)
    for a in range(n):
        if not mask[a]:
            for b in range(n):
                if not mask[b] and mask[mul[a, b]]:
                    return ("pair", a, b)
    return None


def nilpotent_mask(object mul_o, int zero):
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef Py_ssize_t n = mul.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef MTYPE[::1] out = out_arr
    cdef Py_ssize_t x, p, k
    for x in range(n):
        p = x
        k = 1
        while p != zero and k <= n:
            p = mul[p, x]
            k += 1
        if p == zero:
            out[x] = 1
    return out_arr.view(bool)


def psi_mask(object mul_o, object sub_idx, object target_o):
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef const MTYPE[::1] target = np.ascontiguousarray(target_o, dtype=np.uint8)
    cdef const cnp.int64_t[::1] sub = np.ascontiguousarray(sub_idx, dtype=np.int64)
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t m = sub.shape[0]
    out_arr = np.zeros(n, dtype=np.uint8)
    cdef MTYPE[::1] out = out_arr
    cdef Py_ssize_t x, t
    cdef bint ok
    for x in range(n):
        ok = True
        for t in range(m):
            if not target[mul[x, sub[t]]]:
                ok = False
                break
        out[x] = 1 if ok else 0
    return out_arr.view(bool)


def hom_violation(object map_o, object add_a_o, object mul_a_o, object add_b_o,
                  object mul_b_o, int zero_a, int zero_b):
    cdef const ITYPE[::1] m = np.ascontiguousarray(map_o, dtype=np.int32)
    cdef const ITYPE[:, ::1] add_a = np.ascontiguousarray(add_a_o, dtype=np.int32)
    cdef const ITYPE[:, ::1] mul_a = np.ascontiguousarray(mul_a_o, dtype=np.int32)
    cdef const ITYPE[:, ::1] add_b = np.ascontiguousarray(add_b_o, dtype=np.int32)
    cdef const ITYPE[:, ::1] mul_b = np.ascontiguousarray(mul_b_o, dtype=np.int32)
    cdef Py_ssize_t n = add_a.shape[0]
    cdef Py_ssize_t i, j
    if m[zero_a] != zero_b:
        return ("zero", zero_a, -1)
    for i in range(n):
        for j in range(n):
            if m[add_a[i, j]] != add_b[m[i], m[j]]:
                return ("add", i, j)
    for i in range(n):
        for j in range(n):
            if m[mul_a[i, j]] != mul_b[m[i], m[j]]:
                return ("mul", i, j)
    return None


def idempotent_indices(object mul_o):
    cdef const ITYPE[:, ::1] mul = np.ascontiguousarray(mul_o, dtype=np.int32)
    cdef Py_ssize_t n = mul.shape[0]
    out = []
    cdef Py_ssize_t x
    for x in range(n):
        if mul[x, x] == x:
            out.append(x)
    return np.asarray(out, dtype=np.int64)
