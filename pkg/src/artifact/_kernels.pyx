# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; see _kernels_py.py for the reference versions."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def form_doubled(li, lc, ri, rc):
    cdef const long long[:] a = np.ascontiguousarray(li, dtype=np.int64)
    cdef const long long[:] ac = np.ascontiguousarray(lc, dtype=np.int64)
    cdef const long long[:] b = np.ascontiguousarray(ri, dtype=np.int64)
    cdef const long long[:] bc = np.ascontiguousarray(rc, dtype=np.int64)
    cdef Py_ssize_t x, y
    cdef long long d, total = 0
    for x in range(a.shape[0]):
        for y in range(b.shape[0]):
            d = a[x] - b[y]
            if d < 0:
                d = -d
            total -= ac[x] * bc[y] * d
    return total


def mutate_exchange(B, k):
    src = np.ascontiguousarray(B, dtype=np.int64)
    out = src.copy()
    cdef const long long[:, :] s = src
    cdef long long[:, :] o = out
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t kk = k
    cdef Py_ssize_t i, j
    cdef long long bik, prod
    for i in range(n):
        bik = s[i, kk]
        if i == kk:
            for j in range(n):
                o[i, j] = -s[i, j]
            continue
        o[i, kk] = -bik
        if bik == 0:
            continue
        for j in range(n):
            if j == kk:
                continue
            prod = bik * s[kk, j]
            if prod > 0:
                if bik < 0:
                    o[i, j] = s[i, j] - prod
                else:
                    o[i, j] = s[i, j] + prod
    return out


def mutate_lambda(L, B, k):
    lam = np.ascontiguousarray(L, dtype=np.int64)
    out = lam.copy()
    cdef const long long[:, :] l = lam
    cdef const long long[:, :] b = np.ascontiguousarray(B, dtype=np.int64)
    cdef long long[:, :] o = out
    cdef Py_ssize_t n = l.shape[0]
    cdef Py_ssize_t kk = k
    cdef Py_ssize_t i, t
    cdef long long v, rowsum, colsum
    for i in range(n):
        if i == kk:
            continue
        rowsum = -l[kk, i]
        colsum = -l[i, kk]
        for t in range(n):
            v = -b[t, kk]
            if v > 0:
                rowsum += v * l[t, i]
                colsum += v * l[i, t]
        o[kk, i] = rowsum
        o[i, kk] = colsum
    return out
