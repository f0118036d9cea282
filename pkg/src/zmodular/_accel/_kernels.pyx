# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled integer contraction kernels for cyclotomic coefficient arrays.

Same contracts as the numpy fallbacks in pykernels.py; all arithmetic is
int64 and exactness is the caller's responsibility via coefficient bounds.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "compiled"


def cyc_matmul(cnp.int64_t[:, :, :] A, cnp.int64_t[:, :, :] B):
    cdef Py_ssize_t m = A.shape[0], k = A.shape[1], n = A.shape[2]
    cdef Py_ssize_t r = B.shape[1]
    out_arr = np.zeros((m, r, n), dtype=np.int64)
    cdef cnp.int64_t[:, :, :] out = out_arr
    cdef Py_ssize_t i, j, t, x, y, c
    cdef cnp.int64_t a
    for i in range(m):
        for t in range(k):
            for x in range(n):
                a = A[i, t, x]
                if a == 0:
                    continue
                for j in range(r):
                    for y in range(n):
                        c = x + y
                        if c >= n:
                            c -= n
                        out[i, j, c] += a * B[t, j, y]
    return out_arr


def cyc_weighted_rows(cnp.int64_t[:, :, :] A, cnp.int64_t[:, :] V):
    cdef Py_ssize_t m = A.shape[0], n = A.shape[2]
    out_arr = np.zeros((m, n), dtype=np.int64)
    cdef cnp.int64_t[:, :] out = out_arr
    cdef Py_ssize_t a, b, x, y, c
    cdef cnp.int64_t v
    for a in range(m):
        for b in range(m):
            for x in range(n):
                v = A[a, b, x]
                if v == 0:
                    continue
                for y in range(n):
                    c = x + y
                    if c >= n:
                        c -= n
                    out[a, c] += v * V[b, y]
    return out_arr


def verlinde_contract(cnp.int64_t[:, :, :] A, cnp.int64_t[:, :, :] B):
    cdef Py_ssize_t m = A.shape[0], n = A.shape[2]
    out_arr = np.zeros((m, m, m, n), dtype=np.int64)
    cdef cnp.int64_t[:, :, :, :] out = out_arr
    pair_arr = np.zeros((m, n), dtype=np.int64)
    cdef cnp.int64_t[:, :] pair = pair_arr
    cdef Py_ssize_t f, g, h, k, x, y, c
    cdef cnp.int64_t a, p
    for f in range(m):
        for g in range(m):
            # pair[k] = A[f, k] * A[g, k]
            for k in range(m):
                for c in range(n):
                    pair[k, c] = 0
                for x in range(n):
                    a = A[f, k, x]
                    if a == 0:
                        continue
                    for y in range(n):
                        c = x + y
                        if c >= n:
                            c -= n
                        pair[k, c] += a * A[g, k, y]
            for h in range(m):
                for k in range(m):
                    for x in range(n):
                        p = pair[k, x]
                        if p == 0:
                            continue
                        for y in range(n):
                            c = x + y
                            if c >= n:
                                c -= n
                            out[f, g, h, c] += p * B[h, k, y]
    return out_arr


def fusion_associator_defect(cnp.int64_t[:, :, :] N):
    cdef Py_ssize_t m = N.shape[0]
    out_arr = np.zeros((m, m, m, m), dtype=np.int64)
    cdef cnp.int64_t[:, :, :, :] out = out_arr
    cdef Py_ssize_t f, g, h, e, x
    cdef cnp.int64_t v
    for f in range(m):
        for g in range(m):
            for e in range(m):
                v = N[f, g, e]
                if v != 0:
                    for h in range(m):
                        for x in range(m):
                            out[f, g, h, x] += v * N[e, h, x]
    for g in range(m):
        for h in range(m):
            for e in range(m):
                v = N[g, h, e]
                if v != 0:
                    for f in range(m):
                        for x in range(m):
                            out[f, g, h, x] -= v * N[f, e, x]
    return out_arr
