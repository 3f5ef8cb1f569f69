# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; same API as ``_pykernels``."""

from fractions import Fraction

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

NAME = "cython"


cdef inline object _norm(object v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


cdef tuple _keyadd(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    if la == 2 and lb == 2:
        return (a[0] + b[0], a[1] + b[1])
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    out = []
    for i in range(la):
        out.append(a[i] + (b[i] if i < lb else 0))
    return tuple(out)


def laurent_mul(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple ka, kb, k
    cdef object ca, cb, v
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = _keyadd(ka, kb)
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb
    cdef dict res = {}
    for k, v in out.items():
        if v != 0:
            res[k] = _norm(v)
    return res


def laurent_axpy(dict acc, dict a, object scale):
    cdef tuple k
    cdef object c, v
    for k, c in a.items():
        v = acc.get(k, 0) + scale * c
        if v == 0:
            acc.pop(k, None)
        else:
            acc[k] = _norm(v)
    return acc


cdef int64_t _powmod(int64_t b, int64_t e, int64_t p):
    cdef int64_t r = 1
    b %= p
    if b < 0:
        b += p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef int _rank_buf(int64_t* m, int nrows, int ncols, int64_t p):
    cdef int rank = 0, c, i, j, piv
    cdef int64_t inv, f, t
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                t = m[piv * ncols + j]
                m[piv * ncols + j] = m[rank * ncols + j]
                m[rank * ncols + j] = t
        inv = _powmod(m[rank * ncols + c], p - 2, p)
        for i in range(rank + 1, nrows):
            f = m[i * ncols + c]
            if f != 0:
                f = (f * inv) % p
                for j in range(c, ncols):
                    t = (m[i * ncols + j] - f * m[rank * ncols + j]) % p
                    if t < 0:
                        t += p
                    m[i * ncols + j] = t
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows, int ncols, int64_t p):
    cdef int nrows = len(rows), i, j
    if nrows == 0 or ncols == 0:
        return 0
    cdef int64_t* m = <int64_t*> malloc(nrows * ncols * sizeof(int64_t))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                m[i * ncols + j] = (<int64_t> row[j]) % p
        return _rank_buf(m, nrows, ncols, p)
    finally:
        free(m)


def pencil_nullities(lhs, rhs, lams, int ncols, int64_t p):
    cdef int nrows = len(lhs), i, j, k, nl = len(lams)
    out = []
    if nrows == 0 or ncols == 0:
        return [ncols] * nl
    cdef int size = nrows * ncols
    cdef int64_t* a = <int64_t*> malloc(size * sizeof(int64_t))
    cdef int64_t* b = <int64_t*> malloc(size * sizeof(int64_t))
    cdef int64_t* m = <int64_t*> malloc(size * sizeof(int64_t))
    cdef int64_t lam, t
    if a == NULL or b == NULL or m == NULL:
        free(a); free(b); free(m)
        raise MemoryError()
    try:
        for i in range(nrows):
            for j in range(ncols):
                a[i * ncols + j] = (<int64_t> lhs[i][j]) % p
                b[i * ncols + j] = (<int64_t> rhs[i][j]) % p
        for k in range(nl):
            lam = (<int64_t> lams[k]) % p
            for i in range(size):
                t = (a[i] - (lam * b[i]) % p) % p
                if t < 0:
                    t += p
                m[i] = t
            out.append(ncols - _rank_buf(m, nrows, ncols, p))
        return out
    finally:
        free(a); free(b); free(m)
