# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled butterfly kernels and affine search.

Mirrors boolnl._kernels.pure function for function; outputs are bit-exact
equal to the fallback.
"""

import numpy as np

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int bnl_popcount64(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int bnl_ctz64(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    #else
    static inline int bnl_popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    static inline int bnl_ctz64(unsigned long long x) {
        int c = 0;
        while (!(x & 1)) { x >>= 1; c++; }
        return c;
    }
    #endif
    """
    int bnl_popcount64(unsigned long long x) nogil
    int bnl_ctz64(unsigned long long x) nogil

NAME = "fast"


def mobius_xor(table):
    out = np.array(table, dtype=np.uint8)
    cdef unsigned char[::1] a = out
    cdef Py_ssize_t size = out.size
    cdef Py_ssize_t step = 1, b, x
    with nogil:
        while step < size:
            b = 0
            while b < size:
                for x in range(b, b + step):
                    a[x + step] ^= a[x]
                b += 2 * step
            step <<= 1
    return out


def walsh(table):
    cdef const unsigned char[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    cdef Py_ssize_t size = t.shape[0]
    out = np.empty(size, dtype=np.int64)
    cdef long long[::1] a = out
    cdef Py_ssize_t step = 1, b, x, i
    cdef long long lo, hi
    with nogil:
        for i in range(size):
            a[i] = 1 - 2 * <long long> t[i]
        while step < size:
            b = 0
            while b < size:
                for x in range(b, b + step):
                    lo = a[x]
                    hi = a[x + step]
                    a[x] = lo + hi
                    a[x + step] = lo - hi
                b += 2 * step
            step <<= 1
    return out


def nnf(table):
    cdef const unsigned char[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    cdef Py_ssize_t size = t.shape[0]
    out = np.empty(size, dtype=np.int64)
    cdef long long[::1] a = out
    cdef Py_ssize_t step = 1, b, x, i
    with nogil:
        for i in range(size):
            a[i] = <long long> t[i]
        while step < size:
            b = 0
            while b < size:
                for x in range(b, b + step):
                    a[x + step] -= a[x]
                b += 2 * step
            step <<= 1
    return out


def zeta(coeffs):
    out = np.array(coeffs, dtype=np.int64)
    cdef long long[::1] a = out
    cdef Py_ssize_t size = out.size
    cdef Py_ssize_t step = 1, b, x
    with nogil:
        while step < size:
            b = 0
            while b < size:
                for x in range(b, b + step):
                    a[x + step] += a[x]
                b += 2 * step
            step <<= 1
    return out


def nlp_fast(table):
    cdef const unsigned char[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    cdef Py_ssize_t size = t.shape[0]
    out = np.empty(2 * size, dtype=np.int64)
    cdef long long[::1] c = out
    cdef Py_ssize_t step = 1, b, x, i
    cdef long long tmp
    with nogil:
        for i in range(size):
            c[i] = <long long> t[i]
        while step < size:
            b = 0
            while b < size:
                for x in range(b, b + step):
                    tmp = c[x + step]
                    c[x] += tmp
                    if x == b:
                        c[x + step] = step - 2 * tmp
                    else:
                        c[x + step] = -2 * tmp
                b += 2 * step
            step <<= 1
        c[size] = size - 2 * c[0]
        for i in range(1, size):
            c[size + i] = -2 * c[i]
    return out


def nlp_direct(table):
    cdef const unsigned char[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    cdef Py_ssize_t size = t.shape[0]
    cdef int n = 0
    while (<Py_ssize_t> 1) << n < size:
        n += 1
    out = np.empty(2 * size, dtype=np.int64)
    cdef long long[::1] c = out
    cdef Py_ssize_t vt, s, comp
    cdef long long acc, m, scale
    cdef int wv
    with nogil:
        for vt in range(size):
            # sum of f over points above vt, by direct superset enumeration
            comp = (size - 1) & ~vt
            acc = 0
            s = comp
            while True:
                acc += <long long> t[vt | s]
                if s == 0:
                    break
                s = (s - 1) & comp
            wv = bnl_popcount64(<unsigned long long> vt)
            m = (<long long> 1) << (n - wv)
            if vt == 0:
                c[0] = acc
            else:
                scale = (<long long> 1) << (wv - 1)
                if (wv - 1) & 1:
                    scale = -scale
                c[vt] = scale * (m - 2 * acc)
            scale = (<long long> 1) << wv
            if wv & 1:
                scale = -scale
            c[size + vt] = scale * (m - 2 * acc)
    return out


def affine_distances(table):
    cdef const unsigned char[::1] t = np.ascontiguousarray(table, dtype=np.uint8)
    cdef Py_ssize_t size = t.shape[0]
    cdef int n = 0
    while (<Py_ssize_t> 1) << n < size:
        n += 1
    cdef Py_ssize_t nwords = (size + 63) >> 6

    fbuf = np.zeros(nwords, dtype=np.uint64)
    pbuf = np.zeros((max(n, 1), nwords), dtype=np.uint64)
    cur_arr = np.zeros(nwords, dtype=np.uint64)
    out = np.empty(2 * size, dtype=np.int64)

    cdef unsigned long long[::1] fp = fbuf
    cdef unsigned long long[:, ::1] pat = pbuf
    cdef unsigned long long[::1] cur = cur_arr
    cdef long long[::1] res = out

    cdef Py_ssize_t u, k, w
    cdef int bit
    cdef unsigned long long g
    cdef long long d
    with nogil:
        for u in range(size):
            if t[u]:
                fp[u >> 6] |= (<unsigned long long> 1) << (u & 63)
            for bit in range(n):
                if (u >> bit) & 1:
                    pat[bit, u >> 6] |= (<unsigned long long> 1) << (u & 63)
        # Gray-code walk over linear masks: one pattern XOR per step
        g = 0
        for k in range(size):
            if k > 0:
                bit = bnl_ctz64(<unsigned long long> k)
                g ^= (<unsigned long long> 1) << bit
                for w in range(nwords):
                    cur[w] ^= pat[bit, w]
            d = 0
            for w in range(nwords):
                d += bnl_popcount64(cur[w] ^ fp[w])
            res[2 * <Py_ssize_t> g] = d
            res[2 * <Py_ssize_t> g + 1] = size - d
    return out
