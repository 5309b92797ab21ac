"""NumPy implementations of the butterfly kernels and the affine search.

Fallback backend used when the compiled extension is unavailable.  Every
function here is mirrored 1:1 in ``_fastkern.pyx``; outputs must be
bit-exact across backends.

All kernels take a C-contiguous uint8 truth table of length 2**n (or an
int64 coefficient vector for ``zeta``) and return fresh arrays.
"""

from __future__ import annotations

import numpy as np

NAME = "pure"


def _log2(size: int) -> int:
    return size.bit_length() - 1


def _halves(a: np.ndarray, step: int):
    """Views of the low/high halves of every block of width 2*step."""
    v = a.reshape(-1, 2, step)
    return v[:, 0, :], v[:, 1, :]


def mobius_xor(table: np.ndarray) -> np.ndarray:
    """XOR butterfly: truth table <-> ANF coefficients (an involution)."""
    a = np.array(table, dtype=np.uint8)
    step = 1
    while step < a.size:
        lo, hi = _halves(a, step)
        hi ^= lo
        step <<= 1
    return a


def walsh(table: np.ndarray) -> np.ndarray:
    """Hadamard butterfly on the sign vector (-1)**f."""
    a = 1 - 2 * table.astype(np.int64)
    step = 1
    while step < a.size:
        lo, hi = _halves(a, step)
        t = lo.copy()
        lo += hi
        hi -= t
        np.negative(hi, out=hi)
        step <<= 1
    return a


def nnf(table: np.ndarray) -> np.ndarray:
    """Signed Moebius butterfly: truth table -> integer NNF coefficients."""
    a = table.astype(np.int64)
    step = 1
    while step < a.size:
        lo, hi = _halves(a, step)
        hi -= lo
        step <<= 1
    return a


def zeta(coeffs: np.ndarray) -> np.ndarray:
    """Subset-sum butterfly: coefficients -> values at all Boolean points."""
    a = np.array(coeffs, dtype=np.int64)
    step = 1
    while step < a.size:
        lo, hi = _halves(a, step)
        hi += lo
        step <<= 1
    return a


def nlp_fast(table: np.ndarray) -> np.ndarray:
    """Nonlinearity-polynomial coefficients, butterfly construction.

    First half: blockwise pass per variable; the running sum goes to the
    low half, the high half is rescaled to -2x (with a +2**i offset at the
    first element of each block).  Second half comes from the half-storage
    identity c_(1,v) = -2 c_(0,v), constant slot excepted.
    """
    size = table.size
    c = table.astype(np.int64)
    step = 1
    while step < size:
        lo, hi = _halves(c, step)
        lo += hi
        hi *= -2
        hi[:, 0] += step
        step <<= 1
    out = np.empty(2 * size, dtype=np.int64)
    out[:size] = c
    out[size] = size - 2 * c[0]
    out[size + 1 :] = -2 * c[1:]
    return out


def nlp_direct(table: np.ndarray) -> np.ndarray:
    """Nonlinearity-polynomial coefficients from the closed formula.

    For v = (v0, vt) != 0:  c_v = (-2)**(w(v)-1) * (2**(n-w(vt)) - 2*S)
    with S the sum of f over the points above vt.  O(4**n); kept free of
    butterfly machinery so it can arbitrate ``nlp_fast``.
    """
    size = table.size
    n = _log2(size)
    idx = np.arange(size)
    t64 = table.astype(np.int64)
    out = np.empty(2 * size, dtype=np.int64)
    out[0] = int(t64.sum())
    for vt in range(size):
        s = int(t64[(idx & vt) == vt].sum())
        wv = vt.bit_count()
        m = 1 << (n - wv)
        if vt != 0:
            out[vt] = ((-2) ** (wv - 1)) * (m - 2 * s)
        out[size + vt] = ((-2) ** wv) * (m - 2 * s)
    return out


_LINEAR_PACKED_CACHE: dict[int, np.ndarray] = {}
_CACHE_N_MAX = 12


def _linear_tables_packed(n: int) -> np.ndarray:
    """Packed truth tables of all 2**n linear functions, row = mask."""
    size = 1 << n
    masks = np.arange(size, dtype=np.uint32)
    par = (np.bitwise_count(masks[:, None] & masks[None, :]) & 1).astype(np.uint8)
    return np.packbits(par, axis=1)


def affine_distances(table: np.ndarray) -> np.ndarray:
    """Distances to all 2**(n+1) affine functions, entry 2*mask + a0.

    Exhaustive XOR + popcount search over packed tables; independent of
    the transform-based engines.
    """
    size = table.size
    n = _log2(size)
    fp = np.packbits(table)
    if n <= _CACHE_N_MAX:
        lin = _LINEAR_PACKED_CACHE.get(n)
        if lin is None:
            lin = _linear_tables_packed(n)
            _LINEAR_PACKED_CACHE[n] = lin
        d0 = np.bitwise_count(lin ^ fp[None, :]).sum(axis=1, dtype=np.int64)
    else:
        d0 = np.empty(size, dtype=np.int64)
        u = np.arange(size, dtype=np.uint32)
        chunk = max(1, (1 << 24) // size)
        for start in range(0, size, chunk):
            masks = np.arange(start, min(start + chunk, size), dtype=np.uint32)
            par = (np.bitwise_count(masks[:, None] & u[None, :]) & 1).astype(np.uint8)
            lp = np.packbits(par, axis=1)
            d0[start : start + masks.size] = np.bitwise_count(lp ^ fp[None, :]).sum(
                axis=1, dtype=np.int64
            )
    out = np.empty(2 * size, dtype=np.int64)
    out[0::2] = d0
    out[1::2] = size - d0
    return out
