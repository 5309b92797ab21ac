"""Instrumented plain-Python kernels with exact operation counters.

Used by the test suite to pin the arithmetic-operation counts of the
butterfly algorithms (n * 2**(n-1) pair steps per transform; the
nonlinearity-polynomial construction additionally does one rescale per
pair and 2**n rescales for the second half).  Deliberately loop-based and
slow; not part of the runtime dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCounts:
    adds: int = 0
    doublings: int = 0


def _pairs(size: int):
    step = 1
    while step < size:
        b = 0
        while b < size:
            for x in range(b, b + step):
                yield x, x + step, x == b
            b += 2 * step
        step <<= 1


def mobius_counted(table) -> tuple[list, int]:
    a = [int(b) for b in table]
    ops = 0
    for lo, hi, _ in _pairs(len(a)):
        a[hi] ^= a[lo]
        ops += 1
    return a, ops


def walsh_counted(table) -> tuple[list, int]:
    a = [1 - 2 * int(b) for b in table]
    ops = 0
    for lo, hi, _ in _pairs(len(a)):
        a[lo], a[hi] = a[lo] + a[hi], a[lo] - a[hi]
        ops += 1
    return a, ops


def nnf_counted(table) -> tuple[list, int]:
    a = [int(b) for b in table]
    ops = 0
    for lo, hi, _ in _pairs(len(a)):
        a[hi] -= a[lo]
        ops += 1
    return a, ops


def nlp_fast_counted(table) -> tuple[list, OpCounts]:
    """Nonlinearity-polynomial construction with per-phase counters.

    ``adds`` counts only the first-phase accumulation sums; ``doublings``
    counts every -2x rescale (first phase and second half).
    """
    size = len(table)
    c = [int(b) for b in table] + [0] * size
    counts = OpCounts()
    step = 1
    while step < size:
        b = 0
        while b < size:
            for x in range(b, b + step):
                c[x] += c[x + step]
                counts.adds += 1
                if x == b:
                    c[x + step] = step - 2 * c[x + step]
                else:
                    c[x + step] = -2 * c[x + step]
                counts.doublings += 1
            b += 2 * step
        step <<= 1
    c[size] = size - 2 * c[0]
    counts.doublings += 1
    for k in range(1, size):
        c[size + k] = -2 * c[k]
        counts.doublings += 1
    return c, counts
