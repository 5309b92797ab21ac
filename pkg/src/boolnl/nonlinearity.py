"""Three independent nonlinearity engines and the covering-radius bound.

Every engine reports the same value and the same complete set of nearest
affine functions; they share no computation path:

* ``nlp``   - nonlinearity polynomial + fast evaluation over the cube,
* ``walsh`` - fast Walsh transform extremes,
* ``brute`` - exhaustive distance search over all 2**(n+1) affine tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bitfn import AffineFunction, BooleanFunction
from .errors import OutOfRange, TooLarge
from .nlpoly import evaluate_all, nl_polynomial_fast

#: Exhaustive search cap: 2**(2n+1)/64 word operations stay near 10**8.
BRUTE_N_MAX = 16


@dataclass(frozen=True)
class NlReport:
    """Nonlinearity value plus all minimizing affine functions."""

    value: int
    method: str
    nearest: tuple[AffineFunction, ...]


def _report(dists: np.ndarray, method: str) -> NlReport:
    m = int(dists.min())
    js = np.flatnonzero(dists == m)
    alphas = sorted(
        (AffineFunction(int(j) & 1, int(j) >> 1) for j in js),
        key=lambda a: (a.a0, a.a),
    )
    return NlReport(m, method, tuple(alphas))


def nonlinearity_nlp(f: BooleanFunction) -> NlReport:
    """Minimum of the nonlinearity polynomial over the Boolean cube."""
    dv = evaluate_all(nl_polynomial_fast(f))
    return _report(dv.dists, "nlp")


def nonlinearity_walsh(f: BooleanFunction) -> NlReport:
    """2**(n-1) - max|spectrum|/2, nearest functions read off the extremes.

    The sign of an extreme entry fixes the constant term of the nearest
    function: positive means a0 = 0, negative means a0 = 1.
    """
    vals = _kernels.backend().walsh(f.table)
    size = vals.size
    m = int(np.abs(vals).max())
    value = (size - m) // 2
    alphas = []
    for v in np.flatnonzero(np.abs(vals) == m):
        alphas.append(AffineFunction(0 if vals[v] > 0 else 1, int(v)))
    alphas.sort(key=lambda a: (a.a0, a.a))
    return NlReport(value, "walsh", tuple(alphas))


def nonlinearity_brute(f: BooleanFunction) -> NlReport:
    """Reference engine: exhaustive XOR + popcount over all affine tables."""
    if f.n > BRUTE_N_MAX:
        raise TooLarge(f"brute-force search capped at n={BRUTE_N_MAX}, got n={f.n}")
    dists = _kernels.backend().affine_distances(f.table)
    return _report(dists, "brute")


def covering_bound(n: int):
    """Upper bound 2**(n-1) - 2**(n/2-1) on the nonlinearity.

    Exact integer for even n; a float for odd n (the bound is then
    irrational and cannot be attained).
    """
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if n % 2 == 0:
        return (1 << (n - 1)) - (1 << (n // 2 - 1))
    return float(2.0 ** (n - 1) - 2.0 ** (n / 2 - 1))
