"""The integer nonlinearity polynomial and its fast evaluation.

For a function f on n variables, the nonlinearity polynomial is the
multilinear integer polynomial in a_0, ..., a_n whose value at each
Boolean point (a_0, v) equals the distance from f to the affine function
a_0 + v.x.  Coefficients are built either by the O(n 2**n) butterfly
(`nl_polynomial_fast`) or by the closed per-coefficient formula
(`nl_polynomial_direct`); the two routes arbitrate each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .bitfn import BooleanFunction
from .errors import CapExceeded

#: Cap for symbolic XOR expansion (output has 2**len - 1 terms).
XOR_EXPAND_MAX = 20


def _frozen_i64(values: np.ndarray) -> np.ndarray:
    v = np.ascontiguousarray(values, dtype=np.int64)
    v.flags.writeable = False
    return v


@dataclass(frozen=True)
class NlPolynomial:
    """Coefficient vector of length 2**(n+1).

    Index k < 2**n holds the coefficient of a_1^{v_1}...a_n^{v_n} with
    idx(v) = k (a_n least significant); index 2**n + k holds the
    coefficient of the same monomial times a_0.  The half-storage
    identities and the |c| <= 2**n bound are checked on construction.
    """

    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = _frozen_i64(self.coeffs)
        object.__setattr__(self, "coeffs", c)
        size = 1 << self.n
        if c.size != 2 * size:
            raise ValueError(f"expected {2 * size} coefficients, got {c.size}")
        if c[size] != size - 2 * c[0]:
            raise ValueError("constant identity c_(1,0) = 2^n - 2*c_0 violated")
        if size > 1 and not np.array_equal(c[size + 1 :], -2 * c[1:size]):
            raise ValueError("half-storage identity c_(1,v) = -2*c_(0,v) violated")
        if int(np.abs(c).max()) > size:
            raise ValueError(f"coefficient bound |c| <= {size} violated")

    def __eq__(self, other):
        if not isinstance(other, NlPolynomial):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.coeffs.tobytes()))


@dataclass(frozen=True)
class DistanceVector:
    """Distances to all affine functions; entry at 2*idx(v) + a0."""

    n: int
    dists: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dists", _frozen_i64(self.dists))

    def __eq__(self, other):
        if not isinstance(other, DistanceVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.dists, other.dists)

    def __hash__(self):
        return hash((self.n, self.dists.tobytes()))


def nl_polynomial_fast(f: BooleanFunction) -> NlPolynomial:
    """Butterfly construction, about n*2**(n-1) sums plus rescales."""
    return NlPolynomial(f.n, _kernels.backend().nlp_fast(f.table))


def nl_polynomial_direct(f: BooleanFunction) -> NlPolynomial:
    """Closed-formula construction; the independent oracle for the fast one."""
    return NlPolynomial(f.n, _kernels.backend().nlp_direct(f.table))


def evaluate_all(p: NlPolynomial) -> DistanceVector:
    """Evaluate at every point of {0,1}**(n+1) via the zeta butterfly."""
    ev = _kernels.backend().zeta(p.coeffs)
    size = 1 << p.n
    dv = np.empty(2 * size, dtype=np.int64)
    dv[0::2] = ev[:size]
    dv[1::2] = ev[size:]
    return DistanceVector(p.n, dv)


def complement_nlp(p: NlPolynomial) -> NlPolynomial:
    """Nonlinearity polynomial of f + 1: constant -> 2**n - c_0, rest negated."""
    c = -p.coeffs
    c[0] = (1 << p.n) - p.coeffs[0]
    return NlPolynomial(p.n, c)


def xor_expand(symbols: Sequence[str]) -> dict[tuple[str, ...], int]:
    """Multilinear integer polynomial equal to b_1 xor ... xor b_k on bits.

    The coefficient of each nonempty product of inputs is
    (-2)**(weight - 1).  Keys are tuples of the chosen symbols in input
    order; the cap guards the 2**k - 1 output terms.
    """
    k = len(symbols)
    if not 1 <= k <= XOR_EXPAND_MAX:
        raise CapExceeded(f"need 1..{XOR_EXPAND_MAX} symbols, got {k}")
    if len(set(symbols)) != k:
        raise CapExceeded("symbols must be distinct")
    out: dict[tuple[str, ...], int] = {}
    for mask in range(1, 1 << k):
        names = tuple(symbols[i] for i in range(k) if (mask >> i) & 1)
        out[names] = (-2) ** (mask.bit_count() - 1)
    return out


def eval_multilinear(poly: Mapping[tuple[str, ...], int], point: Mapping[str, int]) -> int:
    """Evaluate an ``xor_expand`` style polynomial at a 0/1 assignment."""
    total = 0
    for names, coeff in poly.items():
        term = coeff
        for name in names:
            term *= point[name]
        total += term
    return total


def _term_vars(index: int, n: int) -> list[str]:
    names = []
    if index >> n:
        names.append("a0")
    names.extend(f"a{j}" for j in range(1, n + 1) if (index >> (n - j)) & 1)
    return names


def render_poly(coeffs: np.ndarray, n: int, constant_offset: int = 0) -> str:
    """One-line rendering over a_0..a_n, terms by descending index.

    The constant term (index 0, shifted by ``constant_offset``) is always
    printed, even when zero.
    """
    parts: list[str] = []
    const = int(coeffs[0]) + constant_offset
    for k in range(len(coeffs) - 1, 0, -1):
        c = int(coeffs[k])
        if c == 0:
            continue
        names = "*".join(_term_vars(k, n))
        mag = abs(c)
        body = names if mag == 1 else f"{mag}*{names}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    if not parts:
        return str(const)
    if const >= 0:
        parts.append(f"+ {const}")
    else:
        parts.append(f"- {-const}")
    return " ".join(parts)


def nlp_to_text(p: NlPolynomial) -> str:
    """Canonical text form, e.g. ``4*a0*a1*a2 - 2*a0 - 2*a1*a2 + 3``."""
    return render_poly(p.coeffs, p.n)
