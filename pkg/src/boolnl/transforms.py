"""The three O(n 2**n) in-place butterfly transforms.

* Moebius (F_2): truth table <-> ANF coefficients, an involution.
* Walsh (integers): spectrum of the sign vector (-1)**f.
* Signed Moebius (integers): truth table -> NNF coefficients; the inverse
  is the subset-sum (zeta) butterfly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bitfn import AnfForm, BooleanFunction
from .errors import NotBooleanValued


def _frozen_i64(values: np.ndarray) -> np.ndarray:
    v = np.ascontiguousarray(values, dtype=np.int64)
    v.flags.writeable = False
    return v


@dataclass(frozen=True)
class WalshSpectrum:
    """Integer spectrum; entry at idx(v) is sum_y (-1)**(v.y + f(y))."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_i64(self.values))

    def __eq__(self, other):
        if not isinstance(other, WalshSpectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.n, self.values.tobytes()))


@dataclass(frozen=True)
class NnfForm:
    """Integer multilinear coefficients; entry at idx(u) multiplies X^u."""

    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frozen_i64(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, NnfForm):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.coeffs.tobytes()))


def to_anf(f: BooleanFunction) -> AnfForm:
    """ANF via the fast Moebius transform."""
    vec = _kernels.backend().mobius_xor(f.table)
    return AnfForm(f.n, frozenset(int(m) for m in np.flatnonzero(vec)))


def from_anf(p: AnfForm) -> BooleanFunction:
    """Truth table via the fast Moebius transform (same butterfly)."""
    ind = np.zeros(1 << p.n, dtype=np.uint8)
    if p.monomials:
        ind[sorted(p.monomials)] = 1
    return BooleanFunction(p.n, _kernels.backend().mobius_xor(ind))


def walsh(f: BooleanFunction) -> WalshSpectrum:
    """Fast Walsh transform of the sign vector (0 -> +1, 1 -> -1)."""
    return WalshSpectrum(f.n, _kernels.backend().walsh(f.table))


def to_nnf(f: BooleanFunction) -> NnfForm:
    """Integer NNF coefficients via the signed Moebius butterfly."""
    return NnfForm(f.n, _kernels.backend().nnf(f.table))


def nnf_to_table(nnf: NnfForm) -> BooleanFunction:
    """Reconstruct the truth table: f(u) = sum of coeffs below u.

    Raises :class:`NotBooleanValued` when the reconstruction leaves {0,1},
    i.e. the coefficients are not the NNF of a Boolean function.
    """
    vals = _kernels.backend().zeta(nnf.coeffs)
    if not np.isin(vals, (0, 1)).all():
        bad = int(np.flatnonzero(~np.isin(vals, (0, 1)))[0])
        raise NotBooleanValued(f"reconstructed value {int(vals[bad])} at index {bad}")
    return BooleanFunction(nnf.n, vals.astype(np.uint8))


def nnf_to_text(nnf: NnfForm) -> str:
    """Render an NNF, terms by ascending degree then lexicographically."""
    n = nnf.n
    entries = [(int(m), int(c)) for m, c in enumerate(nnf.coeffs) if c]
    if not entries:
        return "0"

    def vars_of(mask):
        return tuple(j for j in range(1, n + 1) if (mask >> (n - j)) & 1)

    entries.sort(key=lambda mc: (mc[0].bit_count(), vars_of(mc[0])))
    parts: list[str] = []
    for mask, c in entries:
        names = "*".join(f"x{j}" for j in vars_of(mask))
        mag = abs(c)
        if not names:
            body = str(mag)
        elif mag == 1:
            body = names
        else:
            body = f"{mag}*{names}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
