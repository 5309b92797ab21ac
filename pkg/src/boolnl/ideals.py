"""Ideals whose varieties encode distances to affine functions.

Two families over the variables a_0, ..., a_n:

* J-style (F_2): products of t offset factors g(A, u) + f(u) over all
  t-subsets of points, plus field equations.  The variety is nonempty
  exactly when some affine function lies within distance t - 1.
* N-style (rationals): field equations plus (nonlinearity polynomial - t).
  The variety is nonempty exactly when some affine function lies at
  distance t.

Since the field equations pin every variety inside {0,1}**(n+1),
emptiness is decided here by exhaustive evaluation over the cube; the
generators can be exported as plain text for an external computer-algebra
system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

from .bitfn import BooleanFunction
from .errors import CapExceeded, LimitExceeded, OutOfRange
from .nlpoly import evaluate_all, nl_polynomial_fast, render_poly

#: Work guard for the literal (generator-by-generator) variety check.
DIRECT_CHECK_MAX_OPS = 5_000_000


def _offset_factors(f: BooleanFunction) -> list[tuple[int, int]]:
    """Affine factors g(A, u) + f(u), one per point u.

    Each factor is (constant bit, variable mask) with a_0 at mask bit 0
    and a_j at mask bit j.
    """
    n = f.n
    out = []
    for u in range(1 << n):
        amask = 1
        for j in range(1, n + 1):
            if (u >> (n - j)) & 1:
                amask |= 1 << j
        out.append((int(f.table[u]), amask))
    return out


def _factor_text(const: int, amask: int, n: int) -> str:
    parts = [f"a{j}" for j in range(n + 1) if (amask >> j) & 1]
    if const:
        parts.append("1")
    return " + ".join(parts) if parts else "0"


def _factor_value(const: int, amask: int, point: int) -> int:
    return const ^ ((amask & point).bit_count() & 1)


@dataclass(frozen=True)
class IdealSpec:
    """Generator set description for one ideal; generators stream lazily."""

    kind: str
    n: int
    t: int
    generator_count: int
    f: BooleanFunction = field(repr=False)

    def generator_lines(self, limit: int | None = None) -> Iterator[str]:
        """Yield rendered generators; raise LimitExceeded at a truncation.

        N-style order: field equations, then the polynomial constraint.
        J-style order: monomial generators (the combinatorial part the
        limit is meant for), then field equations.
        """
        emitted = 0
        for line in self._all_lines():
            if limit is not None and emitted >= limit:
                raise LimitExceeded(f"generator stream truncated at {limit}")
            yield line
            emitted += 1

    def _all_lines(self) -> Iterator[str]:
        n = self.n
        if self.kind == "N":
            for j in range(n + 1):
                yield f"a{j}^2 - a{j}"
            coeffs = nl_polynomial_fast(self.f).coeffs
            yield render_poly(coeffs, n, constant_offset=-self.t)
        else:
            yield from enumerate_J_generators(self.f, self.t, limit=None)
            for j in range(n + 1):
                yield f"a{j}^2 + a{j}"


def build_N_ideal(f: BooleanFunction, t: int) -> IdealSpec:
    """Field equations plus (nonlinearity polynomial - t)."""
    if not 0 <= t <= 1 << f.n:
        raise OutOfRange(f"t={t} outside 0..{1 << f.n}")
    return IdealSpec("N", f.n, t, (f.n + 1) + 1, f)


def build_J_ideal(f: BooleanFunction, t: int) -> IdealSpec:
    """All t-fold products of offset factors plus field equations."""
    if not 1 <= t <= 1 << f.n:
        raise OutOfRange(f"t={t} outside 1..{1 << f.n}")
    count = math.comb(1 << f.n, t) + (f.n + 1)
    return IdealSpec("J", f.n, t, count, f)


def enumerate_J_generators(
    f: BooleanFunction, t: int, limit: int | None = None
) -> Iterator[str]:
    """Stream the monomial generators of the J-style ideal.

    Products run over t-subsets of points in lexicographic index order.
    With a ``limit``, :class:`LimitExceeded` is raised once a further
    generator would exceed it (the t-subset count is astronomical).
    """
    if not 1 <= t <= 1 << f.n:
        raise OutOfRange(f"t={t} outside 1..{1 << f.n}")
    return _j_generator_stream(f, t, limit)


def _j_generator_stream(f: BooleanFunction, t: int, limit: int | None) -> Iterator[str]:
    factors = _offset_factors(f)
    n = f.n
    emitted = 0
    for combo in combinations(range(len(factors)), t):
        if limit is not None and emitted >= limit:
            raise LimitExceeded(f"generator stream truncated at {limit}")
        texts = (_factor_text(*factors[h], n) for h in combo)
        if t == 1:
            yield next(texts)
        else:
            yield "*".join(f"({s})" for s in texts)
        emitted += 1


def variety_nonempty_N(f: BooleanFunction, t: int) -> bool:
    """True iff some affine function lies at distance exactly t from f.

    Decided by evaluating the polynomial constraint over the cube (the
    field equations admit no other points).
    """
    if not 0 <= t <= 1 << f.n:
        raise OutOfRange(f"t={t} outside 0..{1 << f.n}")
    dv = evaluate_all(nl_polynomial_fast(f))
    return bool(np.any(dv.dists == t))


def nonlinearity_via_N(f: BooleanFunction) -> int:
    """Smallest t with a nonempty N-style variety; equals N(f).

    The search starts at t = 0 so that affine inputs terminate.
    """
    dv = evaluate_all(nl_polynomial_fast(f))
    t = 0
    while not np.any(dv.dists == t):
        t += 1
    return t


def variety_nonempty_J(
    f: BooleanFunction, t: int, method: str = "distance"
) -> bool:
    """True iff some affine function lies within distance t - 1 of f.

    ``method="distance"`` uses the distance-vector minimum (the two sides
    of the equivalence coincide over the cube).  ``method="direct"``
    evaluates every streamed generator at every cube point; it is guarded
    by a work cap and meant for small n cross-checks.
    """
    if not 1 <= t <= 1 << f.n:
        raise OutOfRange(f"t={t} outside 1..{1 << f.n}")
    if method == "distance":
        dv = evaluate_all(nl_polynomial_fast(f))
        return int(dv.dists.min()) <= t - 1
    if method != "direct":
        raise OutOfRange(f"unknown method {method!r}")

    size = 1 << f.n
    points = 1 << (f.n + 1)
    if math.comb(size, t) * points * t > DIRECT_CHECK_MAX_OPS:
        raise CapExceeded("direct variety check too large; use method='distance'")
    factors = _offset_factors(f)
    for point in range(points):
        evals = [_factor_value(c, m, point) for c, m in factors]
        in_variety = True
        for combo in combinations(range(size), t):
            prod = 1
            for h in combo:
                if evals[h] == 0:
                    prod = 0
                    break
            if prod:
                in_variety = False
                break
        if in_variety:
            return True
    return False


def nonlinearity_via_J(f: BooleanFunction) -> int:
    """Smallest j with a nonempty J-style variety, minus one; equals N(f)."""
    dv = evaluate_all(nl_polynomial_fast(f))
    m = int(dv.dists.min())
    j = 1
    while not m <= j - 1:
        j += 1
    return j - 1


def export_ideal(spec: IdealSpec, limit: int | None = None) -> str:
    """Plain-text generator list for an external computer-algebra system.

    One generator per line after a header recording kind, n, t, the total
    generator count, and whether the body was truncated at ``limit``.
    """
    body: list[str] = []
    truncated = False
    try:
        for line in spec.generator_lines(limit=limit):
            body.append(line)
    except LimitExceeded:
        truncated = True
    header = (
        f"# ideal kind={spec.kind} n={spec.n} t={spec.t}"
        f" generators={spec.generator_count} emitted={len(body)}"
        f" truncated={int(truncated)}"
    )
    return "\n".join([header, *body]) + "\n"
