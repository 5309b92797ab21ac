"""Boolean-function representations, parsing, and elementary metrics.

Conventions used throughout the package:

* A point u = (u_1, ..., u_n) is addressed by the integer
  ``idx(u) = sum u_i * 2**(n-i)``: x_n is the least significant bit, so
  truth tables are listed in counting order 00..0, 00..1, ..., 11..1.
* Monomial masks for ANF terms use the same layout; the mask bit for
  variable x_j sits at position n - j.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    NotBooleanValued,
    NotPowerOfTwo,
    ParseError,
    TooLarge,
    VariableOutOfRange,
)

#: Hard cap on the variable count; keeps tables at most 2 MiB and every
#: derived integer vector within int64 range.
N_MAX = 24


def point_to_index(bits: Sequence[int]) -> int:
    """Fold a point (u_1, ..., u_n) into its table index."""
    k = 0
    for b in bits:
        k = (k << 1) | (b & 1)
    return k


def index_to_point(k: int, n: int) -> tuple[int, ...]:
    """Unfold a table index into the point (u_1, ..., u_n)."""
    return tuple((k >> (n - j)) & 1 for j in range(1, n + 1))


@dataclass(frozen=True)
class BooleanFunction:
    """A function F_2^n -> F_2 held as a read-only uint8 truth table."""

    n: int
    table: np.ndarray

    def __post_init__(self):
        t = np.ascontiguousarray(self.table, dtype=np.uint8)
        if self.n < 1 or t.size != 1 << self.n:
            raise NotPowerOfTwo(f"table of length {t.size} does not match n={self.n}")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))


@dataclass(frozen=True)
class AnfForm:
    """Square-free F_2 polynomial: a set of monomial masks."""

    n: int
    monomials: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "monomials", frozenset(self.monomials))
        bad = [m for m in self.monomials if not 0 <= m < (1 << self.n)]
        if bad:
            raise DimensionMismatch(f"monomial mask {bad[0]:#x} needs more than n={self.n} variables")

    @property
    def degree(self) -> int:
        """Algebraic degree; 0 for the zero polynomial."""
        return max((m.bit_count() for m in self.monomials), default=0)


@dataclass(frozen=True)
class AffineFunction:
    """a_0 + a_1 x_1 + ... + a_n x_n given by the constant bit and a mask."""

    a0: int
    a: int

    def __post_init__(self):
        if self.a0 not in (0, 1):
            raise NotBooleanValued(f"a0 must be a bit, got {self.a0}")
        if self.a < 0:
            raise DimensionMismatch("negative coefficient mask")

    def value(self, u: int) -> int:
        return self.a0 ^ ((self.a & u).bit_count() & 1)


def from_truth_table(bits: Iterable[int]) -> BooleanFunction:
    """Build a function from its evaluation vector (length 2**n, n >= 1)."""
    arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
    size = arr.size
    if size < 2 or size & (size - 1):
        raise NotPowerOfTwo(f"truth table length {size} is not a power of two >= 2")
    n = size.bit_length() - 1
    if n > N_MAX:
        raise TooLarge(f"n={n} exceeds N_MAX={N_MAX}")
    if not np.isin(arr, (0, 1)).all():
        raise NotBooleanValued("truth table entries must be 0 or 1")
    return BooleanFunction(n, arr.astype(np.uint8))


def evaluate(f: BooleanFunction, u: int | Sequence[int]) -> int:
    """f at the point u, given as an index or as a bit tuple (u_1..u_n)."""
    if not isinstance(u, (int, np.integer)):
        u = point_to_index(u)
    return int(f.table[u])


def weight(f: BooleanFunction) -> int:
    """Number of ones in the evaluation vector."""
    return int(np.count_nonzero(f.table))


def distance(f: BooleanFunction, g: BooleanFunction) -> int:
    """Hamming distance d(f, g) = w(f + g)."""
    if f.n != g.n:
        raise DimensionMismatch(f"distance between n={f.n} and n={g.n} functions")
    return int(np.count_nonzero(f.table ^ g.table))


def affine_table(alpha: AffineFunction, n: int) -> BooleanFunction:
    """Evaluation vector of an affine function over all 2**n points."""
    if alpha.a >= 1 << n:
        raise DimensionMismatch(f"mask {alpha.a:#x} needs more than n={n} variables")
    u = np.arange(1 << n, dtype=np.uint32)
    bits = (np.bitwise_count(u & np.uint32(alpha.a)) & 1).astype(np.uint8)
    if alpha.a0:
        bits ^= 1
    return BooleanFunction(n, bits)


def affine_anf(alpha: AffineFunction, n: int) -> AnfForm:
    """ANF of an affine function (degree <= 1 monomials)."""
    if alpha.a >= 1 << n:
        raise DimensionMismatch(f"mask {alpha.a:#x} needs more than n={n} variables")
    monos = {1 << p for p in range(n) if (alpha.a >> p) & 1}
    if alpha.a0:
        monos.add(0)
    return AnfForm(n, frozenset(monos))


def affine_from_anf(p: AnfForm) -> AffineFunction:
    """Inverse of :func:`affine_anf`; rejects degree-2+ polynomials."""
    if p.degree > 1:
        raise DimensionMismatch(f"polynomial of degree {p.degree} is not affine")
    a = 0
    a0 = 0
    for m in p.monomials:
        if m == 0:
            a0 = 1
        else:
            a |= m
    return AffineFunction(a0, a)


# --- ANF text grammar -----------------------------------------------------
#
# Terms joined by '+'; a term is '1', '0', or '*'-joined variables 'x<k>'
# with 1 <= k <= n.  Duplicate terms cancel in pairs (F_2 arithmetic).


def parse_anf(text: str, n: int | None = None) -> AnfForm:
    """Parse an ANF expression such as ``"x1*x2 + 1"``.

    When ``n`` is omitted it is inferred as the largest variable index
    (minimum 1).  Raises :class:`ParseError` (with a character position)
    on malformed input and :class:`VariableOutOfRange` for indices
    outside 1..n.
    """
    if not text or text.isspace():
        raise ParseError("empty expression", 0)
    terms: list[tuple[frozenset[int] | None, int]] = []
    max_var = 0
    start = 0
    chunks = []
    for i, ch in enumerate(text):
        if ch == "+":
            chunks.append((text[start:i], start))
            start = i + 1
    chunks.append((text[start:], start))

    for raw, off in chunks:
        factors = []
        fstart = 0
        for i, ch in enumerate(raw):
            if ch == "*":
                factors.append((raw[fstart:i], off + fstart))
                fstart = i + 1
        factors.append((raw[fstart:], off + fstart))
        varset: set[int] = set()
        zero_term = False
        for ftext, fpos in factors:
            lead = fpos + (len(ftext) - len(ftext.lstrip()))
            tok = ftext.strip()
            if not tok:
                raise ParseError("empty term", lead)
            if tok == "1":
                continue
            if tok == "0":
                zero_term = True
                continue
            if not tok.startswith("x") or not tok[1:].isdigit():
                raise ParseError(f"expected '1' or 'x<k>', got {tok!r}", lead)
            k = int(tok[1:])
            if k < 1 or (n is not None and k > n):
                raise VariableOutOfRange(f"variable x{k} outside 1..{n}", lead)
            varset.add(k)
            max_var = max(max_var, k)
        if not zero_term:
            terms.append((frozenset(varset), off))

    nf = n if n is not None else max(max_var, 1)
    counts = Counter(vs for vs, _ in terms)
    monos = set()
    for vs, cnt in counts.items():
        if cnt % 2:
            monos.add(sum(1 << (nf - k) for k in vs))
    return AnfForm(nf, frozenset(monos))


def _mask_vars(mask: int, n: int) -> tuple[int, ...]:
    return tuple(j for j in range(1, n + 1) if (mask >> (n - j)) & 1)


def anf_to_text(p: AnfForm) -> str:
    """Render an ANF; terms by descending degree, then lexicographically."""
    if not p.monomials:
        return "0"
    keyed = sorted(p.monomials, key=lambda m: (-m.bit_count(), _mask_vars(m, p.n)))
    parts = []
    for m in keyed:
        names = [f"x{j}" for j in _mask_vars(m, p.n)]
        parts.append("*".join(names) if names else "1")
    return " + ".join(parts)


# --- Truth-table text I/O -------------------------------------------------


def parse_truth_table(text: str) -> BooleanFunction:
    """Parse a truth table from text.

    A plain 0/1 string is read as the bit sequence (index 0 first).  With
    a ``0x`` prefix, or when other hex digits appear, the text is read as
    hex with the bit for index 0 in the most significant position.
    """
    t = text.strip()
    if not t:
        raise ParseError("empty truth table", 0)
    if t[:2].lower() == "0x":
        digits, is_hex = t[2:], True
    elif set(t) <= {"0", "1"}:
        digits, is_hex = t, False
    else:
        digits, is_hex = t, True
    if not digits:
        raise ParseError("no digits after 0x", 2)
    if is_hex:
        for i, ch in enumerate(digits):
            if ch not in "0123456789abcdefABCDEF":
                raise ParseError(f"invalid hex digit {ch!r}", text.index(digits) + i)
        size = 4 * len(digits)
        if size & (size - 1):
            raise NotPowerOfTwo(f"{len(digits)} hex digits encode {size} bits, not a power of two")
        value = int(digits, 16)
    else:
        size = len(digits)
        value = int(digits, 2) if size else 0
    bits = [(value >> (size - 1 - i)) & 1 for i in range(size)]
    return from_truth_table(bits)


def truth_table_hex(f: BooleanFunction) -> str:
    """Hex rendering, index-0 bit first; needs n >= 2 (whole hex digits)."""
    if f.n < 2:
        raise NotPowerOfTwo("hex rendering needs a table of at least 4 bits")
    size = 1 << f.n
    value = int("".join("1" if b else "0" for b in f.table), 2)
    return f"0x{value:0{size // 4}x}"


def truth_table_bits(f: BooleanFunction) -> str:
    """0/1 string rendering, index 0 first."""
    return "".join("1" if b else "0" for b in f.table)
