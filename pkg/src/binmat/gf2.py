"""Dense linear algebra over GF(2) with bit-packed rows.

Matrices are stored row-major as Python ints: bit j of row i is the
entry in row i, column j (columns 0-indexed internally).  All public
operations that take column indices use 1-based indices, matching the
element labels used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class RankDeficientError(ValueError):
    """Raised when an operation requires a full-row-rank matrix."""


@dataclass(frozen=True)
class BitVector:
    """A vector over GF(2), coordinate i (1-based) stored in bit i-1."""

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0 or self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside declared length")

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "BitVector":
        bits = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError("entries must be 0 or 1")
            bits |= c << i
        return cls(len(coords), bits)

    @classmethod
    def parse(cls, text: str) -> "BitVector":
        """Parse bracket notation like ``[1110]`` (first char = coordinate 1)."""
        t = text.strip()
        if t.startswith("[") and t.endswith("]"):
            t = t[1:-1]
        t = t.replace(" ", "")
        if not t or any(c not in "01" for c in t):
            raise ValueError(f"not a bit vector: {text!r}")
        return cls.from_coords([int(c) for c in t])

    def coord(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise ValueError(f"coordinate {i} out of range")
        return (self.bits >> (i - 1)) & 1

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def value(self) -> int:
        """Numeric value reading coordinates as binary digits b1 b2 ... bn."""
        v = 0
        for i in range(self.length):
            v = (v << 1) | ((self.bits >> i) & 1)
        return v

    def __str__(self) -> str:
        return "[" + "".join(str(b) for b in self.coords()) + "]"


@dataclass(frozen=True)
class BitMatrix:
    """An r x n matrix over GF(2); ``rows[i]`` holds row i, bit j = column j."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0 or len(self.rows) != self.nrows:
            raise ValueError("inconsistent dimensions")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError("row has bits beyond declared width")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], ncols: int | None = None) -> "BitMatrix":
        packed = []
        width = ncols
        for row in rows:
            coords = [int(c) for c in row]
            if any(c not in (0, 1) for c in coords):
                raise ValueError("entries must be 0 or 1")
            if width is None:
                width = len(coords)
            elif len(coords) != width:
                raise ValueError("ragged rows")
            packed.append(sum(c << j for j, c in enumerate(coords)))
        if width is None:
            width = 0
        return cls(len(packed), width, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        """Entry in row i, column j (both 1-based)."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise ValueError(f"entry ({i},{j}) out of range")
        return (self.rows[i - 1] >> (j - 1)) & 1

    def column(self, j: int) -> int:
        """Column j (1-based) packed as an int, bit i = row i."""
        if not 1 <= j <= self.ncols:
            raise ValueError(f"column {j} out of range")
        c = 0
        for i, row in enumerate(self.rows):
            c |= ((row >> (j - 1)) & 1) << i
        return c

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(1, self.ncols + 1)]

    def row_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.ncols)) for r in self.rows]

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.ncols, self.nrows, tuple(self.columns()))

    def mul_vector(self, v: BitVector) -> int:
        """Matrix-vector product over GF(2); result packed with bit i = row i."""
        if v.length != self.ncols:
            raise ValueError("dimension mismatch")
        out = 0
        for i, row in enumerate(self.rows):
            out |= ((row & v.bits).bit_count() & 1) << i
        return out


def rank_of_columns(cols: Iterable[int]) -> int:
    """GF(2) rank of a collection of bit-packed column vectors."""
    pivots: dict[int, int] = {}
    rank = 0
    for c in cols:
        while c:
            top = c.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = c
                rank += 1
                break
            c ^= p
    return rank


def rank(m: BitMatrix) -> int:
    return rank_of_columns(m.columns())


def rank_subset(m: BitMatrix, cols: Iterable[int]) -> int:
    """GF(2) rank of the selected columns (1-based indices)."""
    sel = []
    for j in cols:
        if not 1 <= j <= m.ncols:
            raise ValueError(f"column index {j} out of range")
        sel.append(m.column(j))
    return rank_of_columns(sel)


def standard_form(m: BitMatrix, basis: Iterable[int] | None = None) -> tuple[BitMatrix, tuple[int, ...]]:
    """Row-reduce ``m`` to [I_r | D] form, permuting columns as needed.

    Returns the new matrix together with a permutation record: a tuple
    whose entry at new position p (0-indexed) is the original 1-based
    column index now sitting at position p.  Requires full row rank.
    If ``basis`` is given its columns (1-based) must be independent and
    are moved to the front in ascending order.
    """
    r, n = m.nrows, m.ncols
    rows = list(m.rows)
    if basis is not None:
        basis_order = sorted(set(basis))
        if len(basis_order) != r:
            raise ValueError(f"basis must have {r} columns")
        for j in basis_order:
            if not 1 <= j <= n:
                raise ValueError(f"column index {j} out of range")
    else:
        basis_order = None

    pivot_cols: list[int] = []
    pivot_row = 0
    candidates = basis_order if basis_order is not None else range(1, n + 1)
    for j in candidates:
        bit = 1 << (j - 1)
        src = next((i for i in range(pivot_row, r) if rows[i] & bit), None)
        if src is None:
            if basis_order is not None:
                raise ValueError(f"basis columns are dependent at column {j}")
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        for i in range(r):
            if i != pivot_row and rows[i] & bit:
                rows[i] ^= rows[pivot_row]
        pivot_cols.append(j)
        pivot_row += 1
        if pivot_row == r:
            break
    if pivot_row < r:
        raise RankDeficientError("matrix does not have full row rank")

    perm = tuple(pivot_cols) + tuple(j for j in range(1, n + 1) if j not in set(pivot_cols))
    new_rows = []
    for i in range(r):
        row = rows[i]
        new_rows.append(sum(((row >> (orig - 1)) & 1) << p for p, orig in enumerate(perm)))
    return BitMatrix(r, n, tuple(new_rows)), perm


def cycle_space_basis(m: BitMatrix) -> list[BitVector]:
    """A basis of the null space {v : m v = 0}; returns n - rank(m) vectors."""
    n = m.ncols
    # Reduce columns, tracking which original columns combine into each reduced one.
    pivots: dict[int, tuple[int, int]] = {}  # top bit -> (reduced col, combo mask)
    basis = []
    for j in range(n):
        c = m.column(j + 1)
        combo = 1 << j
        while c:
            top = c.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = (c, combo)
                break
            c ^= p[0]
            combo ^= p[1]
        else:
            basis.append(BitVector(n, combo))
    return basis


def cycle_space_masks(m: BitMatrix) -> list[int]:
    """All 2^(n-r) null-space vectors as bit masks (Gray-code enumeration)."""
    basis = [v.bits for v in cycle_space_basis(m)]
    out = [0]
    for b in basis:
        out.extend(x ^ b for x in list(out))
    return out
