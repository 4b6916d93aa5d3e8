"""The labeled binary matroid value type and its structural queries.

A :class:`Matroid` is a standard-form representation [I_r | D] over GF(2)
together with an ordered tuple of distinct positive integer labels, one
per column.  All public operations speak in labels; bit positions are an
internal detail.  Instances are immutable after construction and cache
ranks, cycle spaces and circuits internally.
"""

from __future__ import annotations

from .gf2 import BitMatrix, RankDeficientError, rank_of_columns, standard_form


class Matroid:
    """A binary matroid given by a standard-form matrix and column labels."""

    def __init__(self, matrix: BitMatrix, labels: tuple[int, ...]):
        r, n = matrix.nrows, matrix.ncols
        if len(labels) != n:
            raise ValueError("one label per column required")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        for i in range(r):
            if matrix.column(i + 1) != 1 << i:
                raise ValueError("matrix is not in standard form [I_r | D]")
        self.matrix = matrix
        self.labels = tuple(labels)
        self.rank = r
        self.size = n
        self._pos = {lab: p for p, lab in enumerate(self.labels)}
        self._cols = tuple(matrix.columns())
        self._rank_cache: dict[int, int] = {0: 0}
        self._cycle_masks: list[int] | None = None
        self._cocycle_masks: list[int] | None = None
        self._circuits: list[frozenset[int]] | None = None
        self._cocircuits: list[frozenset[int]] | None = None
        self._canonical_key: bytes | None = None

    # -- label/mask bookkeeping -------------------------------------------

    def ground_set(self) -> frozenset[int]:
        return frozenset(self.labels)

    def mask_of(self, elements) -> int:
        mask = 0
        for e in elements:
            p = self._pos.get(e)
            if p is None:
                raise ValueError(f"unknown element label {e}")
            mask |= 1 << p
        return mask

    def labels_of(self, mask: int) -> frozenset[int]:
        return frozenset(self.labels[p] for p in range(self.size) if (mask >> p) & 1)

    def column_of(self, label: int) -> int:
        p = self._pos.get(label)
        if p is None:
            raise ValueError(f"unknown element label {label}")
        return self._cols[p]

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    # -- rank -------------------------------------------------------------

    def rank_of_mask(self, mask: int) -> int:
        cached = self._rank_cache.get(mask)
        if cached is None:
            cols = self._cols
            cached = rank_of_columns(cols[p] for p in range(self.size) if (mask >> p) & 1)
            self._rank_cache[mask] = cached
        return cached

    def rank_of(self, elements) -> int:
        return self.rank_of_mask(self.mask_of(elements))

    # -- cycle and cocycle space ------------------------------------------

    def cycle_masks(self) -> list[int]:
        """All vectors of the cycle space (null space) as position masks."""
        if self._cycle_masks is None:
            from .gf2 import cycle_space_masks

            self._cycle_masks = cycle_space_masks(self.matrix)
        return self._cycle_masks

    def cocycle_masks(self) -> list[int]:
        """All vectors of the cocycle space (row space) as position masks."""
        if self._cocycle_masks is None:
            out = [0]
            for row in self.matrix.rows:
                out.extend(x ^ row for x in list(out))
            self._cocycle_masks = out
        return self._cocycle_masks

    def cycle_key(self) -> frozenset[tuple[int, ...]]:
        """The cycle space as label sets; equal iff equal labeled matroids."""
        return frozenset(tuple(sorted(self.labels_of(m))) for m in self.cycle_masks())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground_set() == other.ground_set() and self.cycle_key() == other.cycle_key()

    def __hash__(self):
        return hash((self.ground_set(), self.cycle_key()))

    def __repr__(self):
        return f"Matroid(rank={self.rank}, size={self.size}, labels={self.labels})"


def make_matroid(matrix: BitMatrix, labels=None) -> Matroid:
    """Build a Matroid, re-standardizing the matrix if needed.

    The column permutation applied during standardization is also applied
    to the labels, so the labeled matroid is unchanged.  Default labels
    are 1..n in column order.  Raises RankDeficientError if the matrix
    does not have full row rank.
    """
    n = matrix.ncols
    if labels is None:
        labels = tuple(range(1, n + 1))
    else:
        labels = tuple(labels)
    if len(labels) != n:
        raise ValueError("one label per column required")
    if len(set(labels)) != n:
        raise ValueError("labels must be distinct")
    std, perm = standard_form(matrix)
    return Matroid(std, tuple(labels[j - 1] for j in perm))


def dual(m: Matroid) -> Matroid:
    """The dual matroid on the same labels, via [I_r | D] -> [I_{n-r} | D^T]."""
    r, n = m.rank, m.size
    d_rows = []
    for j in range(r, n):
        d_rows.append(m._cols[j])  # column of D becomes a row of D^T
    new_rows = tuple((1 << i) | (d_rows[i] << (n - r)) for i in range(n - r))
    new_labels = m.labels[r:] + m.labels[:r]
    return Matroid(BitMatrix(n - r, n, new_rows), new_labels)


def remove(m: Matroid, deletions=(), contractions=()) -> Matroid:
    """The minor m \\ deletions / contractions, labels retained.

    Contraction of a dependent set is allowed: a maximal independent part
    is contracted and the rest of the set is simply removed, per the
    standard identity M/X = (M/B_X) \\ (X - B_X).  Loops and parallel
    pairs created by contraction are preserved.
    """
    dels = frozenset(deletions)
    cons = frozenset(contractions)
    if dels & cons:
        raise ValueError("deletions and contractions overlap")
    for e in dels | cons:
        if e not in m._pos:
            raise ValueError(f"unknown element label {e}")
    survivors = [lab for lab in m.labels if lab not in dels and lab not in cons]
    if not survivors:
        raise ValueError("minor would be empty")

    rows = list(m.matrix.rows)
    r = m.rank
    used_rows: set[int] = set()
    # Pivot on an independent subset of the contraction set; dependent
    # members of `cons` contribute nothing and are just removed.
    for e in sorted(cons, key=m.labels.index):
        j = m._pos[e]
        bit = 1 << j
        src = next((i for i in range(r) if i not in used_rows and rows[i] & bit), None)
        if src is None:
            continue
        for i in range(r):
            if i != src and rows[i] & bit:
                rows[i] ^= rows[src]
        used_rows.add(src)

    keep_positions = [m._pos[lab] for lab in survivors]
    new_rows = []
    for i in range(r):
        if i in used_rows:
            continue
        row = rows[i]
        new_rows.append(sum(((row >> p) & 1) << q for q, p in enumerate(keep_positions)))
    # Drop dependent rows before standardizing (deletion may lower the rank).
    raw = BitMatrix(len(new_rows), len(survivors), tuple(new_rows))
    kept = _independent_rows(raw)
    return make_matroid(kept, survivors)


def _independent_rows(m: BitMatrix) -> BitMatrix:
    pivots: dict[int, int] = {}
    keep = []
    for row in m.rows:
        red = row
        while red:
            top = red.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = red
                keep.append(row)
                break
            red ^= p
    return BitMatrix(len(keep), m.ncols, tuple(keep))


def _minimal_supports(masks: list[int]) -> list[int]:
    supports = sorted((mk for mk in masks if mk), key=lambda x: x.bit_count())
    minimal: list[int] = []
    for s in supports:
        if not any(t & s == t for t in minimal):
            minimal.append(s)
    return minimal


def circuits(m: Matroid) -> list[frozenset[int]]:
    """All circuits, as minimal supports of the cycle space."""
    if m._circuits is None:
        m._circuits = [m.labels_of(mk) for mk in _minimal_supports(m.cycle_masks())]
    return list(m._circuits)


def cocircuits(m: Matroid) -> list[frozenset[int]]:
    """All cocircuits: minimal supports of the cocycle (row) space."""
    if m._cocircuits is None:
        m._cocircuits = [m.labels_of(mk) for mk in _minimal_supports(m.cocycle_masks())]
    return list(m._cocircuits)


def is_union_of_circuits_and_cocircuits(m: Matroid, a) -> tuple[bool, bool]:
    """Whether `a` is a union of circuits, and a union of cocircuits.

    The empty set qualifies on both counts.  A set is a union of circuits
    iff the cycle-space vectors supported inside it cover all of it.
    """
    mask = m.mask_of(a)
    covered = 0
    for mk in m.cycle_masks():
        if mk & ~mask == 0:
            covered |= mk
    circuit_flag = covered == mask
    covered = 0
    for mk in m.cocycle_masks():
        if mk & ~mask == 0:
            covered |= mk
    cocircuit_flag = covered == mask
    return circuit_flag, cocircuit_flag


def triangles_and_triads(m: Matroid) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """All 3-element circuits and all 3-element cocircuits."""
    tri = [c for c in circuits(m) if len(c) == 3]
    tria = [c for c in cocircuits(m) if len(c) == 3]
    return tri, tria


def simplicity(m: Matroid) -> tuple[bool, bool]:
    """(is_simple, is_cosimple): no loops/parallel pairs, dually likewise."""
    cols = m._cols
    is_simple = 0 not in cols and len(set(cols)) == m.size
    # Dual columns of [I_{n-r} | D^T] are the unit vectors plus the rows of D.
    r, n = m.rank, m.size
    d_rows = [sum((((m.matrix.rows[i] >> j) & 1)) << (j - r) for j in range(r, n)) for i in range(r)]
    dual_cols = [1 << i for i in range(n - r)] + d_rows
    is_cosimple = 0 not in dual_cols and len(set(dual_cols)) == n
    return is_simple, is_cosimple
