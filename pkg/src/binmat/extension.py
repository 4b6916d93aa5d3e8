"""Single-element growth: simple extensions and cosimple coextensions.

Extension columns follow the bracket convention [b1 b2 ... br] with b1
the top row of the displayed matrix; candidates are enumerated in
ascending order of that numeric reading.  Coextensions relabel: the new
element takes label r+1 and every parent label greater than r moves up
by one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .gf2 import BitMatrix, BitVector
from .iso import IsoClass, partition_into_classes
from .matroid import Matroid, cocircuits, simplicity


class RowKind(enum.Enum):
    APPENDED_PARENT_ROW = "appended_parent_row"
    IDENTITY_ROW = "identity_row"
    IN_SERIES_ROW = "in_series_row"


@dataclass(frozen=True)
class GrowthStep:
    kind: str  # "extension" or "coextension"
    vector: BitVector
    parent: Matroid
    child: Matroid
    new_label: int


def d_columns(m: Matroid) -> list[BitVector]:
    """The columns of the D block as vectors of length r."""
    return [BitVector(m.rank, m.column_of(lab)) for lab in m.labels[m.rank :]]


def d_rows(m: Matroid) -> list[BitVector]:
    """The rows of the D block as vectors of length n - r."""
    r, n = m.rank, m.size
    out = []
    for i in range(r):
        row = m.matrix.rows[i] >> r
        out.append(BitVector(n - r, row))
    return out


def extension_candidates(m: Matroid) -> list[BitVector]:
    """All columns usable for a simple single-element extension.

    These are the nonzero length-r vectors distinct from every existing
    column; since [I_r | D] contains all unit vectors this is exactly the
    vectors of weight >= 2 not already in D.  Ascending bracket order.
    """
    if not simplicity(m)[0]:
        raise ValueError("extension candidates require a simple matroid")
    existing = {c.bits for c in d_columns(m)}
    out = [
        BitVector(m.rank, bits)
        for bits in range(1, 1 << m.rank)
        if bits.bit_count() >= 2 and bits not in existing
    ]
    out.sort(key=lambda v: v.value)
    return out


def extend(m: Matroid, col: BitVector) -> Matroid:
    """Append `col` as a new element labeled n + 1."""
    if col.length != m.rank:
        raise ValueError("column length must equal the rank")
    if col.bits == 0 or col.bits in {c for c in m.matrix.columns()}:
        raise ValueError("column must be nonzero and distinct from existing columns")
    n = m.size
    new_label = n + 1
    if new_label in m.labels:
        new_label = max(m.labels) + 1
    rows = tuple(m.matrix.rows[i] | (((col.bits >> i) & 1) << n) for i in range(m.rank))
    return Matroid(BitMatrix(m.rank, n + 1, rows), m.labels + (new_label,))


def coextension_candidates(m: Matroid) -> list[BitVector]:
    """All rows usable for a cosimple single-element coextension.

    Length n - r, weight >= 2, distinct from the existing rows of D.
    Ascending bracket order.
    """
    if not simplicity(m)[1]:
        raise ValueError("coextension candidates require a cosimple matroid")
    existing = {v.bits for v in d_rows(m)}
    width = m.size - m.rank
    out = [
        BitVector(width, bits)
        for bits in range(1, 1 << width)
        if bits.bit_count() >= 2 and bits not in existing
    ]
    out.sort(key=lambda v: v.value)
    return out


def shift_label(label: int, r: int) -> int:
    """The coextension relabeling rule: labels beyond r move up by one."""
    return label + 1 if label > r else label


def shift_labels(labels, r: int) -> frozenset[int]:
    return frozenset(shift_label(x, r) for x in labels)


def coextend(m: Matroid, row: BitVector) -> Matroid:
    """Add a coextension row; the new element is labeled r + 1.

    Parent labels greater than r are shifted up by one.  The new element
    forms a cocircuit with the elements whose D columns carry a 1 in the
    new row; this is verified on the constructed child.
    """
    r, n = m.rank, m.size
    if row.length != n - r:
        raise ValueError("row length must equal n - r")
    if row.bits == 0 or row.bits in {v.bits for v in d_rows(m)}:
        raise ValueError("row must be nonzero and distinct from existing rows of D")
    new_labels = (
        tuple(shift_label(lab, r) for lab in m.labels[:r])
        + (r + 1,)
        + tuple(shift_label(lab, r) for lab in m.labels[r:])
    )
    if len(set(new_labels)) != n + 1:
        raise ValueError("coextension relabeling collides; labels must be 1..n")
    rows = []
    for i in range(r):
        d_part = m.matrix.rows[i] >> r
        rows.append((1 << i) | (d_part << (r + 1)))
    rows.append((1 << r) | (row.bits << (r + 1)))
    child = Matroid(BitMatrix(r + 1, n + 1, tuple(rows)), new_labels)
    _check_coextension_cocircuit(m, child, row)
    return child


def _check_coextension_cocircuit(parent: Matroid, child: Matroid, row: BitVector):
    r = parent.rank
    members = {r + 1}
    for j, lab in enumerate(parent.labels[r:]):
        if row.coord(j + 1):
            members.add(shift_label(lab, r))
    members = frozenset(members)
    # Cocircuit test via ranks: r(E - S) = rank - 1 and minimality.
    rest = child.ground_set() - members
    if child.rank_of(rest) != child.rank - 1:
        raise AssertionError("coextension row did not create the expected cocircuit")
    for e in members:
        if child.rank_of(rest | {e}) != child.rank:
            raise AssertionError("coextension cocircuit is not minimal")


def growth_step(m: Matroid, kind: str, vector: BitVector) -> GrowthStep:
    if kind == "extension":
        child = extend(m, vector)
        return GrowthStep(kind, vector, m, child, child.labels[-1])
    if kind == "coextension":
        child = coextend(m, vector)
        return GrowthStep(kind, vector, m, child, m.rank + 1)
    raise ValueError(f"unknown growth kind {kind!r}")


def enumerate_growth_classes(m: Matroid, kind: str, excluded=None) -> list[IsoClass]:
    """All growth candidates grouped into isomorphism classes.

    With ``excluded`` (a list of matroids), children containing one of
    them as a minor are discarded before grouping; the minor test runs
    once per distinct child up to isomorphism.
    """
    if kind == "extension":
        cands = extension_candidates(m)
    elif kind == "coextension":
        cands = coextension_candidates(m)
    else:
        raise ValueError(f"unknown growth kind {kind!r}")
    pairs = [(v, growth_step(m, kind, v).child) for v in cands]
    if excluded:
        from .structure import has_minor
        from .iso import canonical_key

        verdicts: dict[bytes, bool] = {}
        kept = []
        for v, child in pairs:
            key = canonical_key(child)
            if key not in verdicts:
                verdicts[key] = any(has_minor(child, x)[0] for x in excluded)
            if not verdicts[key]:
                kept.append((v, child))
        pairs = kept
    return partition_into_classes(pairs)


def classify_second_step_row(
    type_i: Matroid, parent: Matroid, e_label: int, row: BitVector
) -> RowKind | None:
    """Tag a coextension row of a one-step extension by its three-kind shape.

    The coordinate of ``row`` corresponding to the extension element
    ``e_label`` is split off; the remainder is matched against the
    parent's coextension candidates, unit vectors, and D rows.  Returns
    None for rows outside all three kinds (the taxonomy is asserted, not
    proved, to be exhaustive, so the caller can detect gaps).
    """
    if e_label not in type_i.labels:
        raise ValueError(f"{e_label} is not an element of the extension")
    width = type_i.size - type_i.rank
    if row.length != width:
        raise ValueError("row length must match the extension's corank")
    # Position of e among the D columns of the one-step extension.
    d_labels = list(type_i.labels[type_i.rank :])
    e_idx = d_labels.index(e_label)  # 0-based among D columns
    rest_bits = 0
    k = 0
    for j in range(width):
        if j == e_idx:
            continue
        rest_bits |= ((row.bits >> j) & 1) << k
        k += 1
    rest = BitVector(width - 1, rest_bits)
    parent_rows = {v.bits for v in d_rows(parent)}
    if rest.weight >= 2 and rest.bits not in parent_rows:
        return RowKind.APPENDED_PARENT_ROW
    if rest.weight == 1 and row.coord(e_idx + 1) == 1:
        return RowKind.IDENTITY_ROW
    if rest.bits in parent_rows:
        return RowKind.IN_SERIES_ROW
    return None
