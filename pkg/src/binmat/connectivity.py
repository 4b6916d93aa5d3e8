"""Connectivity function, k-separations, and their enumeration.

lambda(X) = r(X) + r(E - X) - r(M).  Separation enumeration is exhaustive
over subsets (ground sets here never exceed ~15 elements) with complement
deduplication and memoized subset ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matroid import Matroid, is_union_of_circuits_and_cocircuits


@dataclass(frozen=True)
class Separation:
    side_a: frozenset[int]
    side_b: frozenset[int]
    order: int
    lambda_value: int
    exact: bool
    minimal: bool


def lam(m: Matroid, x) -> int:
    """The connectivity function lambda(X) = r(X) + r(E-X) - r(M)."""
    mask = m.mask_of(x)
    return _lam_mask(m, mask)


def _lam_mask(m: Matroid, mask: int) -> int:
    return m.rank_of_mask(mask) + m.rank_of_mask(m.full_mask & ~mask) - m.rank


def classify_separation(m: Matroid, a, k: int) -> Separation:
    """Classify the partition (a, E - a) as a k-separation."""
    mask = m.mask_of(a)
    side_a = m.labels_of(mask)
    side_b = m.labels_of(m.full_mask & ~mask)
    if len(side_a) < k or len(side_b) < k:
        raise ValueError(f"both sides must have at least {k} elements")
    lv = _lam_mask(m, mask)
    exact = lv == k - 1
    minimal = exact and (len(side_a) == k or len(side_b) == k)
    return Separation(side_a, side_b, k, lv, exact, minimal)


def is_n_connected(m: Matroid, n: int) -> bool:
    """True iff m has no k-separation for any k <= n - 1."""
    if n < 2:
        raise ValueError("n-connectivity is defined for n >= 2")
    size = m.size
    for k in range(1, n):
        if 2 * k > size:
            continue
        # Fix position 0 on side A to take each partition once.
        for sub in range(1 << (size - 1)):
            mask = (sub << 1) | 1
            na = mask.bit_count()
            if na < k or size - na < k:
                continue
            if _lam_mask(m, mask) <= k - 1:
                return False
    return True


def is_internally_4_connected(m: Matroid) -> bool:
    """3-connected with lambda(A) >= 3 whenever both sides have >= 4 elements."""
    if not is_n_connected(m, 3):
        return False
    size = m.size
    for sub in range(1 << (size - 1)):
        mask = (sub << 1) | 1
        na = mask.bit_count()
        if na < 4 or size - na < 4:
            continue
        if _lam_mask(m, mask) < 3:
            return False
    return True


def bridging_value(m: Matroid, a, b) -> int:
    """k_M(A, B) = min lambda(X) over all X with A subset X subset E - B."""
    amask = m.mask_of(a)
    bmask = m.mask_of(b)
    if amask & bmask:
        raise ValueError("sides overlap")
    free = m.full_mask & ~amask & ~bmask
    free_bits = [1 << p for p in range(m.size) if (free >> p) & 1]
    best = None
    for sub in range(1 << len(free_bits)):
        mask = amask
        for i, bit in enumerate(free_bits):
            if (sub >> i) & 1:
                mask |= bit
        lv = _lam_mask(m, mask)
        if best is None or lv < best:
            best = lv
    return best


def nonminimal_exact_3seps(m: Matroid, require_unions: bool = False) -> list[Separation]:
    """All non-minimal exact 3-separations, one per complementary pair.

    The reported side of each partition is the lexicographically smaller
    one (by sorted label tuple); the result is sorted by that side.  With
    ``require_unions`` only sides that are both a union of circuits and a
    union of cocircuits survive (applied to the reported side).
    """
    size = m.size
    seen = set()
    out = []
    for sub in range(1 << (size - 1)):
        mask = (sub << 1) | 1
        na = mask.bit_count()
        if na < 4 or size - na < 4:
            continue
        if _lam_mask(m, mask) != 2:
            continue
        comp = m.full_mask & ~mask
        a = tuple(sorted(m.labels_of(mask)))
        b = tuple(sorted(m.labels_of(comp)))
        rep = min(a, b)
        if rep in seen:
            continue
        seen.add(rep)
        if require_unions:
            # Keep the partition if some side qualifies; report that side.
            for side in (rep, max(a, b)):
                uc, ucc = is_union_of_circuits_and_cocircuits(m, side)
                if uc and ucc:
                    rep = side
                    break
            else:
                continue
        out.append(classify_separation(m, rep, 3))
    out.sort(key=lambda s: tuple(sorted(s.side_a)))
    return out
