"""Unit and property tests for canonical forms and isomorphism testing."""

import random
from itertools import permutations

from binmat.catalog import get
from binmat.gf2 import BitMatrix
from binmat.iso import (
    are_isomorphic,
    canonical_key,
    partition_into_classes,
    weight_profile,
)
from binmat.matroid import dual, make_matroid

from conftest import fresh, relabeled_copy


def M(name):
    return get(name).matroid


def brute_isomorphic(a, b):
    """Permutation-search isomorphism oracle for small ground sets."""
    if (a.rank, a.size) != (b.rank, b.size):
        return False
    amasks = frozenset(a.cycle_masks())
    bmasks = frozenset(b.cycle_masks())
    for perm in permutations(range(a.size)):
        mapped = set()
        for mask in amasks:
            out = 0
            p = 0
            while mask:
                if mask & 1:
                    out |= 1 << perm[p]
                mask >>= 1
                p += 1
            mapped.add(out)
        if mapped == bmasks:
            return True
    return False


class TestCanonicalKey:
    def test_invariant_under_relabeling(self):
        rng = random.Random(11)
        for name in ("F7", "S8", "P9", "E4", "S10"):
            m = fresh(name)
            key = canonical_key(m)
            for _ in range(5):
                assert canonical_key(relabeled_copy(m, rng)) == key

    def test_invariant_under_change_of_basis(self):
        # Standardizing on a different basis is a row-equivalent
        # presentation of the same matroid.
        m = fresh("P9")
        cols = m.matrix.columns()
        alt = make_matroid(
            BitMatrix(m.rank, m.size, tuple(m.matrix.rows[::-1])), m.labels
        )
        assert canonical_key(alt) == canonical_key(m)
        assert len(cols) == m.size

    def test_distinguishes_nonisomorphic_pairs(self):
        assert canonical_key(M("S8")) != canonical_key(M("AG(3,2)"))
        assert canonical_key(M("F7")) != canonical_key(M("F7*"))
        assert canonical_key(M("S10")) != canonical_key(M("S10*"))

    def test_dual_pairs_share_keys_when_self_dual(self):
        for name in ("S8", "P9", "E4", "E5", "T12"):
            m = M(name)
            self_dual = are_isomorphic(m, dual(m))
            assert self_dual == (canonical_key(m) == canonical_key(dual(m)))


class TestAreIsomorphic:
    def test_agrees_with_permutation_oracle(self):
        # Same-size pairs, both positive and negative cases.
        pairs = [
            ("F7", "F7"),
            ("F7", "F7*"),
            ("S8", "AG(3,2)"),
            ("S8", "S8*"),
            ("Z4", "Z4*"),
        ]
        rng = random.Random(5)
        for a_name, b_name in pairs:
            a, b = M(a_name), M(b_name)
            expected = brute_isomorphic(a, b)
            assert are_isomorphic(a, b) is expected, (a_name, b_name)
            # Relabeling must not change the verdict.
            assert are_isomorphic(relabeled_copy(a, rng), b) is expected

    def test_relabeled_copy_is_isomorphic(self):
        rng = random.Random(23)
        for name in ("P9", "E5", "T12"):
            m = M(name)
            assert are_isomorphic(m, relabeled_copy(m, rng))

    def test_different_sizes_are_not_isomorphic(self):
        assert not are_isomorphic(M("F7"), M("S8"))


class TestWeightProfile:
    def test_profile_counts_sum_to_space_sizes(self):
        m = M("S8")
        cyc, coc = weight_profile(m)
        assert sum(cyc) == 1 << (m.size - m.rank)
        assert sum(coc) == 1 << m.rank
        assert cyc[0] == 1 and coc[0] == 1

    def test_profile_is_invariant_but_weaker_than_key(self):
        rng = random.Random(2)
        m = M("E4")
        assert weight_profile(m) == weight_profile(relabeled_copy(m, rng))
        # Dual pairs swap the two component tuples.
        cyc, coc = weight_profile(m)
        dcyc, dcoc = weight_profile(dual(m))
        assert (cyc, coc) == (dcoc, dcyc)


class TestPartition:
    def test_partition_groups_by_isomorphism(self):
        from binmat.extension import extend, extension_candidates

        m = M("F7*")
        pairs = [(v, extend(m, v)) for v in extension_candidates(m)]
        classes = partition_into_classes(pairs)
        assert sorted(len(c.members) for c in classes) == [1, 7]
        for cls in classes:
            for v in cls.members:
                assert are_isomorphic(extend(m, v), cls.representative)
        # Members across classes are never isomorphic.
        a, b = classes
        assert not are_isomorphic(a.representative, b.representative)
