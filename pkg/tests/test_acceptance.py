"""Acceptance suite: the end-to-end checks the package must nail exactly.

Each numbered test rebuilds its inputs from scratch (no shared caches) and
enforces the stated runtime budget with a wall-clock measurement around
the expensive computation only.
"""

import random
import time
from itertools import combinations

from binmat.catalog import get, list_names
from binmat.connectivity import is_internally_4_connected, is_n_connected, lam
from binmat.extension import (
    coextend,
    coextension_candidates,
    enumerate_growth_classes,
    extend,
    extension_candidates,
    shift_labels,
)
from binmat.gf2 import BitVector
from binmat.iso import are_isomorphic, canonical_key
from binmat.matroid import dual, remove
from binmat.structure import has_minor, is_splitter
from binmat.tables import SIDE_1, SIDE_2, TABLE_1A, TABLE_1B
from binmat.verify import claim_ids, run_verification

from conftest import fresh, oracle_lam, relabeled_copy

from test_verify import EXPECTED_DISCREPANCIES


def timed(budget_seconds, fn):
    start = time.perf_counter()
    result = fn()
    elapsed = time.perf_counter() - start
    assert elapsed < budget_seconds, f"took {elapsed:.1f}s, budget {budget_seconds}s"
    return result


def test_01_f7star_extension_classes(verification):
    def compute():
        return enumerate_growth_classes(fresh("F7*"), "extension")

    classes = timed(1.0, compute)
    assert len(classes) == 2
    by_size = {len(c.members): c for c in classes}
    assert set(by_size) == {1, 7}
    assert [str(v) for v in by_size[1].members] == ["[1110]"]
    assert are_isomorphic(by_size[1].representative, fresh("AG(3,2)"))
    assert are_isomorphic(by_size[7].representative, fresh("S8"))
    # The printed claim undercounts the S8 generators; the report must
    # call that out as a discrepancy carrying the true list.
    report, _ = verification
    claim = next(c for c in report["claims"] if c["id"] == "f7star.s8-generators")
    assert claim["status"] == "discrepancy"
    assert len(claim["computed"]["generators"]) == 7


def test_02_s8_in_class_growth_is_z4():
    def compute():
        excluded = [fresh("P9"), fresh("P9*")]
        s8 = fresh("S8")
        ext = enumerate_growth_classes(s8, "extension", excluded=excluded)
        coext = enumerate_growth_classes(s8, "coextension", excluded=excluded)
        return s8, ext, coext

    s8, ext, coext = timed(1.0, compute)
    assert len(ext) == 1 and [str(v) for v in ext[0].members] == ["[1110]"]
    assert len(coext) == 1 and [str(v) for v in coext[0].members] == ["[1110]"]
    assert are_isomorphic(ext[0].representative, fresh("Z4"))
    assert are_isomorphic(coext[0].representative, fresh("Z4*"))
    assert lam(extend(s8, BitVector.parse("1110")), {1, 2, 5, 6}) == 2
    assert lam(coextend(s8, BitVector.parse("1110")), {1, 2, 6, 7}) == 2


def test_03_p9_growth_classes():
    def compute():
        p9 = fresh("P9")
        return (
            p9,
            enumerate_growth_classes(p9, "extension"),
            enumerate_growth_classes(p9, "coextension"),
        )

    p9, ext, coext = timed(5.0, compute)
    assert len(ext) == 3
    assert sorted(len(c.members) for c in ext) == [1, 1, 4]
    assert sum(len(c.members) for c in ext) == len(extension_candidates(p9))
    assert len(coext) == 8
    assert sorted(len(c.members) for c in coext) == [1, 1, 2, 2, 2, 2, 4, 8]
    assert sum(len(c.members) for c in coext) == 22
    # Rows generating E1, E2, E3, E6, E6*, E7 all leave lambda({1,2,6,7}) = 2.
    named = [fresh(n) for n in ("E1", "E2", "E3", "E6", "E6*", "E7")]
    matched = 0
    for cls in coext:
        if any(are_isomorphic(cls.representative, t) for t in named):
            matched += 1
            for v in cls.members:
                assert lam(coextend(p9, v), {1, 2, 6, 7}) == 2
    assert matched == 6


def test_04_e5_extensions_and_splitter():
    def compute():
        e5 = fresh("E5")
        classes = enumerate_growth_classes(e5, "extension")
        s10 = fresh("S10")
        minors = [has_minor(c.representative, s10)[0] for c in classes]
        splitter, counterexamples = is_splitter(e5, [s10, fresh("S10*")])
        return e5, classes, minors, splitter, counterexamples

    e5, classes, minors, splitter, counterexamples = timed(30.0, compute)
    assert len(classes) == 7
    assert sorted(len(c.members) for c in classes) == [1, 2, 2, 4, 4, 4, 4]
    assert sum(len(c.members) for c in classes) == 21
    assert all(minors)
    assert splitter and counterexamples == []
    assert is_internally_4_connected(e5)
    assert are_isomorphic(e5, dual(e5))


def test_05_e4_in_class_growth():
    def compute():
        e4 = fresh("E4")
        excluded = [fresh("S10"), fresh("S10*")]
        ext = enumerate_growth_classes(e4, "extension", excluded=excluded)
        coext = enumerate_growth_classes(e4, "coextension", excluded=excluded)
        return ext, coext

    ext, coext = timed(30.0, compute)
    ext_members = sorted(sorted(str(v) for v in c.members) for c in ext)
    assert ext_members == [
        ["[00110]", "[10110]"],
        ["[01111]", "[11100]"],
        ["[11000]"],
        ["[11011]"],
    ]
    t12e = next(c for c in ext if [str(v) for v in c.members] == ["[11011]"])
    assert are_isomorphic(t12e.representative, fresh("T12/e"))
    coext_members = sorted(sorted(str(v) for v in c.members) for c in coext)
    assert coext_members == [
        ["[00110]", "[10001]"],
        ["[01010]"],
        ["[11000]"],
        ["[11001]", "[11100]"],
    ]
    t12de = next(c for c in coext if [str(v) for v in c.members] == ["[01010]"])
    assert are_isomorphic(t12de.representative, fresh("T12\\e"))
    # All 15 remaining candidates in each direction contain S10 or S10*.
    assert sum(len(c.members) for c in ext) == 6
    assert sum(len(c.members) for c in coext) == 6


def test_06_table1_lambda_values():
    e4 = fresh("E4")
    sides = (SIDE_1, SIDE_2)
    for cell in TABLE_1A:
        child = extend(e4, BitVector.parse(cell.vector))
        new = child.labels[-1]
        base = sides[cell.side]
        assert cell.printed_set in (base, base | {new})
        assert lam(child, cell.printed_set) == 2
        assert cell.printed_value in (2, None)
    # Coextension sides come out of the shift rule, never hard-coded.
    assert shift_labels(SIDE_1, 5) == frozenset({1, 2, 5, 7, 8, 11})
    assert shift_labels(SIDE_2, 5) == frozenset({1, 2, 3, 4, 9, 10})
    for cell in TABLE_1B:
        child = coextend(e4, BitVector.parse(cell.vector))
        new = e4.rank + 1
        base = shift_labels(sides[cell.side], e4.rank)
        assert cell.printed_set in (base, base | {new})
        assert lam(child, cell.printed_set) == 2
        # Row b's first printed value is omitted; recomputation gives 2.
        assert cell.printed_value in (2, None)


def test_07_table2_cell_classification():
    wanted = [i for i in claim_ids() if i.startswith("table2")]
    wanted += ["claim4.c-bad-rows-disjoint", "claim4.coupling"]

    report = timed(60.0, lambda: run_verification(only=wanted))
    assert len(report["claims"]) == len(wanted)
    for claim in report["claims"]:
        if claim["id"] in EXPECTED_DISCREPANCIES:
            assert claim["status"] == "discrepancy", claim["id"]
            assert "expected" in claim and "computed" in claim
        else:
            assert claim["status"] == "pass", claim["id"]


def test_08_connectivity_flags():
    for name, flag in [
        ("S10", True),
        ("E5", True),
        ("T12", True),
        ("S8", False),
        ("P9", False),
        ("E4", False),
    ]:
        assert is_internally_4_connected(fresh(name)) is flag, name
    assert is_n_connected(fresh("T12"), 4)


def test_09_splitter_escalation():
    def compute():
        flag, counterexamples = is_splitter(
            fresh("T12"), [fresh("S10"), fresh("S10*")]
        )
        classes = enumerate_growth_classes(fresh("M*(K3,3)"), "extension")
        return flag, counterexamples, classes

    flag, counterexamples, classes = timed(30.0, compute)
    assert flag and counterexamples == []
    assert len(classes) == 1
    assert are_isomorphic(classes[0].representative, fresh("S10"))


class Test10PropertySuites:
    def test_lambda_symmetry_and_submodularity_all_catalog(self):
        rng = random.Random(99)
        for name in list_names():
            m = fresh(name)
            labels = sorted(m.ground_set())
            for _ in range(10):
                x = frozenset(rng.sample(labels, rng.randint(1, m.size - 1)))
                y = frozenset(rng.sample(labels, rng.randint(1, m.size - 1)))
                assert lam(m, x) == oracle_lam(m, x)
                assert lam(m, x) == lam(m, m.ground_set() - x)
                assert lam(m, x) + lam(m, y) >= lam(m, x | y) + lam(m, x & y)

    def test_dual_involution_all_catalog(self):
        for name in list_names():
            m = fresh(name)
            assert dual(dual(m)) == m, name

    def test_extend_remove_round_trip_all_catalog(self):
        from binmat.matroid import simplicity

        for name in list_names():
            m = fresh(name)
            if not simplicity(m)[0] or m.rank == 0:
                continue
            for v in extension_candidates(m)[:2]:
                child = extend(m, v)
                assert remove(child, deletions={child.labels[-1]}) == m, name

    def test_coextend_contract_round_trip_all_catalog(self):
        from binmat.matroid import simplicity

        for name in list_names():
            m = fresh(name)
            if not simplicity(m)[1] or m.rank == m.size:
                continue
            for v in coextension_candidates(m)[:2]:
                child = coextend(m, v)
                back = remove(child, contractions={m.rank + 1})
                assert are_isomorphic(back, m), name
                assert back.ground_set() == shift_labels(m.ground_set(), m.rank)

    def test_canonical_key_invariance_100_relabelings_per_catalog_matroid(self):
        rng = random.Random(4242)
        for name in list_names():
            m = fresh(name)
            key = canonical_key(m)
            for _ in range(100):
                assert canonical_key(relabeled_copy(m, rng)) == key, name


def test_verify_paper_total_runtime_budget(verification):
    _, elapsed = verification
    assert elapsed < 120.0, f"full verification took {elapsed:.1f}s"
