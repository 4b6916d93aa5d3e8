"""Verification driver for the published decomposition case analysis.

Every finite check in the source argument is recomputed from scratch
and compared against the printed value: the F7* extension classes, the
S8 and P9 decomposer claims, the P9 growth classification, the E5
splitter claim, E4's in-class growths and its two candidate
3-separations, every cell of Tables 1a/1b/2a/2b, the bad-row
disjointness and coupling conditions, the T12 splitter escalation, and
the connectivity and self-duality flags.

Each check is a claim with a fixed id.  A claim whose recomputation
matches the printed value passes.  When the recomputation is internally
consistent but contradicts a printed value (the source contains a few
typo-level slips), the claim is reported as a discrepancy rather than a
failure; failures are reserved for breakage of the mathematics itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from . import __version__
from .catalog import get
from .connectivity import (
    is_internally_4_connected,
    is_n_connected,
    lam,
    nonminimal_exact_3seps,
)
from .extension import (
    coextend,
    coextension_candidates,
    enumerate_growth_classes,
    extend,
    extension_candidates,
    shift_labels,
)
from .gf2 import BitMatrix, BitVector
from .iso import are_isomorphic
from .matroid import circuits, cocircuits, dual, is_union_of_circuits_and_cocircuits, make_matroid
from .structure import Verdict, corollary22_check, in_class, is_splitter, theorem21_check
from .tables import SIDE_1, SIDE_2, TABLE_1A, TABLE_1B, TABLE_2A, TABLE_2B


def _vec(bits: str) -> BitVector:
    return BitVector.parse(f"[{bits}]")


def _vs(bits: str) -> str:
    return f"[{bits}]"


def _els(s) -> list[int]:
    return sorted(s)


def _matrix_from_d_columns(r: int, cols: list[str]) -> BitMatrix:
    """Build [I_r | D] from D's columns given as top-to-bottom bit strings."""
    rows = []
    for i in range(r):
        bits = 1 << i
        for j, col in enumerate(cols):
            if col[i] == "1":
                bits |= 1 << (r + j)
        rows.append(bits)
    return BitMatrix(r, r + len(cols), tuple(rows))


# The working representation behind the E5 extension table: a pivoted
# copy of the displayed E5 matrix (the printed candidate lists treat its
# D columns, not the displayed ones, as already present).
_E5_WORKING_D_COLUMNS = ["01110", "10111", "11010", "11001", "11111"]


class _Context:
    """Shared heavyweight computations, evaluated lazily and once."""

    def m(self, name: str):
        return get(name).matroid

    @cached_property
    def excluded_s10(self):
        return [self.m("S10"), self.m("S10*")]

    @cached_property
    def excluded_p9(self):
        return [self.m("P9"), self.m("P9*")]

    @cached_property
    def f7star_classes(self):
        return enumerate_growth_classes(self.m("F7*"), "extension")

    @cached_property
    def s8_ext_classes(self):
        return enumerate_growth_classes(self.m("S8"), "extension")

    @cached_property
    def s8_report(self):
        return theorem21_check(self.m("S8"), SIDE_S8, 3, self.excluded_p9)

    @cached_property
    def p9_ext_classes(self):
        return enumerate_growth_classes(self.m("P9"), "extension")

    @cached_property
    def p9_coext_classes(self):
        return enumerate_growth_classes(self.m("P9"), "coextension")

    @cached_property
    def p9_report(self):
        return theorem21_check(
            self.m("P9"), SIDE_S8, 3, self.excluded_s10 + [self.m("E4"), self.m("E5")]
        )

    @cached_property
    def e5_working(self):
        return make_matroid(_matrix_from_d_columns(5, _E5_WORKING_D_COLUMNS))

    @cached_property
    def e5_working_classes(self):
        return enumerate_growth_classes(self.e5_working, "extension")

    @cached_property
    def e5_splitter(self):
        return is_splitter(self.m("E5"), self.excluded_s10)

    @cached_property
    def t12_splitter(self):
        return is_splitter(self.m("T12"), self.excluded_s10)

    @cached_property
    def e4_ext_classes(self):
        return enumerate_growth_classes(self.m("E4"), "extension", excluded=self.excluded_s10)

    @cached_property
    def e4_coext_classes(self):
        return enumerate_growth_classes(self.m("E4"), "coextension", excluded=self.excluded_s10)

    @cached_property
    def e4_report(self):
        return corollary22_check(
            self.m("E4"),
            SIDE_1,
            SIDE_2,
            3,
            self.excluded_s10,
            defer=[self.m("T12/e"), self.m("T12\\e")],
        )

    @cached_property
    def mk33star_classes(self):
        return enumerate_growth_classes(self.m("M*(K3,3)"), "extension")


SIDE_S8 = frozenset({1, 2, 5, 6})


def _class_members(classes) -> list[list[str]]:
    return sorted(sorted(str(v) for v in c.members) for c in classes)


def _class_with(classes, bits: str):
    target = _vec(bits).value
    for c in classes:
        if any(v.value == target for v in c.members):
            return c
    return None


def _named_classes(ctx, classes, names: list[str], first_gens: list[str]) -> dict:
    """Map printed class names to computed member lists by a witness generator."""
    out = {}
    for name, bits in zip(names, first_gens):
        c = _class_with(classes, bits)
        members = sorted(str(v) for v in c.members) if c else None
        iso = bool(c) and are_isomorphic(c.representative, ctx.m(name))
        out[name] = {"generators": members, "isomorphic": iso}
    return out


# ---------------------------------------------------------------------------
# Claim implementations


def _c_f7star_class_count(ctx):
    return 2, len(ctx.f7star_classes)


def _c_f7star_ag32(ctx):
    expected = {"generators": ["[1110]"], "isomorphic": True}
    c = _class_with(ctx.f7star_classes, "1110")
    computed = {
        "generators": sorted(str(v) for v in c.members) if c else None,
        "isomorphic": bool(c) and are_isomorphic(c.representative, ctx.m("AG(3,2)")),
    }
    return expected, computed


def _c_f7star_s8(ctx):
    printed = ["[0011]", "[0101]", "[0110]", "[1001]", "[1100]", "[1111]"]
    expected = {"generators": printed, "isomorphic": True}
    c = _class_with(ctx.f7star_classes, "0011")
    computed = {
        "generators": sorted(str(v) for v in c.members) if c else None,
        "isomorphic": bool(c) and are_isomorphic(c.representative, ctx.m("S8")),
    }
    return expected, computed


def _c_claim1_sep_lambda(ctx):
    return 2, lam(ctx.m("S8"), SIDE_S8)


def _c_claim1_ext_classes(ctx):
    classes = ctx.s8_ext_classes
    cands = {str(v) for v in extension_candidates(ctx.m("S8"))}
    named = _named_classes(ctx, classes, ["Z4", "P9"], ["1110", "0011"])
    p9_gens = named["P9"]["generators"] or []
    rest = sorted(cands - {"[1110]"})
    named["P9"]["generators"] = "all-other-candidates" if p9_gens == rest else p9_gens
    expected = {
        "class-count": 2,
        "Z4": {"generators": ["[1110]"], "isomorphic": True},
        "P9": {"generators": "all-other-candidates", "isomorphic": True},
    }
    return expected, {"class-count": len(classes), **named}


def _c_claim1_z4_lambda(ctx):
    child = extend(ctx.m("S8"), _vec("1110"))
    return {"set": _els(SIDE_S8), "lambda": 2}, {"set": _els(SIDE_S8), "lambda": lam(child, SIDE_S8)}


def _c_claim1_coext(ctx):
    classes = enumerate_growth_classes(ctx.m("S8"), "coextension", excluded=ctx.excluded_p9)
    computed = {
        "in-class-classes": _class_members(classes),
        "isomorphic-to-Z4*": len(classes) == 1
        and are_isomorphic(classes[0].representative, dual(ctx.m("Z4"))),
    }
    return {"in-class-classes": [["[1110]"]], "isomorphic-to-Z4*": True}, computed


def _c_claim1_coext_lambda(ctx):
    child = coextend(ctx.m("S8"), _vec("1110"))
    shifted = shift_labels(SIDE_S8, ctx.m("S8").rank)
    return (
        {"set": [1, 2, 6, 7], "lambda": 2},
        {"set": _els(shifted), "lambda": lam(child, shifted)},
    )


def _c_claim1_decomposer(ctx):
    return "induced", ctx.s8_report.overall


def _c_claim2_3seps(ctx):
    printed = [[1, 2, 5, 6], [3, 4, 7, 8], [3, 4, 7, 9]]
    seps = nonminimal_exact_3seps(ctx.m("P9"), require_unions=False)
    ground = ctx.m("P9").ground_set()
    computed = []
    for s in seps:
        side = frozenset(s.side_a)
        comp = ground - side
        chosen = side if _els(side) in printed else comp
        computed.append(_els(chosen))
    return printed, sorted(computed)


def _c_claim2_sep_unions(ctx):
    p9 = ctx.m("P9")
    ground = p9.ground_set()
    a = frozenset({1, 2, 5, 6})
    a1 = frozenset({3, 4, 7, 8})
    a2 = frozenset({3, 4, 7, 9})
    computed = {
        "A-is-circuit": a in circuits(p9),
        "A-is-cocircuit": a in cocircuits(p9),
        # (circuits_ok, cocircuits_ok) covered-support tests.
        "B-union-of-cocircuits": is_union_of_circuits_and_cocircuits(p9, ground - a)[1],
        "B1-union-of-cocircuits": is_union_of_circuits_and_cocircuits(p9, ground - a1)[1],
        "B2-union-of-cocircuits": is_union_of_circuits_and_cocircuits(p9, ground - a2)[1],
        "A1-union-of-circuits": is_union_of_circuits_and_cocircuits(p9, a1)[0],
        "A2-union-of-circuits": is_union_of_circuits_and_cocircuits(p9, a2)[0],
    }
    expected = {
        "A-is-circuit": True,
        "A-is-cocircuit": True,
        "B-union-of-cocircuits": False,
        "B1-union-of-cocircuits": False,
        "B2-union-of-cocircuits": False,
        "A1-union-of-circuits": False,
        "A2-union-of-circuits": False,
    }
    return expected, computed


def _c_claim2_ext_classes(ctx):
    expected = {
        "D1": {"generators": ["[1110]"], "isomorphic": True},
        "S10": {"generators": ["[0101]", "[0110]", "[1001]", "[1010]"], "isomorphic": True},
        "D3": {"generators": ["[0011]"], "isomorphic": True},
        "class-count": 3,
    }
    computed = _named_classes(ctx, ctx.p9_ext_classes, ["D1", "S10", "D3"], ["1110", "0101", "0011"])
    computed["class-count"] = len(ctx.p9_ext_classes)
    return expected, computed


def _c_claim2_ext_lambda(ctx):
    computed = {}
    for bits in ("1110", "0011"):
        child = extend(ctx.m("P9"), _vec(bits))
        computed[_vs(bits)] = lam(child, SIDE_S8)
    return {"[1110]": 2, "[0011]": 2}, computed


def _c_claim2_coext_count(ctx):
    return 8, len(ctx.p9_coext_classes)


_CLAIM2_COEXT_BULLETS = {
    "E1": ["11000", "11111"],
    "E2": ["11011", "11100"],
    "E3": ["11001", "11101"],
    "E4": ["01001", "01010", "01101", "01110", "10001", "10010", "10101", "10110"],
    "E5": ["01011", "01100", "10011", "10100"],
    "E6": ["00101", "00110"],
    "E6*": ["00111"],
    "E7": ["00011"],
}


def _c_claim2_coext_classes(ctx):
    expected = {
        name: {"generators": [_vs(b) for b in sorted(bullets)], "isomorphic": True}
        for name, bullets in _CLAIM2_COEXT_BULLETS.items()
    }
    computed = _named_classes(
        ctx,
        ctx.p9_coext_classes,
        list(_CLAIM2_COEXT_BULLETS),
        [bullets[0] for bullets in _CLAIM2_COEXT_BULLETS.values()],
    )
    return expected, computed


def _c_claim2_coext_lambda(ctx):
    rows = [
        b
        for name in ("E1", "E2", "E3", "E6", "E6*", "E7")
        for b in _CLAIM2_COEXT_BULLETS[name]
    ]
    shifted = shift_labels(SIDE_S8, ctx.m("P9").rank)
    computed = {"set": _els(shifted), "lambda": {}}
    for bits in sorted(rows):
        child = coextend(ctx.m("P9"), _vec(bits))
        computed["lambda"][_vs(bits)] = lam(child, shifted)
    expected = {"set": [1, 2, 6, 7], "lambda": {_vs(b): 2 for b in sorted(rows)}}
    return expected, computed


def _c_claim2_decomposer(ctx):
    return "induced", ctx.p9_report.overall


def _c_self_dual(name):
    def check(ctx):
        return True, are_isomorphic(ctx.m(name), dual(ctx.m(name)))

    return check


def _c_f7_dual(ctx):
    return True, are_isomorphic(dual(ctx.m("F7")), ctx.m("F7*"))


def _c_i4c(name, flag):
    def check(ctx):
        return flag, is_internally_4_connected(ctx.m(name))

    return check


def _c_t12_4connected(ctx):
    return True, is_n_connected(ctx.m("T12"), 4)


def _c_claim3_representation(ctx):
    return True, are_isomorphic(ctx.e5_working, ctx.m("E5"))


def _c_claim3_class_count(ctx):
    return 7, len(ctx.e5_working_classes)


_CLAIM3_BULLETS = {
    "ext1": ["00011", "00101", "10010", "10100"],
    "ext2": ["00110", "10001"],
    "ext3": ["00111", "10011", "10101", "10110"],
    "ext4": ["01001", "01100", "01111", "11101"],
    "ext5": ["01010", "11000", "11011", "11110"],
    "ext6": ["01011", "11100"],
    "ext7": ["01101"],
}


def _c_claim3_classes(ctx):
    expected = {name: [_vs(b) for b in sorted(bullets)] for name, bullets in _CLAIM3_BULLETS.items()}
    computed = {}
    for name, bullets in _CLAIM3_BULLETS.items():
        c = _class_with(ctx.e5_working_classes, bullets[0])
        computed[name] = sorted(str(v) for v in c.members) if c else None
    return expected, computed


def _c_claim3_s10_minor(ctx):
    computed = all(
        not in_class(c.representative, ctx.excluded_s10) for c in ctx.e5_working_classes
    )
    return True, computed


def _c_claim3_splitter(ctx):
    flag, counterexamples = ctx.e5_splitter
    return (
        {"splitter": True, "counterexamples": 0},
        {"splitter": flag, "counterexamples": len(counterexamples)},
    )


_E4_EXT_BULLETS = {
    "A": ["00110", "10110"],
    "B": ["01111", "11100"],
    "C": ["11000"],
    "T12/e": ["11011"],
}
_E4_COEXT_BULLETS = {
    "A*": ["00110", "10001"],
    "B*": ["11001", "11100"],
    "C*": ["11000"],
    "T12\\e": ["01010"],
}


def _e4_growth(ctx, classes, bullets, iso_name, kind):
    expected = {name: [_vs(b) for b in sorted(gens)] for name, gens in bullets.items()}
    expected["escalation-isomorphic"] = True
    expected["all-others-have-s10-minor"] = True
    computed = {}
    for name, gens in bullets.items():
        c = _class_with(classes, gens[0])
        computed[name] = sorted(str(v) for v in c.members) if c else None
    esc = _class_with(classes, bullets[iso_name][0])
    computed["escalation-isomorphic"] = bool(esc) and are_isomorphic(
        esc.representative, ctx.m(iso_name)
    )
    kept = {v.value for c in classes for v in c.members}
    e4 = ctx.m("E4")
    cands = extension_candidates(e4) if kind == "extension" else coextension_candidates(e4)
    others_excluded = True
    for v in cands:
        if v.value in kept:
            continue
        child = extend(e4, v) if kind == "extension" else coextend(e4, v)
        if in_class(child, ctx.excluded_s10):
            others_excluded = False
    computed["all-others-have-s10-minor"] = others_excluded
    return expected, computed


def _c_e4_extensions(ctx):
    return _e4_growth(ctx, ctx.e4_ext_classes, _E4_EXT_BULLETS, "T12/e", "extension")


def _c_e4_coextensions(ctx):
    return _e4_growth(ctx, ctx.e4_coext_classes, _E4_COEXT_BULLETS, "T12\\e", "coextension")


def _c_e4_3seps(ctx):
    printed = sorted([_els(SIDE_1), _els(SIDE_2)])
    seps = nonminimal_exact_3seps(ctx.m("E4"), require_unions=True)
    return printed, sorted(_els(s.side_a) for s in seps)


_E4_SEP_COVERS = [
    ("A1", [{6, 7, 10}, {1, 2, 5, 10}]),
    ("A1", [{5, 7, 10}, {1, 2, 6, 10}]),
    ("A2", [{3, 8, 9}, {1, 2, 4, 8}]),
    ("A2", [{3, 4, 8}, {1, 2, 3, 9}]),
]


def _c_e4_sep_unions(ctx):
    e4 = ctx.m("E4")
    circ = circuits(e4)
    cocirc = cocircuits(e4)
    sides = {"A1": SIDE_1, "A2": SIDE_2}
    expected, computed = [], []
    for name, pair in _E4_SEP_COVERS:
        members = [frozenset(s) for s in pair]
        union_ok = frozenset().union(*members) == sides[name]
        uniform = all(s in circ for s in members) or all(s in cocirc for s in members)
        expected.append({"side": name, "covers": True, "uniform-kind": True})
        computed.append({"side": name, "covers": union_ok, "uniform-kind": uniform})
    return expected, computed


def _c_t12_splitter(ctx):
    flag, counterexamples = ctx.t12_splitter
    return (
        {"splitter": True, "counterexamples": 0},
        {"splitter": flag, "counterexamples": len(counterexamples)},
    )


def _c_mk33star(ctx):
    classes = ctx.mk33star_classes
    computed = {
        "class-count": len(classes),
        "isomorphic-to-S10": len(classes) == 1
        and are_isomorphic(classes[0].representative, ctx.m("S10")),
    }
    return {"class-count": 1, "isomorphic-to-S10": True}, computed


# ---------------------------------------------------------------------------
# Table claims


def _growth_cell_claim(cell):
    def check(ctx):
        report = ctx.e4_report
        kind = "extension" if cell in TABLE_1A else "coextension"
        rec = next(
            r
            for r in report.one_step
            if r.kind == kind and str(r.vector) == _vs(cell.vector)
        )
        r = ctx.m("E4").rank
        side = (SIDE_1, SIDE_2)[cell.side]
        if kind == "coextension":
            side = shift_labels(side, r)
            x = r + 1
        else:
            x = ctx.m("E4").size + 1
        expected = {"set": _els(cell.printed_set), "lambda": cell.printed_value}
        if cell.printed_set == side:
            value = rec.sides[cell.side].lam_a if rec.sides else None
            computed_set = _els(side)
        elif cell.printed_set == side | {x}:
            value = rec.sides[cell.side].lam_ax if rec.sides else None
            computed_set = _els(side | {x})
        else:
            value, computed_set = None, None
        if cell.printed_value is None and value == 2:
            # The print omits this one value; the recomputation stands alone.
            expected = {"set": expected["set"], "lambda": value}
        return expected, {"set": computed_set, "lambda": value}

    return check


def _verdict_state(outcome):
    if outcome.verdict is Verdict.EXCLUDED_MINOR:
        return {"s10-minor": True}
    state = {"s10-minor": False}
    if outcome.verdict is Verdict.GOOD:
        state["row"] = "good"
        if outcome.witness_set is not None:
            state["witness"] = _els(outcome.witness_set)
        else:
            state["witness"] = {"triangle": _els(outcome.triangle_witness)}
    elif outcome.verdict is Verdict.BAD:
        state["row"] = "bad"
    elif outcome.verdict is Verdict.BRIDGING:
        state["row"] = "bridging"
    else:
        state["row"] = "deferred"
    return state


def _row_cell_claim(cell, side_index):
    def check(ctx):
        report = ctx.e4_report
        if cell.has_minor:
            exp_state = {"s10-minor": True}
        elif cell.outcome == "good":
            exp_state = {"s10-minor": False, "row": "good", "witness-valid": True}
        else:
            exp_state = {"s10-minor": False, "row": "bad"}
        expected, computed = {}, {}
        for parent in cell.parents:
            rec = next(
                (
                    r
                    for r in report.two_step
                    if str(r.parent_vector) == _vs(parent) and str(r.row) == _vs(cell.row)
                ),
                None,
            )
            expected[_vs(parent)] = exp_state
            if rec is None:
                # The literal row duplicates a D row of this parent, so it
                # is not a cosimple coextension of it at all.
                computed[_vs(parent)] = "not-a-candidate"
                continue
            state = _verdict_state(rec.sides[side_index])
            if cell.outcome == "good" and not state["s10-minor"]:
                state.pop("witness", None)
                state["witness-valid"] = _printed_witness_valid(
                    ctx, parent, cell.row, side_index, cell.witness
                )
            computed[_vs(parent)] = state
        return expected, computed

    return check


def _printed_witness_valid(ctx, parent, row, side_index, witness) -> bool:
    """A printed good-row witness W is valid when A ⊆ W ⊆ A ∪ {e, f} and
    the child's connectivity on W equals 2 (different valid witnesses for
    the same row are not a disagreement)."""
    e4 = ctx.m("E4")
    type_i = extend(e4, _vec(parent))
    child = coextend(type_i, _vec(row))
    r = type_i.rank
    side_s = shift_labels((SIDE_1, SIDE_2)[side_index], r)
    e = shift_labels({type_i.labels[-1]}, r)
    f = r + 1
    w = frozenset(witness)
    return side_s <= w <= (side_s | e | {f}) and lam(child, w) == 2


def _c_claim4_disjoint(ctx):
    report = ctx.e4_report
    bad1 = report.bad_rows(0)
    bad2 = report.bad_rows(1)
    c_value = _vec("11000").value
    c1 = {r for p, r in bad1 if p == c_value}
    c2 = {r for p, r in bad2 if p == c_value}
    return (
        {"C-bad-rows-disjoint": True},
        {"C-bad-rows-disjoint": not (c1 & c2)},
    )


def _all_good_parents(report, side_index):
    ext = [r for r in report.one_step if r.kind == "extension" and r.in_class and not r.deferred]
    out = []
    for rec in ext:
        rows = [
            t
            for t in report.two_step
            if t.parent_vector.value == rec.vector.value and t.in_class and not t.deferred
        ]
        if rows and all(t.sides[side_index].verdict is Verdict.GOOD for t in rows):
            out.append(str(rec.vector))
    return sorted(out)


def _c_claim4_a1_good(ctx):
    return ["[00110]", "[01111]"], _all_good_parents(ctx.e4_report, 0)


def _c_claim4_a2_good(ctx):
    return ["[01111]", "[10110]"], _all_good_parents(ctx.e4_report, 1)


def _c_claim4_coupling(ctx):
    report = ctx.e4_report
    active = [r for r in report.one_step if r.in_class and not r.deferred]
    ok = True
    for rec in active:
        for i, j in ((0, 1), (1, 0)):
            if rec.sides and not rec.sides[i].direct and rec.sides[i].satisfied:
                ok = ok and rec.sides[j].direct
        ok = ok and any(s.satisfied for s in rec.sides)
    return True, ok


def _c_claim4_deferred(ctx):
    report = ctx.e4_report
    deferred = {
        kind: sorted(str(r.vector) for r in report.one_step if r.kind == kind and r.deferred)
        for kind in ("extension", "coextension")
    }
    return {"extension": ["[11011]"], "coextension": ["[01010]"]}, deferred


def _c_claim4_decomposer(ctx):
    return "induced-one-of-two", ctx.e4_report.overall


def _c_claim4_dual(ctx):
    rep = ctx.e4_report.dual_report
    return "induced-one-of-two", rep.overall if rep else None


# ---------------------------------------------------------------------------
# Registry

# kind "printed": a mismatch contradicts a printed value but not the
# mathematics -> discrepancy.  kind "strict": a mismatch means the
# recomputation itself failed -> fail.


def _registry():
    claims = [
        ("f7star.extension-class-count", "strict", "Theorem 1.1 proof, F7* extensions", _c_f7star_class_count),
        ("f7star.ag32-generators", "printed", "Theorem 1.1 proof, 'namely [1110]'", _c_f7star_ag32),
        ("f7star.s8-generators", "printed", "Theorem 1.1 proof, 'any of the five columns'", _c_f7star_s8),
        ("claim1.s8-separation-lambda", "printed", "Claim 1, lambda(A) = 2", _c_claim1_sep_lambda),
        ("claim1.s8-extension-classes", "printed", "Claim 1, extensions P9 and Z4", _c_claim1_ext_classes),
        ("claim1.z4-extension-lambda", "printed", "Claim 1, lambda({1,2,5,6}) = 2 in Z4", _c_claim1_z4_lambda),
        ("claim1.z4-coextension-classes", "printed", "Claim 1, Z4* the only coextension", _c_claim1_coext),
        ("claim1.z4-coextension-lambda", "printed", "Claim 1, lambda({1,2,6,7}) = 2", _c_claim1_coext_lambda),
        ("claim1.s8-decomposer", "strict", "Claim 1, conclusion", _c_claim1_decomposer),
        ("claim2.p9-nonminimal-3seps", "printed", "Claim 2, three 3-separations", _c_claim2_3seps),
        ("claim2.p9-separation-unions", "printed", "Claim 2, circuit/cocircuit conditions", _c_claim2_sep_unions),
        ("claim2.extension-classes", "printed", "Claim 2, extension bullets", _c_claim2_ext_classes),
        ("claim2.extension-lambda", "printed", "Claim 2, first and third extension", _c_claim2_ext_lambda),
        ("claim2.coextension-class-count", "printed", "Claim 2, '8 non-isomorphic coextensions'", _c_claim2_coext_count),
        ("claim2.coextension-classes", "printed", "Claim 2, coextension bullets", _c_claim2_coext_classes),
        ("claim2.coextension-lambda", "printed", "Claim 2, lambda({1,2,6,7}) = 2 rows", _c_claim2_coext_lambda),
        ("claim2.p9-decomposer", "strict", "Claim 2, conclusion", _c_claim2_decomposer),
        ("claim2.e4-self-dual", "printed", "Claim 2, 'E4 and E5 are self-dual'", _c_self_dual("E4")),
        ("claim2.e5-self-dual", "printed", "Claim 2, 'E4 and E5 are self-dual'", _c_self_dual("E5")),
        ("claim2.e5-internally-4-connected", "printed", "Claim 2, E5 internally 4-connected", _c_i4c("E5", True)),
        ("claim3.e5-representation", "strict", "Claim 3, working matrix for E5", _c_claim3_representation),
        ("claim3.e5-extension-class-count", "printed", "Claim 3, seven extension groups", _c_claim3_class_count),
        ("claim3.e5-extension-classes", "printed", "Claim 3, ext1..ext7 bullets", _c_claim3_classes),
        ("claim3.e5-extensions-s10-minor", "printed", "Claim 3, every extension has S10 minor", _c_claim3_s10_minor),
        ("claim3.e5-splitter", "strict", "Claim 3, conclusion", _c_claim3_splitter),
        ("e4.extension-generators", "printed", "Theorem 1.1 proof, E4 extensions A/B/C/T12-e", _c_e4_extensions),
        ("e4.coextension-generators", "printed", "Theorem 1.1 proof, E4 coextensions", _c_e4_coextensions),
        ("e4.nonminimal-3seps", "printed", "Theorem 1.1 proof, (A1,B1) and (A2,B2)", _c_e4_3seps),
        ("e4.separation-unions", "printed", "Theorem 1.1 proof, circuit/cocircuit covers", _c_e4_sep_unions),
        ("t12.splitter", "strict", "Theorem 1.1 proof, T12 splitter escalation", _c_t12_splitter),
        ("t12.4-connected", "printed", "Introduction, 'self-dual 4-connected matroid'", _c_t12_4connected),
        ("mk33star.extension-classes", "printed", "Introduction, S10 the only extension of M*(K3,3)", _c_mk33star),
        ("connectivity.internally-4-connected.S10", "printed", "Introduction, S10 internally 4-connected family", _c_i4c("S10", True)),
        ("connectivity.internally-4-connected.E5", "printed", "Introduction, E5 internally 4-connected", _c_i4c("E5", True)),
        ("connectivity.internally-4-connected.T12", "printed", "Introduction, T12 4-connected", _c_i4c("T12", True)),
        ("connectivity.internally-4-connected.S8", "printed", "Claim 1, S8 non-minimal 3-separation", _c_i4c("S8", False)),
        ("connectivity.internally-4-connected.P9", "printed", "Claim 2, P9 non-minimal 3-separations", _c_i4c("P9", False)),
        ("connectivity.internally-4-connected.E4", "printed", "Introduction, E4 not internally 4-connected", _c_i4c("E4", False)),
        ("duality.self-dual.AG(3,2)", "printed", "Introduction matrices", _c_self_dual("AG(3,2)")),
        ("duality.self-dual.S8", "printed", "Claim 1, 'S8 is self-dual'", _c_self_dual("S8")),
        ("duality.self-dual.E4", "printed", "Claim 2", _c_self_dual("E4")),
        ("duality.self-dual.E5", "printed", "Claim 2", _c_self_dual("E5")),
        ("duality.self-dual.T12", "printed", "Introduction, T12 self-dual", _c_self_dual("T12")),
        ("duality.f7-dual", "printed", "Theorem 1.1 proof, F7* minor", _c_f7_dual),
    ]

    def group_id(group: str) -> str:
        return group.lower().replace("*", "-star")

    for cell in TABLE_1A:
        cid = f"table1a.{group_id(cell.group)}.{cell.label}.lambda-a{cell.side + 1}"
        claims.append((cid, "printed", "Table 1a", _growth_cell_claim(cell)))
    for cell in TABLE_1B:
        cid = f"table1b.{group_id(cell.group)}.{cell.label}.lambda-a{cell.side + 1}"
        claims.append((cid, "printed", "Table 1b", _growth_cell_claim(cell)))

    block_names = {("10110", "01111"): "ab1", ("00110", "11100"): "ab2", ("11000",): "c"}
    for table, cells, side_index in (("table2a", TABLE_2A, 0), ("table2b", TABLE_2B, 1)):
        ref = "Table 2a" if side_index == 0 else "Table 2b"
        for cell in cells:
            cid = f"{table}.{block_names[cell.parents]}.{cell.label}"
            claims.append((cid, "printed", ref, _row_cell_claim(cell, side_index)))

    claims += [
        ("claim4.c-bad-rows-disjoint", "printed", "Claim 4, disjoint bad-row sets for C", _c_claim4_disjoint),
        ("claim4.a1-all-good-parents", "printed", "Claim 4, all-good parents for (A1,B1)", _c_claim4_a1_good),
        ("claim4.a2-all-good-parents", "printed", "Claim 4, all-good parents for (A2,B2)", _c_claim4_a2_good),
        ("claim4.coupling", "strict", "Corollary 2.2 hypothesis on Tables 1a/1b", _c_claim4_coupling),
        ("claim4.deferred-to-t12", "strict", "Theorem 1.1 proof, T12/e branch", _c_claim4_deferred),
        ("claim4.decomposer", "strict", "Claim 4, conclusion", _c_claim4_decomposer),
        ("claim4.dual-orientation", "strict", "Claim 4, Type (ii) side via duality", _c_claim4_dual),
    ]

    ids = [c[0] for c in claims]
    if len(ids) != len(set(ids)):
        raise AssertionError("duplicate claim ids in registry")
    table_count = sum(1 for c in claims if c[0].startswith("table"))
    manifest = len(TABLE_1A) + len(TABLE_1B) + len(TABLE_2A) + len(TABLE_2B)
    if table_count != manifest:
        raise AssertionError("table claims do not cover the printed-cell manifest")
    return claims


def claim_ids() -> list[str]:
    return [c[0] for c in _registry()]


def run_verification(only=None) -> dict:
    """Recompute the registered claims; returns the report dictionary.

    ``only`` restricts the run to the given claim ids (the full registry
    is still listed so unknown ids raise).
    """
    registry = _registry()
    known = {c[0] for c in registry}
    if only:
        unknown = set(only) - known
        if unknown:
            raise KeyError(f"unknown claim ids: {sorted(unknown)}")
    ctx = _Context()
    claims = []
    counts = {"pass": 0, "fail": 0, "discrepancy": 0}
    for cid, kind, ref, fn in registry:
        if only and cid not in only:
            continue
        expected, computed = fn(ctx)
        if expected == computed:
            status = "pass"
        else:
            status = "discrepancy" if kind == "printed" else "fail"
        counts[status] += 1
        claims.append(
            {
                "id": cid,
                "status": status,
                "expected": expected,
                "computed": computed,
                "paper_ref": ref,
            }
        )
    return {"version": __version__, "claims": claims, "summary": counts}


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def report_to_text(report: dict) -> str:
    lines = []
    for claim in report["claims"]:
        lines.append(f"{claim['status']:<12} {claim['id']}")
        if claim["status"] != "pass":
            lines.append(f"    expected: {claim['expected']}")
            lines.append(f"    computed: {claim['computed']}")
    s = report["summary"]
    lines.append(
        f"{len(report['claims'])} claims: {s['pass']} pass, "
        f"{s['fail']} fail, {s['discrepancy']} discrepancy"
    )
    return "\n".join(lines) + "\n"
