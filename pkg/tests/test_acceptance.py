"""Acceptance gate: one test and one printed verdict line per guarantee.

Each test prints `criterion NN: PASS|FAIL - detail` and fails when its
guarantee does not hold.  The heavyweight guarantees delegate to the named
verification suites (the same ones behind `polyech verify`), each run once
per pytest session at a fixed seed so the whole gate is deterministic.

Guarantees that promise graceful degradation accept a "flagged" status
(budget exhausted before certification) but never a "fail"; the verdict
line says when that happened.
"""

from __future__ import annotations

import random

from polyech import SparseIntMatrix, smith_normal_form
from polyech.verify import DEFAULT_BUDGET, SuiteReport, run_suite

from helpers import minor_gcd_divisors

SEED = 1

# delta-squared carries its own runtime promise (under a minute), so its
# budget is set below that; everything else gets the library default.
_BUDGETS = {"delta-squared": 55.0}

_REPORTS: dict[str, SuiteReport] = {}


def _suite(name: str) -> SuiteReport:
    if name not in _REPORTS:
        _REPORTS[name] = run_suite(name, seed=SEED, budget=_BUDGETS.get(name, DEFAULT_BUDGET))
    return _REPORTS[name]


def _check(report: SuiteReport, check_id: str):
    for c in report.checks:
        if c.check == check_id:
            return c
    raise AssertionError(f"suite {report.suite} has no check {check_id}")


def _verdict(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def _all_pass(report: SuiteReport, ids) -> tuple[bool, str]:
    bad = {i: _check(report, i).status for i in ids if _check(report, i).status != "pass"}
    return (not bad, "" if not bad else f" [{bad}]")


def _no_fail(report: SuiteReport, ids) -> tuple[bool, str]:
    sts = {i: _check(report, i).status for i in ids}
    failed = {i: s for i, s in sts.items() if s == "fail"}
    flagged = sorted(i for i, s in sts.items() if s == "flagged")
    note = f"; flagged (budget): {flagged}" if flagged else ""
    return (not failed, note if not failed else f" [{failed}]")


def test_criterion_01_differential_squares_to_zero():
    rep = _suite("delta-squared")
    ok, note = _all_pass(rep, ("01-closed-paths", "02-open-paths", "03-bar-truncation"))
    closed = _check(rep, "01-closed-paths").data
    opened = _check(rep, "02-open-paths").data
    n_paths = closed.get("paths", 0) + opened.get("paths", 0)
    ok = ok and n_paths >= 100 and rep.elapsed < 60.0
    _verdict(
        1,
        ok,
        f"the differential squares to zero exactly on every labeling below {n_paths} "
        f"sampled paths and on a diameter-3 reduced truncation, in {rep.elapsed:.1f}s{note}",
    )


def test_criterion_02_degree_rule_and_rounding_index():
    rep = _suite("delta-squared")
    ok, note = _all_pass(rep, ("04-degree-rule", "05-single-rounding-index"))
    terms = _check(rep, "04-degree-rule").data.get("nonzero_terms", "?")
    pairs = _check(rep, "05-single-rounding-index").data.get("labelled_pairs", "?")
    _verdict(
        2,
        ok,
        f"{terms} nonzero differential terms each drop the index by one; "
        f"{pairs} single-rounding pairs match the label-count index formula{note}",
    )


def test_criterion_03_rounding_order_independence():
    rep = _suite("rounding-commute")
    c = _check(rep, "01-corner-pairs")
    ok = c.status == "pass" and c.data.get("paths", 0) >= 200
    _verdict(
        3,
        ok,
        f"both rounding orders agree on {c.data.get('corner_pairs', '?')} corner pairs "
        f"across {c.data.get('paths', '?')} paths "
        f"({c.data.get('undefined_pairs', '?')} pairs undefined on both sides)",
    )


def test_criterion_04_open_distinct_endpoints_rank_two():
    rep = _suite("theorem-5")
    c = _check(rep, "01-open-distinct")
    ok = c.status == "pass" and c.data.get("paths", 0) >= 20
    _verdict(
        4,
        ok,
        f"{c.data.get('paths', '?')} convex open paths with distinct endpoints: "
        "homology free of rank two, generated by the all-e and one-h cycles",
    )


def test_criterion_05_open_equal_endpoints_rank_three():
    rep = _suite("theorem-5")
    c = _check(rep, "02-open-equal")
    ok = c.status == "pass" and c.data.get("paths", 0) >= 10
    _verdict(
        5,
        ok,
        f"{c.data.get('paths', '?')} nonconstant convex open paths with equal endpoints: "
        "homology free of rank three",
    )


def test_criterion_06_closed_path_homology_pattern():
    rep = _suite("theorem-5")
    ok, note = _all_pass(rep, ("03-closed-pattern", "04-closed-component"))
    ok = ok and rep.elapsed < 300.0
    _verdict(
        6,
        ok,
        "closed paths enclosing k = 2..6 points: rank k in degree 0, rank 1 in degrees "
        f"1..2(k-1), zero above, torsion-free; lowest-component piece has rank k-1 "
        f"(suite ran in {rep.elapsed:.1f}s){note}",
    )


def test_criterion_07_flattening_isomorphism():
    rep = _suite("flattening")
    ok, note = _all_pass(rep, ("01-chain-map", "02-induced-iso"))
    cells = _check(rep, "02-induced-iso").data.get("cells", "?")
    _verdict(
        7,
        ok,
        f"flattening is a chain map and induces isomorphisms in all {cells} computed "
        f"(degree, component) cells at one and two wraps{note}",
    )


def test_criterion_08_splicing_maps_and_stable_pattern():
    rep = _suite("splicing")
    exact_ok, exact_note = _all_pass(rep, ("01-chain-map", "02-u-commute"))
    rest_ok, rest_note = _no_fail(rep, ("03-pattern-n1", "04-pattern-n2", "05-splice-iso"))
    ok = exact_ok and rest_ok
    _verdict(
        8,
        ok,
        "splicing commutes with the differential and the corner-cut map exactly; "
        f"stable staircase ranks and splice-induced isomorphisms verified{exact_note}{rest_note}",
    )


def test_criterion_09_corner_cut_map():
    u = _suite("u-chainmap")
    h = _suite("homotopy")
    ok_u, note_u = _all_pass(u, ("01-index-drop", "02-chain-map", "03-eh-cycles"))
    c = _check(h, "01-k-homotopy")
    ok = ok_u and c.status == "pass"
    samples = sum(
        _check(u, i).data.get("generators", _check(u, i).data.get("paths", 0))
        for i in ("01-index-drop", "02-chain-map", "03-eh-cycles")
    )
    _verdict(
        9,
        ok,
        f"corner cutting drops the index by two, commutes with the differential, and "
        f"rounds the canonical cycles ({samples} samples); the relabeling homotopy "
        f"interpolates between two cut positions ({c.data.get('generators', '?')} samples)"
        f"{note_u}",
    )


def test_criterion_10_twisted_differentials():
    rep = _suite("homotopy")
    c = _check(rep, "02-twisted")
    ok = c.status == "pass" and c.data.get("generators", 0) >= 100
    _verdict(
        10,
        ok,
        f"the relabeling map anticommutes with the differential, squares to zero, and "
        f"the deformed differential squares to zero ({c.data.get('generators', '?')} samples)",
    )


def test_criterion_11_explicit_cycles():
    rep = _suite("cycles")
    ok, note = _all_pass(
        rep, ("01-eh", "02-z", "03-q", "04-pe", "05-triangle")
    )
    tri = _check(rep, "05-triangle").data.get("triangles", 0)
    ok = ok and tri >= 10
    _verdict(
        11,
        ok,
        "all-e/one-h sums, segment cycles, and alternating step sums are exact cycles; "
        "segment cycles are antisymmetric; marked two-gon boundaries telescope; "
        f"{tri} triangle relations bound with explicit witnesses{note}",
    )


def test_criterion_12_coefficient_axioms():
    rep = _suite("axioms")
    ids = tuple(c.check for c in rep.checks if c.check != "00-setup")
    ok, note = _all_pass(rep, ids)
    pairs = _check(rep, "01-index").data.get("pairs", "?")
    _verdict(
        12,
        ok,
        f"every one of {pairs} nonzero coefficients satisfies the index, nesting, "
        "label-matching, connectedness, two-edge, and locality constraints; simple and "
        f"degenerate roundings have coefficient exactly +-1{note}",
    )


def test_criterion_13_periodic_vanishing():
    rep = _suite("vanishing")
    ok, note = _no_fail(rep, ("01-gamma-1-0", "02-gamma-2-0", "03-gamma-1-1"))
    _verdict(
        13,
        ok,
        f"nonzero-period complexes for periods (1,0), (2,0), (1,1) stabilize to rank "
        f"zero in low degrees{note}",
    )


def test_criterion_14_reduced_homology_stabilizes():
    rep = _suite("hbar")
    ok, note = _no_fail(
        rep, ("01-degree-0", "02-degree-1", "03-degree-2", "04-degree-3", "05-u-iso")
    )
    groups = {
        i[-1]: _check(rep, i).data.get("group", "?")
        for i in ("01-degree-0", "02-degree-1", "03-degree-2")
    }
    _verdict(
        14,
        ok,
        f"translation-reduced homology is free of rank three in degrees 0..2 "
        f"(got {groups}), degree 3 as a stretch, and the corner-cut map induces an "
        f"isomorphism from degree two to degree zero{note}",
    )


def test_criterion_15_smith_form_matches_minor_gcd_oracle():
    rng = random.Random(15)
    trials = 500
    for _ in range(trials):
        m = rng.randint(1, 8)
        n = rng.randint(1, 8)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        mat = SparseIntMatrix(m, n)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v:
                    mat[i, j] = v
        got = list(smith_normal_form(mat).divisors)
        want = minor_gcd_divisors(rows)
        assert got == want, f"divisors {got} != oracle {want} for {rows}"
    _verdict(
        15,
        True,
        f"invariant factors agree with the minor-gcd oracle on {trials} random matrices "
        "up to 8x8 with entries in [-9, 9]",
    )
