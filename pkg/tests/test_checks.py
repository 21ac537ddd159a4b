import pytest

from wienerecc.checks import (
    CATALOG,
    EqualityMismatch,
    Trial,
    Violation,
    conjecture2_bound,
    get_check,
    native_population,
    run_check,
    run_check_parallel,
)
from wienerecc.families import complete, cycle, path, paw, star, t7, t8
from wienerecc.graph import graph_from_edges
from wienerecc.graph6 import encode


def trials(check_id, g):
    return get_check(check_id)().evaluate(g)


def test_catalog_ids():
    assert list(CATALOG) == [
        "T21", "T22", "DANK", "T23i", "T23ii", "NG", "TSTAR", "TCAT", "TLINE",
        "PECC", "TRAD", "BUCK", "TBRIDGE", "CONJ1", "CONJ2",
    ]
    with pytest.raises(ValueError):
        get_check("T99")


def test_t21_examples():
    assert trials("T21", cycle(4)) == [Trial(8, 8, ">=", True)]
    assert trials("T21", complete(4)) == [Trial(6, 6, ">=", True)]
    assert trials("T21", path(4)) == [Trial(10, 9, ">=", False)]


def test_t22_examples():
    assert trials("T22", path(4)) == [Trial(10, 10, ">=", True)]
    assert trials("T22", cycle(4)) == [Trial(8, 8, ">=", True)]
    assert trials("T22", cycle(5)) == [Trial(15, 10, ">=", False)]
    assert trials("T22", path(3)) is None


def test_t23_examples():
    assert trials("T23i", star(4)) == [Trial(18, 3 * 7 - 9 + 6, "<=", True)]
    assert trials("T23i", path(4)) == [Trial(20, 22, "<=", False)]
    (t,) = trials("T23ii", cycle(5))
    assert t.lhs == t.rhs == 40 and t.member
    (t,) = trials("T23ii", cycle(7))
    assert t.lhs == t.rhs == 8 * 21 and t.member
    assert trials("T23ii", path(5)) is None


def test_ng_examples():
    # 2(W + coW) vs n(n-1) + (n-1)(eps + coeps) - xi - coxi, doubled
    assert trials("NG", path(4)) == [Trial(40, 12 + 3 * 20 - 28, "<=")]
    assert trials("NG", cycle(5)) == [Trial(60, 20 + 4 * 20 - 40, "<=")]
    (t,) = trials("NG", path(5))
    assert t.lhs <= t.rhs
    assert trials("NG", star(5)) is None


def test_tree_examples():
    assert trials("TSTAR", star(5)) == [Trial(64, 64, "<=", True)]
    assert trials("TSTAR", path(4)) == [Trial(40, 51, "<=", False)]
    assert trials("TSTAR", path(5)) == [Trial(80, 113, "<=", False)]
    # L(P_5) = P_4 with W - eps = 0; P_5 has W - eps = 4
    assert trials("TLINE", path(5)) == [Trial(8, 0 + 10 - 4 + 2, "==")]
    assert trials("TLINE", star(4)) == [Trial(4, 0 + 4 - 2 + 2, "==")]
    assert trials("BUCK", path(5)) == [Trial(20, 20, "==")]
    assert trials("PECC", path(5)) == [Trial(16, 6 + 10, "==", detail="|C|=1")]
    # P_6: d(2) = d(3) = 9, r = 3, direct eps = 24
    assert trials("PECC", path(6)) == [Trial(48, 9 + 9 - 6 + 36, "==", detail="|C|=2")]
    assert trials("PECC", star(5)) == [Trial(9, 4 + 5, "==", detail="|C|=1")]
    assert trials("TRAD", path(5)) == [Trial(16, 16, ">=", True, "|C|=1")]
    assert trials("TSTAR", cycle(4)) is None


def test_tbridge_examples():
    ts = trials("TBRIDGE", star(4))
    assert Trial(-1, 2, "<=", detail="edge 0-1") in ts
    assert Trial(5, 2 + 0 + 3, "==", detail="edge 0-1 identity") in ts
    ts = trials("TBRIDGE", path(4))
    assert Trial(-1, 0, "<=", detail="edge 1-2") in ts
    assert Trial(6, 1 + 1 + 4, "==", detail="edge 1-2 identity") in ts
    # paw -> K_3: W drops 8 - 3; triangle side d(0) = 2, pendant side 0, 3 * 1 pairs
    assert trials("TBRIDGE", paw()) == [
        Trial(0, 1, "<=", detail="edge 0-3"),
        Trial(5, 2 + 0 + 3, "==", detail="edge 0-3 identity"),
    ]


def test_conj1_examples():
    assert trials("CONJ1", complete(3))[0] == Trial(-1, 0, "<=", detail="edge 0-1")
    # deleting the triangle edge of the paw gives K_{1,3} with a larger difference,
    # but CONJ1 only contracts, so nothing is flagged
    v = run_check("CONJ1", [paw()], "paw")
    assert v.violations == [] and v.status == "partial"


def test_conj2_examples():
    assert trials("CONJ2", path(10)) == [Trial(95, 95, "<=", True)]
    assert conjecture2_bound(10) == 95
    check = get_check("CONJ2")()
    check.observe(t7())
    check.observe(t8())
    assert check.skipped == 2 and not check.violations
    assert [w["difference"] for w in check.witnesses] == [23, 40]
    assert [w["radius"] for w in check.witnesses] == [3, 3]


def test_bound_matches_rational_form():
    from fractions import Fraction
    import math

    for n in range(1, 300):
        exact = Fraction(n**3, 6) - Fraction(3 * n**2, 4) + Fraction(n, 3) + Fraction(1, 4)
        assert conjecture2_bound(n) == math.floor(exact)


def test_violation_and_mismatch_recording():
    class Fake(get_check("T21")):
        def trials(self, g, s):
            return [Trial(1, 2, ">="), Trial(3, 3, "<=", False), Trial(2, 3, "<=", True)]

    seen = []
    c = Fake(sink=lambda cid, item: seen.append(item))
    c.observe(path(3))
    g6 = encode(path(3))
    assert c.violations == [Violation(g6, 1, 2)]
    assert c.mismatches == [
        EqualityMismatch(g6, False, True, 3, 3),
        EqualityMismatch(g6, True, False, 2, 3),
    ]
    assert len(seen) == 3
    assert c.verdict("x").status == "refuted"


def test_skips_disconnected():
    v = run_check("T21", [graph_from_edges(4, [(0, 1), (2, 3)])], "x")
    assert v.skipped == 1 and v.graphs_tested == 0


def test_t23ii_reports_complete_graphs():
    label, pop = native_population("graphs", 7)
    v = run_check("T23ii", pop, label)
    assert v.violations == []
    assert [m.graph6 for m in v.equality_mismatches] == [encode(complete(4)), encode(complete(5))]
    assert all(m.actual_equality and not m.expected_member for m in v.equality_mismatches)


def test_records_are_self_certifying():
    label, pop = native_population("graphs", 7)
    v = run_check("T23ii", pop, label)
    check = get_check("T23ii")()
    for m in v.equality_mismatches:
        assert check.reproduce(m.graph6, m.detail) == (m.lhs, m.rhs)


@pytest.mark.parametrize("check_id", ["T21", "TBRIDGE", "T23ii", "CONJ2", "TCAT"])
def test_parallel_matches_sequential(check_id):
    kind = get_check(check_id).kind
    n = 6 if kind == "graphs" else 10
    seq = run_check(check_id, native_population(kind, n)[1], "p")
    par = run_check_parallel(check_id, native_population(kind, n)[1], "p", jobs=2, chunk_size=7)
    assert seq == par


def test_verdicts_reproducible():
    a = run_check("TCAT", native_population("trees", 9)[1], "p")
    b = run_check("TCAT", native_population("trees", 9)[1], "p")
    assert a == b
    assert a.status == "verified"
    assert a.notes["per_order"]["7"]["min_all"] == a.notes["per_order"]["7"]["min_caterpillar"]


def test_tcat_reports_missing_caterpillar_minimum():
    check = get_check("TCAT")()
    # fabricate an order where the global minimiser is not a caterpillar
    check.per_order[9] = [0, "H??????", 3, False]
    check.finalize()
    assert check.violations[0].lhs == 3 and check.violations[0].rhs == 0


def test_population_ceiling():
    with pytest.raises(ValueError):
        native_population("graphs", 8)
    with pytest.raises(ValueError):
        native_population("trees", 21)
