import math

import pytest

from collinear import lattice
from collinear.construct import ConstructedSet, ConstructionParams, ConstructionWitness, construct_even, construct_odd
from collinear.geometry import LineKey
from collinear.verify import (
    bound_constants,
    bound_report,
    bound_value,
    check_lemma1,
    check_lemma2,
    count_shell_by_coordinate,
    verify_ap,
    verify_construction,
)


def test_lemma1_examples():
    (res,) = check_lemma1(2, [25])
    assert res.passed
    lo = lattice.volume_ball(2, 5 - math.sqrt(2) / 2)
    hi = lattice.volume_ball(2, 5 + math.sqrt(2) / 2)
    assert lo <= 81 <= hi
    (res,) = check_lemma1(1, [4])
    assert res.passed and "3 <= 5 <= 5" in res.details
    assert all(r.passed for r in check_lemma1(2, [2]))
    with pytest.raises(ValueError):
        check_lemma1(3, [2])


def test_lemma1_records_failures(monkeypatch):
    monkeypatch.setattr(lattice, "count_ball", lambda d, m, budget=None: 10**9)
    (res,) = check_lemma1(2, [25])
    assert not res.passed
    assert res.counterexample["count"] == 10**9


def test_lemma2_examples():
    assert lattice.rep_two_squares(25) == 4 * lattice.divisor_count(25) == 12
    assert lattice.rep_two_squares(1) == 4 * lattice.divisor_count(1) == 4
    assert lattice.count_shell(4, 1) == 8 <= 4 * 1 * lattice.count_ball(2, 1)
    results = check_lemma2([3, 4], 60)
    assert all(r.passed for r in results)
    assert len(results) == 5
    with pytest.raises(ValueError):
        check_lemma2([2], 10)


def test_coordinate_recursion_is_independent_route():
    for d in range(1, 6):
        for m in range(40):
            assert count_shell_by_coordinate(d, m) == lattice.count_shell(d, m)


@pytest.mark.parametrize(
    "pts, gap2, expected",
    [
        ([(0, 0), (1, 2), (2, 4), (3, 6)], 5, True),
        ([(3, 6), (0, 0), (2, 4), (1, 2)], 5, True),
        ([(0, 0), (1, 2), (2, 4), (4, 8)], 5, False),
        ([(0, 0), (1, 2), (2, 4), (3, 7)], 5, False),
        ([(0, 0), (1, 2), (2, 4)], 4, False),
    ],
)
def test_verify_ap(pts, gap2, expected):
    assert verify_ap(pts, gap2) is expected


@pytest.mark.parametrize(
    "make, params",
    [(construct_even, ConstructionParams(2, 4, 5)), (construct_odd, ConstructionParams(3, 5, 4))],
)
def test_verify_construction_passes(make, params):
    report = verify_construction(make(params))
    assert report.passed, report.to_text()
    names = {c.name for c in report.checks}
    assert {"gap", "ap", "line_size", "t_k", "pigeonhole.shell", "pigeonhole.distance"} <= names


def test_gap_failure_names_the_line():
    pts = [(i, 0) for i in range(5)]
    fake = ConstructedSet(pts, ConstructionWitness(1, 1, [1, 3], [((0, 0), (1, 0))]), 4)
    report = verify_construction(fake)
    gap = report.get("gap")
    assert not gap.passed
    assert gap.counterexample["line"] == LineKey((1, 0), (0, 0))
    assert "FAIL" in gap.line() and "LineKey" in gap.line()


def test_extra_collinear_point_flips_gap():
    cs = construct_even(ConstructionParams(2, 4, 6))
    p, q = cs.witness.witness_pairs[0]
    line = cs.line_points((p, q))
    u = tuple(b - a for a, b in zip(line[0], line[1]))
    extra = tuple(a + 50 * x for a, x in zip(line[-1], u))
    cs.points.append(extra)
    report = verify_construction(cs)
    assert not report.get("gap").passed


def test_perturbed_witness_flips_ap():
    cs = construct_even(ConstructionParams(2, 4, 6))
    line = cs.line_points(cs.witness.witness_pairs[0])
    assert verify_ap(line, cs.witness.m_ell)
    bent = list(line)
    bent[1] = (bent[1][0] + 1,) + bent[1][1:]
    assert not verify_ap(bent, cs.witness.m_ell)

    (p, q) = cs.witness.witness_pairs[0]
    cs.witness.witness_pairs[0] = (p, (q[0] + 1,) + q[1:])
    report = verify_construction(cs)
    assert not report.passed
    assert not report.get("witness_pairs").passed


def test_pigeonhole_checks_recompute(monkeypatch):
    cs = construct_odd(ConstructionParams(3, 5, 4))
    cs.witness.pigeonhole.hyperplane_count = 1
    report = verify_construction(cs)
    assert not report.get("pigeonhole.hyperplane").passed


def test_bound_report():
    cs = construct_even(ConstructionParams(2, 4, 6))
    text = bound_report(cs)
    assert "NON-ASSERTING" in text
    assert f"DIAG n {len(cs.points)}" in text
    assert "2log(3k+6)" in text and "2log(4k+9)" in text
    assert "PASS" not in text and "FAIL" not in text
    consts = bound_constants(4)
    assert consts["2log(3k+6)"] == pytest.approx(2 * math.log2(18))
    assert consts["2log(4k+9)"] == pytest.approx(2 * math.log2(25))
    # n = 2: sqrt(log n) = 1
    assert bound_value(2, 3.0) == pytest.approx(2 ** (2 - 3.0))
    assert bound_value(1, 3.0) is None
    single = ConstructedSet([(0, 0)], ConstructionWitness(1, 1, [1, 3], []), 4)
    assert "suppressed" in bound_report(single)
