import itertools
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collinear import lattice
from collinear.lattice import (
    BallSpec,
    BudgetExceeded,
    ShellSpec,
    count_ball,
    count_shell,
    divisor_count,
    enumerate_shell,
    rep_two_squares,
    volume_ball,
)

from .oracles import box_points, box_shell


@pytest.mark.parametrize(
    "dim, r, expected",
    [(2, 1.0, math.pi), (3, 1.0, 4 * math.pi / 3), (1, 2.0, 4.0)],
)
def test_volume_examples(dim, r, expected):
    assert volume_ball(dim, r) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("dim", range(1, 65))
def test_volume_against_mpmath(dim):
    mpmath.mp.dps = 40
    r = mpmath.mpf("1.7")
    exact = r**dim * mpmath.pi ** (mpmath.mpf(dim) / 2) / mpmath.gamma(mpmath.mpf(dim) / 2 + 1)
    assert abs(volume_ball(dim, 1.7) / float(exact) - 1) <= 1e-12


@pytest.mark.parametrize("dim, r", [(0, 1.0), (2, 0.0), (2, -1.0)])
def test_volume_domain(dim, r):
    with pytest.raises(ValueError):
        volume_ball(dim, r)


@pytest.mark.parametrize("dim, m, expected", [(2, 1, 5), (2, 4, 13), (1, 0, 1), (2, 25, 81)])
def test_count_ball_examples(dim, m, expected):
    assert count_ball(dim, m) == expected
    assert BallSpec(dim, m).count() == expected


def test_count_ball_budget():
    with pytest.raises(BudgetExceeded):
        count_ball(2, 25, budget=80)
    assert count_ball(2, 25, budget=81) == 81


def test_enumerate_shell_examples():
    pts = enumerate_shell(2, 25)
    assert len(pts) == 12
    assert set(pts) == {(5, 0), (-5, 0), (0, 5), (0, -5)} | {
        (a * x, b * y) for x, y in [(3, 4), (4, 3)] for a in (1, -1) for b in (1, -1)
    }
    s3 = enumerate_shell(3, 2)
    assert len(s3) == 12
    assert all(sorted(map(abs, p)) == [0, 1, 1] for p in s3)
    assert enumerate_shell(2, 3) == []


def test_enumerate_shell_is_lexicographic_and_deterministic():
    pts = enumerate_shell(4, 30)
    assert pts == sorted(pts)
    assert pts == enumerate_shell(4, 30)
    assert ShellSpec(4, 30).points() == pts


def test_enumerate_shell_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_shell(3, 14, budget=47)
    assert len(enumerate_shell(3, 14, budget=48)) == 48


def test_budget_env(monkeypatch):
    monkeypatch.setenv(lattice.BUDGET_ENV, "10")
    with pytest.raises(BudgetExceeded):
        enumerate_shell(3, 14)
    monkeypatch.delenv(lattice.BUDGET_ENV)
    assert lattice.default_budget() == lattice.DEFAULT_BUDGET


@pytest.mark.parametrize("dim, m, expected", [(4, 1, 8), (2, 25, 12), (5, 0, 1)])
def test_count_shell_examples(dim, m, expected):
    assert count_shell(dim, m) == expected


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_shell_against_box_oracle(dim):
    top = {1: 60, 2: 60, 3: 30, 4: 12}[dim]
    for m in range(top + 1):
        oracle = box_shell(dim, m)
        assert count_shell(dim, m) == len(oracle)
        assert enumerate_shell(dim, m) == sorted(oracle)


def test_ball_against_box_oracle():
    for dim, top in [(1, 50), (2, 40), (3, 20), (5, 6)]:
        for m in range(top + 1):
            assert count_ball(dim, m) == len(box_points(dim, m))


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 4), (25, 12)])
def test_rep_two_squares_examples(n, expected):
    assert rep_two_squares(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 6), (25, 3)])
def test_divisor_count_examples(n, expected):
    assert divisor_count(n) == expected


def test_tables_match_pointwise():
    r2 = lattice.rep_two_squares_table(2000)
    dv = lattice.divisor_count_table(2000)
    for n in range(2001):
        assert r2[n] == rep_two_squares(n)
        if n:
            assert dv[n] == divisor_count(n)
            assert dv[n] == sum(1 for i in range(1, n + 1) if n % i == 0)


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=60))
@settings(max_examples=60, deadline=None)
def test_enumeration_matches_convolution(dim, m):
    assert len(enumerate_shell(dim, m)) == count_shell(dim, m)


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=200))
@settings(max_examples=60, deadline=None)
def test_shell_sum_is_ball(dim, m):
    assert sum(count_shell(dim, s) for s in range(m + 1)) == count_ball(dim, m)


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=200))
@settings(max_examples=60, deadline=None)
def test_lemma1_sandwich(dim, extra):
    m = dim + extra
    r = math.sqrt(m)
    half = math.sqrt(dim) / 2
    n = count_ball(dim, m)
    assert volume_ball(dim, r - half) * (1 - 1e-6) <= n <= volume_ball(dim, r + half) * (1 + 1e-6)


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=200, deadline=None)
def test_two_squares_divisor_bound(n):
    assert rep_two_squares(n) <= 4 * divisor_count(n)


@given(st.integers(min_value=2, max_value=4), st.integers(min_value=1, max_value=40), st.data())
@settings(max_examples=40, deadline=None)
def test_shell_closed_under_signs_and_permutations(dim, m, data):
    pts = set(enumerate_shell(dim, m))
    if not pts:
        return
    p = data.draw(st.sampled_from(sorted(pts)))
    perm = data.draw(st.permutations(range(dim)))
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=dim, max_size=dim))
    assert tuple(s * p[i] for s, i in zip(signs, perm)) in pts


def test_invalid_specs():
    with pytest.raises(ValueError):
        ShellSpec(0, 1)
    with pytest.raises(ValueError):
        BallSpec(2, -1)
    with pytest.raises(ValueError):
        divisor_count(0)
    with pytest.raises(ValueError):
        rep_two_squares(-1)


def test_shell_slice():
    full = enumerate_shell(3, 26)
    for x in range(-6, 7):
        assert lattice.enumerate_shell_slice(3, 26, x) == [p for p in full if p[0] == x]
    assert list(itertools.chain.from_iterable(lattice.enumerate_shell_slice(3, 26, x) for x in range(-6, 7))) == full
