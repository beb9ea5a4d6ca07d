"""Exact affine geometry over Z^d: collinearity, canonical lines, line census."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .lattice import Point


class DuplicatePointError(ValueError):
    pass


def _sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _same_dim(*pts: Sequence[int]) -> int:
    d = len(pts[0])
    for p in pts[1:]:
        if len(p) != d:
            raise ValueError(f"dimension mismatch: {len(p)} != {d}")
    return d


def collinear(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> bool:
    """True iff a, b, c lie on a common line (all 2x2 minors vanish)."""
    d = _same_dim(a, b, c)
    u = _sub(b, a)
    v = _sub(c, a)
    for i in range(d):
        for j in range(i + 1, d):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


@dataclass(frozen=True, order=True)
class LineKey:
    """Canonical form of an affine line through lattice points.

    ``direction`` is primitive with its first nonzero entry positive; ``base``
    is the unique lattice point of the line whose coordinate at that first
    nonzero position lies in ``[0, direction[j])``.
    """

    direction: tuple[int, ...]
    base: tuple[int, ...]

    def point(self, t: int) -> Point:
        return tuple(b + t * u for b, u in zip(self.base, self.direction))

    def contains(self, p: Sequence[int]) -> bool:
        return collinear(self.base, self.point(1), p)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no direction")
    u = [x // g for x in v]
    for x in u:
        if x != 0:
            if x < 0:
                u = [-y for y in u]
            break
    return tuple(u)


def line_key(a: Sequence[int], b: Sequence[int]) -> LineKey:
    _same_dim(a, b)
    if tuple(a) == tuple(b):
        raise ValueError(f"degenerate pair: both points are {tuple(a)}")
    u = primitive(_sub(b, a))
    j = next(i for i, x in enumerate(u) if x != 0)
    t = a[j] // u[j]
    base = tuple(x - t * y for x, y in zip(a, u))
    return LineKey(u, base)


@dataclass
class Census:
    """Histogram k -> t_k of lines meeting a point set in exactly k points."""

    n: int
    exact_counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.exact_counts = {k: v for k, v in sorted(self.exact_counts.items()) if v}

    def t(self, k: int) -> int:
        return self.exact_counts.get(k, 0)

    def T(self, k: int) -> int:
        return sum(v for j, v in self.exact_counts.items() if j >= k)

    @property
    def max_k(self) -> int:
        return max(self.exact_counts, default=0)

    def pair_total(self) -> int:
        return sum(v * math.comb(k, 2) for k, v in self.exact_counts.items())


def check_distinct(points: Iterable[Sequence[int]]) -> list[Point]:
    pts = [tuple(p) for p in points]
    if pts:
        _same_dim(*pts)
    seen: set[Point] = set()
    for p in pts:
        if p in seen:
            raise DuplicatePointError(f"duplicate point {p}")
        seen.add(p)
    return pts


def _multiplicity(pairs: int) -> int:
    # invert pairs == C(m, 2)
    m = (1 + math.isqrt(1 + 8 * pairs)) // 2
    assert m * (m - 1) // 2 == pairs, pairs
    return m


def line_multiplicities(points: Iterable[Sequence[int]]) -> dict[LineKey, int]:
    """Every line spanned by two of the points, mapped to how many points it holds."""
    pts = check_distinct(points)
    pair_counts: Counter[LineKey] = Counter(line_key(a, b) for a, b in combinations(pts, 2))
    return {key: _multiplicity(c) for key, c in pair_counts.items()}


def census(points: Iterable[Sequence[int]]) -> Census:
    pts = check_distinct(points)
    hist = Counter(line_multiplicities(pts).values())
    return Census(len(pts), dict(hist))


def census_bruteforce(points: Iterable[Sequence[int]]) -> Census:
    """Cubic-time census that never builds a line key.

    Each line is charged to the pair of its two lowest-indexed points.
    """
    pts = check_distinct(points)
    n = len(pts)
    hist: Counter[int] = Counter()
    for i in range(n):
        for j in range(i + 1, n):
            a, b = pts[i], pts[j]
            if any(collinear(a, b, pts[h]) for h in range(j) if h != i):
                continue
            hist[2 + sum(1 for h in range(j + 1, n) if collinear(a, b, pts[h]))] += 1
    return Census(n, dict(hist))


def verify_gap(points: Iterable[Sequence[int]], k: int) -> bool:
    """True iff no line meets the points in k + 1 or more points."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return census(points).T(k + 1) == 0


def rich_lines(points: Iterable[Sequence[int]], at_least: int) -> list[tuple[LineKey, int]]:
    """Lines holding ``at_least`` or more of the points, sorted by key."""
    return sorted((key, m) for key, m in line_multiplicities(points).items() if m >= at_least)
