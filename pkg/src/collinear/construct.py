"""Sphere-family constructions with many k-point lines and no k+1 collinear points.

Even k: pick the richest shell S_d(r) inside B_d(R0), the most popular squared
distance l^2 among its pairs, and take every lattice point on the k/2 spheres
of squared radius r^2 + i(i-1) l^2.  Each pair (p, q) at distance l on S_d(r)
extends outward in steps of q - p to k equally spaced points, one pair per
sphere.

Odd k: double the shell into (2Z)^d, keep pairs with distinct first
coordinates, and centre each line on the pair's midpoint.  The midpoints sit
on a sphere of squared radius 4r^2 - l^2; only the midpoints in the most
populated hyperplane {x_1 = x0} are kept, and the outermost sphere loses its
points in that hyperplane.
"""

from __future__ import annotations

import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .lattice import (
    BudgetExceeded,
    Point,
    count_ball,
    count_shell,
    dist2,
    enumerate_shell,
    enumerate_shell_slice,
    norm2,
)

log = logging.getLogger(__name__)

Pair = tuple[Point, Point]


class ConstructionError(RuntimeError):
    """The parameters admit no witness line (e.g. an empty pair pool)."""


@dataclass(frozen=True)
class ConstructionParams:
    d: int
    k: int
    r0: int | None = None
    max_shell_points: int | None = None
    max_pairs: int | None = None

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if self.k < 4:
            raise ValueError(f"k must be >= 4, got {self.k}")
        if self.r0 is not None and self.r0 < 1:
            raise ValueError(f"r0 must be >= 1, got {self.r0}")

    @property
    def outer_radius(self) -> int:
        return 2**self.d if self.r0 is None else self.r0


@dataclass
class Pigeonhole:
    """Raw counts behind each pigeonhole step, kept for exact re-checking."""

    r0: int
    ball_count: int
    shell_count: int
    total_pairs: int
    class_size: int
    distance_classes: int
    # odd case only
    pool_pairs: int | None = None
    midpoints: int | None = None
    hyperplane_count: int | None = None
    hyperplane_slots: int | None = None


@dataclass
class ConstructionWitness:
    """Choices made by the construction.

    In the odd case ``m_r`` is the base shell r^2 (the pairs live on the
    doubled shell 4 r^2), ``m_ell`` is l^2 and the pairs are at squared
    distance 4 l^2.  ``radii[0]`` is the midpoint sphere there.
    """

    m_r: int
    m_ell: int
    radii: list[int]
    witness_pairs: list[Pair]
    x0: int | None = None
    pigeonhole: Pigeonhole | None = None

    @property
    def m_mid(self) -> int | None:
        return None if self.x0 is None else self.radii[0]


@dataclass
class ConstructedSet:
    points: list[Point]
    witness: ConstructionWitness
    k: int
    parity: str = field(default="")
    dropped_pairs: int = 0

    def __post_init__(self) -> None:
        if not self.parity:
            self.parity = "even" if self.k % 2 == 0 else "odd"

    @property
    def d(self) -> int:
        return len(self.points[0]) if self.points else 0

    def line_points(self, pair: Pair) -> list[Point]:
        """The k points the construction puts on the line of a witness pair."""
        return witness_line(pair, self.k)


def witness_line(pair: Pair, k: int) -> list[Point]:
    p, q = pair
    if k % 2 == 0:
        u = tuple(b - a for a, b in zip(p, q))
        steps = range(-(k // 2 - 1), k // 2 + 1)
        return [tuple(a + t * x for a, x in zip(p, u)) for t in steps]
    # odd: centre on the midpoint, step half the pair difference
    diff = [b - a for a, b in zip(p, q)]
    if any(x % 2 for x in diff):
        raise ValueError(f"pair {pair} does not lie in the doubled lattice")
    u = tuple(x // 2 for x in diff)
    mid = tuple(a + x for a, x in zip(p, u))
    h = (k - 1) // 2
    return [tuple(c + t * x for c, x in zip(mid, u)) for t in range(-h, h + 1)]


def doubling_map(p: Sequence[int]) -> Point:
    if not any(p):
        raise ValueError("the origin has no doubled counterpart on a sphere")
    return tuple(2 * x for x in p)


def choose_shell(d: int, r0: int, budget: int | None = None) -> tuple[int, int]:
    """Richest shell 0 < m <= r0^2, smallest m on ties."""
    count_ball(d, r0 * r0, budget=budget)
    best_m, best = 0, -1
    for m in range(1, r0 * r0 + 1):
        c = count_shell(d, m)
        if c > best:
            best_m, best = m, c
    return best_m, best


def _distance_classes(pairs: list[Pair]) -> dict[int, list[Pair]]:
    classes: dict[int, list[Pair]] = defaultdict(list)
    for p, q in pairs:
        classes[dist2(p, q)].append((p, q))
    return classes


def _most_popular(classes: dict[int, list[Pair]]) -> int:
    return min(classes, key=lambda m: (-len(classes[m]), m))


def _pair_budget(n: int, budget: int | None) -> None:
    total = math.comb(n, 2)
    if budget is not None and total > budget:
        raise BudgetExceeded(f"{total} pairs exceeds pair budget {budget}")


def choose_distance_even(shell_points: list[Point], budget: int | None = None) -> tuple[int, list[Pair]]:
    """Most frequent squared distance among unordered pairs, smallest on ties."""
    if len(shell_points) < 2:
        raise ConstructionError(f"need at least 2 shell points for a pair, got {len(shell_points)}")
    _pair_budget(len(shell_points), budget)
    classes = _distance_classes(list(combinations(shell_points, 2)))
    m_ell = _most_popular(classes)
    return m_ell, classes[m_ell]


def _assemble_lines(pairs: list[Pair], k: int, members: set[Point]) -> tuple[list[Pair], int]:
    kept: list[Pair] = []
    dropped = 0
    for pair in pairs:
        line = witness_line(pair, k)
        if len(set(line)) != k or not members.issuperset(line):
            dropped += 1
            continue
        kept.append(pair)
    if dropped:
        log.warning("discarded %d witness pairs with degenerate lines", dropped)
    return kept, dropped


def _assert_increasing(radii: list[int]) -> None:
    if any(a >= b for a, b in zip(radii, radii[1:])):
        raise ConstructionError(f"sphere radii not strictly increasing: {radii}")


def construct_even(params: ConstructionParams) -> ConstructedSet:
    d, k = params.d, params.k
    if k % 2:
        raise ValueError(f"construct_even needs even k, got {k}")
    r0 = params.outer_radius
    ball = count_ball(d, r0 * r0, budget=params.max_shell_points)
    m_r, n_shell = choose_shell(d, r0, budget=params.max_shell_points)
    shell = enumerate_shell(d, m_r, budget=params.max_shell_points)
    m_ell, pairs = choose_distance_even(shell, budget=params.max_pairs)

    radii = [m_r + i * (i - 1) * m_ell for i in range(1, k // 2 + 1)]
    _assert_increasing(radii)
    points = [p for m in radii for p in enumerate_shell(d, m, budget=params.max_shell_points)]
    kept, dropped = _assemble_lines(pairs, k, set(points))
    if not kept:
        raise ConstructionError("no witness line survived")

    ph = Pigeonhole(
        r0=r0,
        ball_count=ball,
        shell_count=n_shell,
        total_pairs=math.comb(n_shell, 2),
        class_size=len(pairs),
        distance_classes=4 * m_r,
    )
    witness = ConstructionWitness(m_r, m_ell, radii, kept, pigeonhole=ph)
    return ConstructedSet(points, witness, k, "even", dropped)


def construct_odd(params: ConstructionParams) -> ConstructedSet:
    d, k = params.d, params.k
    if k % 2 == 0 or k < 5:
        raise ValueError(f"construct_odd needs odd k >= 5, got {k}")
    r0 = params.outer_radius
    ball = count_ball(d, r0 * r0, budget=params.max_shell_points)
    m_r, n_shell = choose_shell(d, r0, budget=params.max_shell_points)
    doubled = [doubling_map(p) for p in enumerate_shell(d, m_r, budget=params.max_shell_points)]
    _pair_budget(len(doubled), params.max_pairs)

    pool = [(p, q) for p, q in combinations(doubled, 2) if p[0] != q[0]]
    if not pool:
        raise ConstructionError("no pair of shell points has distinct first coordinates")
    classes = _distance_classes(pool)
    big = _most_popular(classes)
    # squared distances in (2Z)^d are multiples of 4
    assert big % 4 == 0, big
    m_ell = big // 4
    chosen = classes[big]

    m_mid = 4 * m_r - m_ell
    mids = [tuple((a + b) // 2 for a, b in zip(p, q)) for p, q in chosen]
    assert all(norm2(c) == m_mid for c in mids)
    top = math.isqrt(m_mid)
    by_x = Counter(c[0] for c in mids)
    x0 = min(range(-top, top + 1), key=lambda x: (-by_x[x], x))
    selected = [pair for pair, c in zip(chosen, mids) if c[0] == x0]

    h = (k - 1) // 2
    radii = [4 * m_r + (i + 1) * (i - 1) * m_ell for i in range(0, h + 1)]
    _assert_increasing(radii)
    points = enumerate_shell_slice(d, radii[0], x0, budget=params.max_shell_points)
    for i in range(1, h):
        points += enumerate_shell(d, radii[i], budget=params.max_shell_points)
    points += [p for p in enumerate_shell(d, radii[h], budget=params.max_shell_points) if p[0] != x0]

    kept, dropped = _assemble_lines(selected, k, set(points))
    if not kept:
        raise ConstructionError("no witness line survived")

    ph = Pigeonhole(
        r0=r0,
        ball_count=ball,
        shell_count=n_shell,
        total_pairs=math.comb(n_shell, 2),
        class_size=len(chosen),
        distance_classes=4 * m_r,
        pool_pairs=len(pool),
        midpoints=len(mids),
        hyperplane_count=len(selected),
        hyperplane_slots=2 * top + 1,
    )
    witness = ConstructionWitness(m_r, m_ell, radii, kept, x0=x0, pigeonhole=ph)
    return ConstructedSet(points, witness, k, "odd", dropped)


def construct(params: ConstructionParams) -> ConstructedSet:
    return construct_even(params) if params.k % 2 == 0 else construct_odd(params)
