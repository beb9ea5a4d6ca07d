"""Integer points on balls and spheres centred at the origin of Z^d.

Radii are always carried squared (``m = r**2``) so that every membership
test is exact integer arithmetic.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Point = tuple[int, ...]

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "COLLINEAR_BUDGET"


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would produce more items than allowed."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return value


def _check_budget(count: int, budget: int | None, what: str) -> None:
    limit = default_budget() if budget is None else budget
    if count > limit:
        raise BudgetExceeded(f"{what}: {count} items exceeds budget {limit}")


def _check_dims(dim: int, m: int) -> None:
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if m < 0:
        raise ValueError(f"squared radius must be >= 0, got {m}")


def norm2(p: Sequence[int]) -> int:
    return sum(x * x for x in p)


def dist2(p: Sequence[int], q: Sequence[int]) -> int:
    return sum((a - b) * (a - b) for a, b in zip(p, q))


def is_square(n: int) -> bool:
    if n < 0:
        return False
    s = math.isqrt(n)
    return s * s == n


@dataclass(frozen=True)
class ShellSpec:
    """The sphere S_d(sqrt(m)); only lattice points are ever materialized."""

    dim: int
    m: int

    def __post_init__(self) -> None:
        _check_dims(self.dim, self.m)

    def count(self) -> int:
        return count_shell(self.dim, self.m)

    def points(self, budget: int | None = None) -> list[Point]:
        return enumerate_shell(self.dim, self.m, budget=budget)


@dataclass(frozen=True)
class BallSpec:
    """The closed ball B_d(sqrt(m))."""

    dim: int
    m: int

    def __post_init__(self) -> None:
        _check_dims(self.dim, self.m)

    def count(self, budget: int | None = None) -> int:
        return count_ball(self.dim, self.m, budget=budget)


# -- volumes -----------------------------------------------------------------


def unit_ball_volume(dim: int) -> float:
    """pi^(d/2) / Gamma(d/2 + 1), with Gamma evaluated in closed form."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if dim % 2 == 0:
        h = dim // 2
        return math.pi**h / math.factorial(h)
    # Gamma(h + 1/2) = (2h)! sqrt(pi) / (4^h h!) with h = (d + 1) / 2
    h = (dim + 1) // 2
    coeff = (4**h * math.factorial(h)) / math.factorial(2 * h)
    return math.pi ** ((dim - 1) // 2) * coeff


def volume_ball(dim: int, r: float) -> float:
    """Euclidean volume of the d-ball of radius ``r``."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    return r**dim * unit_ball_volume(dim)


# -- two squares and divisors ------------------------------------------------


@lru_cache(maxsize=None)
def rep_two_squares(n: int) -> int:
    """Number of ordered signed pairs (a, b) with a^2 + b^2 = n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    total = 0
    for a in range(-math.isqrt(n), math.isqrt(n) + 1):
        rest = n - a * a
        if is_square(rest):
            total += 1 if rest == 0 else 2
    return total


def divisor_count(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    count = 0
    i = 1
    while i * i <= n:
        if n % i == 0:
            count += 1 if i * i == n else 2
        i += 1
    return count


def rep_two_squares_table(n_max: int) -> list[int]:
    """``table[n] == rep_two_squares(n)`` for 0 <= n <= n_max, by direct sieving."""
    table = [0] * (n_max + 1)
    top = math.isqrt(n_max)
    for a in range(-top, top + 1):
        a2 = a * a
        for b in range(-top, top + 1):
            s = a2 + b * b
            if s <= n_max:
                table[s] += 1
    return table


def divisor_count_table(n_max: int) -> list[int]:
    """``table[n] == divisor_count(n)`` for 1 <= n <= n_max; ``table[0]`` is 0."""
    table = [0] * (n_max + 1)
    for i in range(1, n_max + 1):
        for j in range(i, n_max + 1, i):
            table[j] += 1
    return table


# -- counting ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _shell(dim: int, m: int) -> int:
    if dim == 0:
        return 1 if m == 0 else 0
    if dim == 1:
        if m == 0:
            return 1
        return 2 if is_square(m) else 0
    if dim == 2:
        return rep_two_squares(m)
    # peel off the last two coordinates
    return sum(_shell(dim - 2, s) * rep_two_squares(m - s) for s in range(m + 1))


def count_shell(dim: int, m: int) -> int:
    """Number of lattice points on S_d(sqrt(m)), by two-coordinate convolution.

    Nothing is materialized, so there is no budget check.
    """
    _check_dims(dim, m)
    return _shell(dim, m)


def shell_counts(dim: int, m_max: int) -> list[int]:
    """``[count_shell(dim, s) for s in range(m_max + 1)]``."""
    _check_dims(dim, m_max)
    return [count_shell(dim, s) for s in range(m_max + 1)]


def count_ball(dim: int, m: int, budget: int | None = None) -> int:
    """Number of lattice points x with |x|^2 <= m.

    Counting materializes nothing, so ``budget`` is only enforced when given;
    callers about to enumerate the ball pass theirs.
    """
    _check_dims(dim, m)
    total = sum(shell_counts(dim, m))
    if budget is not None:
        _check_budget(total, budget, f"ball B_{dim}(sqrt({m}))")
    return total


# -- enumeration ---------------------------------------------------------------


def _descend(dim: int, rem: int, prefix: list[int]) -> Iterator[Point]:
    if dim == 1:
        if rem == 0:
            yield (*prefix, 0)
        elif is_square(rem):
            s = math.isqrt(rem)
            yield (*prefix, -s)
            yield (*prefix, s)
        return
    top = math.isqrt(rem)
    for x in range(-top, top + 1):
        rest = rem - x * x
        # prune: the remaining coordinates must hit ``rest`` exactly
        if dim == 2 and not is_square(rest):
            continue
        prefix.append(x)
        yield from _descend(dim - 1, rest, prefix)
        prefix.pop()


def iter_shell(dim: int, m: int) -> Iterator[Point]:
    _check_dims(dim, m)
    yield from _descend(dim, m, [])


def enumerate_shell(dim: int, m: int, budget: int | None = None) -> list[Point]:
    """All lattice points with |x|^2 == m, in lexicographic order."""
    _check_dims(dim, m)
    _check_budget(count_shell(dim, m), budget, f"shell S_{dim}(sqrt({m}))")
    return list(iter_shell(dim, m))


def enumerate_shell_slice(dim: int, m: int, first: int, budget: int | None = None) -> list[Point]:
    """Points of S_d(sqrt(m)) whose first coordinate equals ``first``."""
    _check_dims(dim, m)
    rest = m - first * first
    if rest < 0:
        return []
    if dim == 1:
        return [(first,)] if rest == 0 else []
    _check_budget(count_shell(dim - 1, rest), budget, f"slice of S_{dim}(sqrt({m}))")
    return [(first, *p) for p in iter_shell(dim - 1, rest)]
