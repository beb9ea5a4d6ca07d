"""Brute-force references, deliberately naive."""

from itertools import product


def box_points(d, m):
    """Every lattice point of the cube [-t, t]^d with |x|^2 <= m."""
    t = 0
    while (t + 1) ** 2 <= m:
        t += 1
    return [p for p in product(range(-t, t + 1), repeat=d) if sum(x * x for x in p) <= m]


def box_shell(d, m):
    return [p for p in box_points(d, m) if sum(x * x for x in p) == m]
