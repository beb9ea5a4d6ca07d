"""Generic integer projection Z^d -> Z^2 that keeps the line census intact."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import Census, census, check_distinct
from .lattice import Point


class ProjectionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ProjectionMap:
    matrix: tuple[tuple[int, ...], tuple[int, ...]]
    seed: int | None = None
    attempts: int = 0

    @property
    def dim(self) -> int:
        return len(self.matrix[0])


def apply_map(pmap: ProjectionMap | Sequence[Sequence[int]], p: Sequence[int]) -> Point:
    rows = pmap.matrix if isinstance(pmap, ProjectionMap) else pmap
    out = []
    for row in rows:
        if len(row) != len(p):
            raise ValueError(f"dimension mismatch: map takes {len(row)} coordinates, point has {len(p)}")
        out.append(sum(a * x for a, x in zip(row, p)))
    return tuple(out)


def default_entry_bound(n: int) -> int:
    return max(2 * n * n, 1000)


def accepts(matrix: Sequence[Sequence[int]], points: Sequence[Point], source: Census | None = None) -> bool:
    """True iff the map is injective on ``points`` and preserves their census."""
    image = [apply_map(matrix, p) for p in points]
    if len(set(image)) != len(image):
        return False
    if source is None:
        source = census(points)
    return census(image) == source


def project_generic(
    points: Sequence[Sequence[int]],
    seed: int = 0,
    bound: int | None = None,
    max_attempts: int = 10,
) -> tuple[list[Point], ProjectionMap]:
    """Project onto the plane with the first random integer matrix that is generic for ``points``.

    Matrices are drawn with entries uniform in [-bound, bound] from a
    generator seeded by ``seed``, so the accepted map is reproducible.
    """
    pts = check_distinct(points)
    if not pts:
        raise ValueError("nothing to project")
    d = len(pts[0])
    if d < 2:
        raise ValueError(f"need dimension >= 2, got {d}")
    if bound is None:
        bound = default_entry_bound(len(pts))

    source = census(pts)
    rng = np.random.default_rng(seed)
    best = None
    for attempt in range(1, max_attempts + 1):
        draw = rng.integers(-bound, bound, size=(2, d), endpoint=True)
        matrix = tuple(tuple(int(x) for x in row) for row in draw)
        image = [apply_map(matrix, p) for p in pts]
        distinct = len(set(image))
        if distinct == len(image):
            got = census(image)
            if got == source:
                return image, ProjectionMap(matrix, seed, attempt)
            best = best or f"attempt {attempt}: census {got.exact_counts} != {source.exact_counts}"
        else:
            best = best or f"attempt {attempt}: only {distinct} of {len(image)} image points distinct"
    raise ProjectionError(f"no generic map in {max_attempts} attempts (bound {bound}); first failure {best}")
