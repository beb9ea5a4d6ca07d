"""Validators for the lattice-counting lemmas and for constructed point sets.

Every check records its outcome instead of raising, so a report always runs
to completion and a failure carries the offending values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from . import lattice
from .construct import ConstructedSet
from .geometry import Census, census, collinear, line_key, rich_lines
from .lattice import Point, dist2, norm2

SLACK = 1e-6


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str = ""
    counterexample: Any = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"CHECK {self.name} {status} {self.details}".rstrip()
        if not self.passed and self.counterexample is not None:
            text += f" counterexample={self.counterexample}"
        return text


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, name: str, passed: bool, details: str = "", counterexample: Any = None) -> CheckResult:
        result = CheckResult(name, bool(passed), details, counterexample)
        self.checks.append(result)
        return result

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        lines += self.diagnostics
        return "\n".join(lines) + "\n"


# -- lemmas --------------------------------------------------------------------


def check_lemma1(d: int, m_list: Iterable[int]) -> list[CheckResult]:
    """Cube-packing sandwich V(r - sqrt(d)/2) <= N(B_d(r)) <= V(r + sqrt(d)/2)."""
    out = []
    half_diag = math.sqrt(d) / 2
    for m in m_list:
        if m < d:
            raise ValueError(f"lemma 1 needs r >= sqrt(d), got m={m} < d={d}")
        r = math.sqrt(m)
        n = lattice.count_ball(d, m)
        lo = lattice.volume_ball(d, r - half_diag)
        hi = lattice.volume_ball(d, r + half_diag)
        ok = lo * (1 - SLACK) <= n <= hi * (1 + SLACK)
        out.append(
            CheckResult(
                f"lemma1[d={d},m={m}]",
                ok,
                f"{lo:.6g} <= {n} <= {hi:.6g}",
                None if ok else {"d": d, "m": m, "lower": lo, "count": n, "upper": hi},
            )
        )
    return out


def count_shell_by_coordinate(d: int, m: int, _memo: dict | None = None) -> int:
    """Shell count by peeling one coordinate at a time; independent of the two-square route."""
    memo = {} if _memo is None else _memo

    def go(dim: int, rest: int) -> int:
        if dim == 0:
            return 1 if rest == 0 else 0
        key = (dim, rest)
        if key not in memo:
            top = math.isqrt(rest)
            memo[key] = go(dim - 1, rest) + 2 * sum(go(dim - 1, rest - x * x) for x in range(1, top + 1))
        return memo[key]

    return go(d, m)


def check_lemma2(d_list: Iterable[int], m_max: int, n_max: int | None = None) -> list[CheckResult]:
    """Explicit form of the sphere-count bound, together with its ingredients.

    (a) r_2(n) <= 4 d(n) for 1 <= n <= n_max
    (b) count_shell(d, m) == sum_s count_shell(d-2, s) r_2(m-s), with the
        left side computed by an independent one-coordinate recursion
    (c) count_shell(d, m) <= 4 d(m) count_ball(d-2, m) for 1 <= m <= m_max
    """
    d_list = list(d_list)
    if any(d < 3 for d in d_list):
        raise ValueError(f"lemma 2 needs d >= 3, got {d_list}")
    n_max = m_max if n_max is None else n_max
    out = []

    top = max(n_max, m_max)
    r2 = lattice.rep_two_squares_table(top)
    dv = lattice.divisor_count_table(top)
    bad = [n for n in range(1, n_max + 1) if r2[n] > 4 * dv[n]]
    tight = sum(1 for n in range(1, n_max + 1) if r2[n] == 4 * dv[n])
    out.append(
        CheckResult(
            f"lemma2.two_squares[n<={n_max}]",
            not bad,
            f"r2(n) <= 4 d(n); tight at {tight} values",
            bad[:10] or None,
        )
    )

    for d in d_list:
        memo: dict = {}
        lower = [lattice.count_shell(d - 2, s) for s in range(m_max + 1)]
        ident_bad = []
        bound_bad = []
        ball_lower = 0
        for m in range(m_max + 1):
            ball_lower += lower[m]
            direct = count_shell_by_coordinate(d, m, memo)
            conv = sum(lower[s] * r2[m - s] for s in range(m + 1))
            if direct != conv or lattice.count_shell(d, m) != direct:
                ident_bad.append((m, direct, conv))
            if m >= 1 and direct > 4 * dv[m] * ball_lower:
                bound_bad.append((m, direct, 4 * dv[m] * ball_lower))
        out.append(
            CheckResult(
                f"lemma2.convolution[d={d},m<={m_max}]",
                not ident_bad,
                "shell count equals two-square convolution",
                ident_bad[:10] or None,
            )
        )
        out.append(
            CheckResult(
                f"lemma2.bound[d={d},m<={m_max}]",
                not bound_bad,
                "N(S_d) <= 4 d(m) N(B_{d-2})",
                bound_bad[:10] or None,
            )
        )
    return out


# -- witness lines -------------------------------------------------------------


def _sort_along_line(points: Sequence[Point]) -> list[Point]:
    p0, p1 = points[0], points[1]
    u = [b - a for a, b in zip(p0, p1)]
    return sorted(points, key=lambda p: sum((x - a) * y for x, a, y in zip(p, p0, u)))


def verify_ap(points: Sequence[Sequence[int]], gap2: int) -> bool:
    """True iff the points are collinear and, in order along the line, equally spaced with squared gap ``gap2``."""
    pts = [tuple(p) for p in points]
    if len(pts) < 2 or len(set(pts)) != len(pts):
        return False
    if not all(collinear(pts[0], pts[1], p) for p in pts[2:]):
        return False
    ordered = _sort_along_line(pts)
    steps = [tuple(b - a for a, b in zip(p, q)) for p, q in zip(ordered, ordered[1:])]
    return all(s == steps[0] for s in steps) and norm2(steps[0]) == gap2


def points_on_line(a: Point, b: Point, members: set[Point], max_norm2: int) -> list[Point]:
    """Members lying on the line through a and b, found by walking its lattice points."""
    key = line_key(a, b)
    u, base = key.direction, key.base
    uu = norm2(u)
    # |base + t u|^2 <= max_norm2 confines t to an interval around the foot of the origin
    centre = -sum(x * y for x, y in zip(base, u)) / uu
    reach = math.sqrt(max_norm2 / uu) + 2
    found = []
    for t in range(math.floor(centre - reach), math.ceil(centre + reach) + 1):
        p = key.point(t)
        if p in members:
            found.append(p)
    return found


def _norm_profile(cs: ConstructedSet) -> list[int]:
    radii = cs.witness.radii
    if cs.parity == "even":
        return radii[::-1] + radii
    return radii[:0:-1] + [radii[0]] + radii[1:]


def verify_construction(cs: ConstructedSet, full_census: Census | None = None) -> VerificationReport:
    rep = VerificationReport()
    w = cs.witness
    k = cs.k
    pts = cs.points
    members = set(pts)
    rep.add("distinct_points", len(members) == len(pts), f"n={len(pts)}")

    rich = rich_lines(pts, k + 1)
    rep.add(
        "gap",
        not rich,
        f"T_{k + 1} = {len(rich)}",
        None if not rich else {"line": rich[0][0], "points": rich[0][1]},
    )

    # sphere radii
    if cs.parity == "even":
        expect = [w.m_r + i * (i - 1) * w.m_ell for i in range(1, k // 2 + 1)]
    else:
        expect = [4 * w.m_r + (i * i - 1) * w.m_ell for i in range(0, (k - 1) // 2 + 1)]
    increasing = all(a < b for a, b in zip(w.radii, w.radii[1:]))
    rep.add("radii", w.radii == expect and increasing, f"{w.radii}", None if w.radii == expect else expect)

    # membership: P is exactly the promised union of shells (and hyperplane pieces)
    rep.add("membership", *_check_membership(cs))

    # witness pairs sit on the chosen shell at the chosen distance
    shell_m = w.m_r if cs.parity == "even" else 4 * w.m_r
    gap_m = w.m_ell if cs.parity == "even" else 4 * w.m_ell
    off = [
        pair
        for pair in w.witness_pairs
        if norm2(pair[0]) != shell_m
        or norm2(pair[1]) != shell_m
        or dist2(*pair) != gap_m
        or (cs.parity == "odd" and (pair[0][0] == pair[1][0] or (pair[0][0] + pair[1][0]) // 2 != w.x0))
    ]
    rep.add("witness_pairs", not off, f"{len(w.witness_pairs)} pairs", off[:3] or None)

    # each witness line: exactly k members, an AP with squared gap l^2, radius profile as designed
    max_norm2 = max(w.radii)
    profile = _norm_profile(cs)
    bad_count, bad_ap, bad_profile, bad_plane = [], [], [], []
    keys = set()
    for p, q in w.witness_pairs:
        keys.add(line_key(p, q))
        on = points_on_line(p, q, members, max_norm2)
        if len(on) != k:
            bad_count.append({"pair": (p, q), "points": len(on)})
            continue
        if not verify_ap(on, w.m_ell):
            bad_ap.append({"pair": (p, q), "line": line_key(p, q)})
            continue
        ordered = _sort_along_line(on)
        norms = [norm2(x) for x in ordered]
        if norms != profile and norms[::-1] != profile:
            bad_profile.append({"pair": (p, q), "norms": norms})
        if cs.parity == "odd":
            in_plane = [x for x in ordered if x[0] == w.x0]
            if in_plane != [ordered[len(ordered) // 2]]:
                bad_plane.append({"pair": (p, q), "in_plane": in_plane})
    rep.add("line_size", not bad_count, f"each witness line holds exactly {k} points", bad_count[:3] or None)
    rep.add("ap", not bad_ap, f"squared gap {w.m_ell}", bad_ap[:3] or None)
    rep.add("radius_profile", not bad_profile, f"{profile}", bad_profile[:3] or None)
    if cs.parity == "odd":
        rep.add("hyperplane", not bad_plane, f"only the midpoint has x1 = {w.x0}", bad_plane[:3] or None)

    c = census(pts) if full_census is None else full_census
    rep.add(
        "t_k",
        len(keys) == len(w.witness_pairs) and c.t(k) >= len(w.witness_pairs),
        f"t_{k} = {c.t(k)} >= {len(w.witness_pairs)} witness lines ({len(keys)} distinct)",
    )

    if w.pigeonhole is not None:
        for name, ok, details in _pigeonhole_checks(cs):
            rep.add(name, ok, details)

    rep.diagnostics = bound_report(cs, census_=c).splitlines()
    ph = w.pigeonhole
    if ph is not None and ph.pool_pairs is not None:
        rep.diagnostics.append(
            f"DIAG distinct_first_coordinate_pairs {ph.pool_pairs} of {ph.total_pairs}"
            f" (at least half: {'yes' if 2 * ph.pool_pairs >= ph.total_pairs else 'no'})"
        )
    return rep


def _check_membership(cs: ConstructedSet) -> tuple[bool, str, Any]:
    w = cs.witness
    d = cs.d
    by_norm: dict[int, list[Point]] = {}
    for p in cs.points:
        by_norm.setdefault(norm2(p), []).append(p)
    expected: dict[int, int] = {}
    problems = []
    if cs.parity == "even":
        for m in w.radii:
            expected[m] = lattice.count_shell(d, m)
    else:
        h = len(w.radii) - 1
        x0 = w.x0
        for m in w.radii[1:h]:
            expected[m] = lattice.count_shell(d, m)
        outer = w.radii[h]
        rest = outer - x0 * x0
        in_plane = lattice.count_shell(d - 1, rest) if rest >= 0 else 0
        expected[outer] = lattice.count_shell(d, outer) - in_plane
        mid_rest = w.radii[0] - x0 * x0
        expected[w.radii[0]] = lattice.count_shell(d - 1, mid_rest) if mid_rest >= 0 else 0
        problems += [p for p in by_norm.get(outer, []) if p[0] == x0]
        problems += [p for p in by_norm.get(w.radii[0], []) if p[0] != x0]
    got = {m: len(v) for m, v in by_norm.items()}
    ok = got == {m: c for m, c in expected.items() if c} and not problems
    return ok, f"{len(cs.points)} points on {len(got)} spheres", None if ok else {"expected": expected, "got": got, "misplaced": problems[:3]}


def _pigeonhole_checks(cs: ConstructedSet) -> list[tuple[str, bool, str]]:
    w = cs.witness
    ph = w.pigeonhole
    d = cs.d
    out = []
    ball = lattice.count_ball(d, ph.r0 * ph.r0)
    shell = lattice.count_shell(d, w.m_r)
    out.append(
        (
            "pigeonhole.shell",
            ball == ph.ball_count and shell == ph.shell_count and shell * ph.r0**2 >= ball - 1,
            f"{shell} * {ph.r0}^2 >= {ball} - 1",
        )
    )
    pairs = math.comb(shell, 2)
    if cs.parity == "even":
        out.append(
            (
                "pigeonhole.distance",
                pairs == ph.total_pairs and ph.class_size * 4 * w.m_r >= pairs,
                f"{ph.class_size} * 4 * {w.m_r} >= {pairs}",
            )
        )
    else:
        out.append(
            (
                "pigeonhole.distance",
                pairs == ph.total_pairs
                and ph.class_size * 32 * w.m_r >= pairs
                and ph.class_size * ph.distance_classes >= ph.pool_pairs,
                f"{ph.class_size} * 2 * 16 * {w.m_r} >= {pairs};"
                f" {ph.class_size} * {ph.distance_classes} >= {ph.pool_pairs}",
            )
        )
        top = math.isqrt(w.radii[0])
        out.append(
            (
                "pigeonhole.hyperplane",
                ph.midpoints == ph.class_size
                and ph.hyperplane_slots == 2 * top + 1
                and ph.hyperplane_count * ph.hyperplane_slots >= ph.midpoints
                and ph.hyperplane_count == len(w.witness_pairs) + cs.dropped_pairs,
                f"{ph.hyperplane_count} * {ph.hyperplane_slots} >= {ph.midpoints}",
            )
        )
    return out


# -- diagnostics ---------------------------------------------------------------


def bound_constants(k: int) -> dict[str, float]:
    return {
        "2log(3k+6)": 2 * math.log2(3 * k + 6),
        "2log(4k+9)": 2 * math.log2(4 * k + 9),
    }


def bound_value(n: int, c: float) -> float | None:
    """n^(2 - c / sqrt(log2 n)); None for n <= 1 where log2 n vanishes."""
    if n <= 1:
        return None
    return n ** (2 - c / math.sqrt(math.log2(n)))


def bound_report(cs: ConstructedSet, image: Sequence[Point] | None = None, census_: Census | None = None) -> str:
    """Non-asserting comparison of t_k against the asymptotic lower bound."""
    pts = cs.points if image is None else image
    c = census_ if census_ is not None else census(pts)
    n = len(pts)
    lines = [
        "DIAG bound report (NON-ASSERTING: desk-scale n is far below the asymptotic threshold)",
        f"DIAG n {n}",
        f"DIAG t_{cs.k} {c.t(cs.k)}",
        f"DIAG witness_lines {len(cs.witness.witness_pairs)}",
    ]
    for label, const in bound_constants(cs.k).items():
        value = bound_value(n, const)
        if value is None:
            lines.append(f"DIAG bound c={label} suppressed (log n = 0)")
        else:
            lines.append(f"DIAG bound c={label}={const:.6f} n^(2-c/sqrt(log n)) {value:.6g}")
    return "\n".join(lines)
