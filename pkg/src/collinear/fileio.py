"""Plain-text readers and writers for point sets and witness certificates.

Point file::

    # optional comments
    d n
    x_1 ... x_d        (n lines)

Witness file: ``key value...`` header lines (``k``, ``d``, ``parity``,
``m_r``, ``m_ell``, ``radii``, optionally ``x0``, then ``pairs N``) followed
by one line per witness pair ``m_r m_ell p_1..p_d q_1..q_d``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .construct import ConstructedSet, ConstructionWitness
from .lattice import Point


class ParseError(ValueError):
    def __init__(self, path: str | Path, lineno: int, msg: str):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.lineno = lineno


def _data_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _ints(path, lineno: int, fields: Sequence[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(path, lineno, f"expected integers, got {' '.join(fields)!r}") from None


def format_points(points: Sequence[Sequence[int]], d: int | None = None, comment: str | None = None) -> str:
    if d is None:
        if not points:
            raise ValueError("dimension required for an empty point set")
        d = len(points[0])
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"{d} {len(points)}")
    out += [" ".join(str(x) for x in p) for p in points]
    return "\n".join(out) + "\n"


def parse_points(text: str, path: str | Path = "<string>") -> tuple[int, list[Point]]:
    lines = iter(_data_lines(text))
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise ParseError(path, 1, "missing 'd n' header") from None
    if len(head) != 2:
        raise ParseError(path, lineno, "header must be 'd n'")
    d, n = _ints(path, lineno, head)
    if d < 1 or n < 0:
        raise ParseError(path, lineno, f"bad header d={d} n={n}")
    points = []
    for lineno, fields in lines:
        if len(points) == n:
            raise ParseError(path, lineno, f"more than the {n} declared points")
        if len(fields) != d:
            raise ParseError(path, lineno, f"expected {d} coordinates, got {len(fields)}")
        points.append(tuple(_ints(path, lineno, fields)))
    if len(points) != n:
        raise ParseError(path, lineno, f"declared {n} points, found {len(points)}")
    return d, points


def write_points(path: str | Path, points: Sequence[Sequence[int]], d: int | None = None, comment: str | None = None) -> None:
    Path(path).write_text(format_points(points, d, comment), encoding="utf-8", newline="\n")


def read_points(path: str | Path) -> tuple[int, list[Point]]:
    return parse_points(Path(path).read_text(encoding="utf-8"), path)


def format_witness(cs: ConstructedSet) -> str:
    w = cs.witness
    out = [
        "# witness pairs: m_r m_ell p_1..p_d q_1..q_d",
        f"k {cs.k}",
        f"d {cs.d}",
        f"parity {cs.parity}",
        f"m_r {w.m_r}",
        f"m_ell {w.m_ell}",
        "radii " + " ".join(str(m) for m in w.radii),
    ]
    if w.x0 is not None:
        out.append(f"x0 {w.x0}")
    out.append(f"pairs {len(w.witness_pairs)}")
    for p, q in w.witness_pairs:
        out.append(" ".join(str(x) for x in (w.m_r, w.m_ell, *p, *q)))
    return "\n".join(out) + "\n"


def parse_witness(text: str, path: str | Path = "<string>") -> tuple[int, int, str, ConstructionWitness]:
    """Returns ``(k, d, parity, witness)``."""
    header: dict[str, list[str]] = {}
    pairs = []
    expected = None
    lineno = 0
    for lineno, fields in _data_lines(text):
        if expected is None:
            key = fields[0]
            if key not in {"k", "d", "parity", "m_r", "m_ell", "radii", "x0", "pairs"}:
                raise ParseError(path, lineno, f"unknown header key {key!r}")
            header[key] = fields[1:]
            if key == "pairs":
                expected = _ints(path, lineno, fields[1:2])[0]
            continue
        if "d" not in header:
            raise ParseError(path, lineno, "header key 'd' must precede the pairs")
        d = int(header["d"][0])
        if len(fields) != 2 + 2 * d:
            raise ParseError(path, lineno, f"expected {2 + 2 * d} fields, got {len(fields)}")
        vals = _ints(path, lineno, fields)
        pairs.append((tuple(vals[2 : 2 + d]), tuple(vals[2 + d :])))
    missing = {"k", "d", "parity", "m_r", "m_ell", "radii", "pairs"} - header.keys()
    if missing:
        raise ParseError(path, lineno, f"missing header keys {sorted(missing)}")
    if len(pairs) != expected:
        raise ParseError(path, lineno, f"declared {expected} pairs, found {len(pairs)}")
    k = int(header["k"][0])
    d = int(header["d"][0])
    x0 = int(header["x0"][0]) if "x0" in header else None
    witness = ConstructionWitness(
        m_r=int(header["m_r"][0]),
        m_ell=int(header["m_ell"][0]),
        radii=[int(x) for x in header["radii"]],
        witness_pairs=pairs,
        x0=x0,
    )
    return k, d, header["parity"][0], witness


def write_witness(path: str | Path, cs: ConstructedSet) -> None:
    Path(path).write_text(format_witness(cs), encoding="utf-8", newline="\n")


def read_witness(path: str | Path) -> tuple[int, int, str, ConstructionWitness]:
    return parse_witness(Path(path).read_text(encoding="utf-8"), path)


def format_census(exact_counts: dict[int, int]) -> str:
    return "".join(f"{k} {v}\n" for k, v in sorted(exact_counts.items()) if v)


def export_points(points: Sequence[Sequence[int]], fmt: str, d: int) -> str:
    if fmt == "txt":
        return format_points(points, d)
    if fmt == "csv":
        head = ",".join(f"x{i + 1}" for i in range(d))
        return head + "\n" + "".join(",".join(str(x) for x in p) + "\n" for p in points)
    if fmt == "json":
        return json.dumps({"d": d, "points": [list(p) for p in points]}, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
