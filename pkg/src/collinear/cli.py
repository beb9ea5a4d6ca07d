"""Command-line driver.

Exit codes: 0 success, 1 bad flags or unreadable input, 2 budget exhausted
or no construction possible, 3 a verification check failed.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import fileio
from .construct import ConstructedSet, ConstructionError, ConstructionParams, construct
from .geometry import DuplicatePointError, census, census_bruteforce
from .lattice import BudgetExceeded, default_budget
from .project import ProjectionError, accepts, project_generic
from .verify import VerificationReport, check_lemma1, check_lemma2, verify_construction

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3

log = logging.getLogger("collinear")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")


def cmd_build(args: argparse.Namespace) -> int:
    if args.k < 4:
        raise UsageError(f"--k must be at least 4, got {args.k}")
    if args.dim < 2:
        raise UsageError(f"--dim must be at least 2, got {args.dim}")
    params = ConstructionParams(args.dim, args.k, args.r0, max_shell_points=args.budget, max_pairs=args.max_pairs)
    try:
        cs = construct(params)
    except (BudgetExceeded, ConstructionError) as exc:
        print(f"build: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    src_census = census(cs.points)
    report = verify_construction(cs, src_census)
    try:
        image, pmap = project_generic(cs.points, seed=args.seed, max_attempts=args.attempts)
    except ProjectionError as exc:
        report.add("projection", False, str(exc))
        image, pmap = None, None
    else:
        report.add("projection.injective", len(set(image)) == len(image), f"{len(image)} image points")
        report.add("projection.census", census(image) == src_census, f"accepted at attempt {pmap.attempts}")
        report.diagnostics.append(f"DIAG projection_matrix {[list(r) for r in pmap.matrix]} seed {args.seed}")

    header = f"d={cs.d} k={cs.k} r0={params.outer_radius} parity={cs.parity}"
    fileio.write_points(out / "points_d.txt", cs.points, cs.d, comment=header)
    if image is not None:
        fileio.write_points(out / "points_2d.txt", image, 2, comment=f"{header} seed={args.seed}")
    fileio.write_witness(out / "witness.txt", cs)
    (out / "report.txt").write_text(report.to_text(), encoding="utf-8", newline="\n")
    _summary(report)
    return EXIT_OK if report.passed else EXIT_VERIFY


def _summary(report: VerificationReport) -> None:
    for c in report.failed():
        print(c.line(), file=sys.stderr)
    status = "all checks passed" if report.passed else f"{len(report.failed())} checks failed"
    print(f"{len(report.checks)} checks, {status}", file=sys.stderr)


def cmd_census(args: argparse.Namespace) -> int:
    _, points = fileio.read_points(args.input)
    fast = census(points)
    if args.oracle and census_bruteforce(points) != fast:
        print("census: brute-force oracle disagrees", file=sys.stderr)
        return EXIT_VERIFY
    _emit(fileio.format_census(fast.exact_counts), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    run = Path(args.run) if args.run else None
    points_path = args.points or (run / "points_d.txt" if run else None)
    witness_path = args.witness or (run / "witness.txt" if run else None)
    if points_path is None or witness_path is None:
        raise UsageError("give a run directory or both --points and --witness")
    _, points = fileio.read_points(points_path)
    k, _, parity, witness = fileio.read_witness(witness_path)
    cs = ConstructedSet(points, witness, k, parity)
    report = verify_construction(cs)
    image_path = args.image or (run / "points_2d.txt" if run and (run / "points_2d.txt").exists() else None)
    if image_path is not None:
        _, image = fileio.read_points(image_path)
        report.add("projection.injective", len(set(image)) == len(image), f"{len(image)} image points")
        report.add("projection.census", len(image) == len(points) and census(image) == census(points))
    _emit(report.to_text(), args.out)
    _summary(report)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_lemmas(args: argparse.Namespace) -> int:
    want1 = args.lemma in ("1", "all")
    want2 = args.lemma in ("2", "all")
    if want2 and args.dmax < 3:
        raise UsageError(f"lemma 2 needs --dmax >= 3, got {args.dmax}")
    report = VerificationReport()
    if want1:
        for d in range(1, args.dmax + 1):
            results = check_lemma1(d, range(d, args.mmax + 1))
            bad = [r.counterexample for r in results if not r.passed]
            report.add(f"lemma1[d={d},{d}<=m<={args.mmax}]", not bad, f"{len(results)} cases", bad[:5] or None)
    if want2:
        report.checks += check_lemma2(range(3, args.dmax + 1), args.mmax, args.nmax)
    _emit(report.to_text(), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_project(args: argparse.Namespace) -> int:
    _, points = fileio.read_points(args.input)
    if args.matrix:
        _, rows = fileio.read_points(args.matrix)
        if len(rows) != 2:
            raise UsageError("a projection matrix file holds exactly 2 rows")
        if not accepts(rows, points):
            print("project: matrix is not generic for this point set", file=sys.stderr)
            return EXIT_VERIFY
        image = [tuple(sum(a * x for a, x in zip(r, p)) for r in rows) for p in points]
    else:
        try:
            image, pmap = project_generic(points, seed=args.seed, bound=args.bound, max_attempts=args.attempts)
        except ProjectionError as exc:
            print(f"project: {exc}", file=sys.stderr)
            return EXIT_VERIFY
        if args.save_matrix:
            fileio.write_points(args.save_matrix, pmap.matrix, comment=f"projection matrix seed={args.seed}")
    _emit(fileio.format_points(image, 2), args.out)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    d, points = fileio.read_points(args.input)
    _emit(fileio.export_points(points, args.format, d), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="collinear", description="Point sets with many k-point lines and no k+1 collinear points.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="run the construction, project it, verify, write artifacts")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r0", type=int, default=None, help="outer radius (default 2**dim)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--budget", type=int, default=None, help="max lattice points per enumeration")
    p.add_argument("--max-pairs", type=int, default=None)
    p.add_argument("--attempts", type=int, default=10)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("census", help="line census of a point file")
    p.add_argument("input")
    p.add_argument("--out")
    p.add_argument("--oracle", action="store_true", help="cross-check with the cubic brute force")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="re-verify a build from its files")
    p.add_argument("run", nargs="?")
    p.add_argument("--points")
    p.add_argument("--witness")
    p.add_argument("--image")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemmas", help="sweep the lattice-counting lemmas")
    p.add_argument("--lemma", choices=["1", "2", "all"], default="all")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--mmax", type=int, default=400)
    p.add_argument("--nmax", type=int, default=10**5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("project", help="generic projection of a point file to the plane")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--attempts", type=int, default=10)
    p.add_argument("--matrix", help="use this 2-row matrix file instead of sampling")
    p.add_argument("--save-matrix")
    p.add_argument("--out")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("export", help="convert a point file")
    p.add_argument("input")
    p.add_argument("--format", choices=["txt", "csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"collinear: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (fileio.ParseError, DuplicatePointError, FileNotFoundError) as exc:
        print(f"collinear: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"collinear: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
