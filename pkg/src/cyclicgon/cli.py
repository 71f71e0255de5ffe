"""Command line front end.

Subcommands expose the area report, the circumradius solver, the regular
sequence and its continuous curve, Monte Carlo verification, and the ratio
maximizer.  Output goes to standard output as JSON (default) or CSV with all
floating point values rendered to 17 significant digits, so identical
invocations produce byte-identical output.  Diagnostics go to standard error.

Exit codes: 0 success, 1 invalid input, 2 a verified claim was breached (the
counterexample is printed), 3 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Iterable, Sequence

from . import analysis, polygon
from .errors import ConvergenceFailure, CyclicgonError, RejectionOverflow

__all__ = ["run", "main"]


class _InputError(Exception):
    """Bad command line input; the message names the offending argument."""


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _json_text(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = ",\n".join(
            f"{pad}  {json.dumps(key)}: {_json_text(item, indent + 1)}"
            for key, item in value.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        inner = ",\n".join(f"{pad}  {_json_text(item, indent + 1)}" for item in value)
        return "[\n" + inner + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError(f"cannot serialize {type(value)!r}")


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        if value and isinstance(value[0], dict):
            # Violation entries: angle components and the ratio last, with
            # entries separated by '|'.
            return "|".join(
                ";".join([_fmt(a) for a in item["angles"]] + [_fmt(item["ratio"])])
                for item in value
            )
        return ";".join(_cell(item) for item in value)
    raise TypeError(f"cannot render {type(value)!r} as a CSV cell")


def _write_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    sys.stdout.write(buffer.getvalue())


def _emit_record(fmt: str, record: dict) -> None:
    if fmt == "json":
        sys.stdout.write(_json_text(record) + "\n")
    else:
        _write_csv(list(record.keys()), [list(record.values())])


def _emit_points(fmt: str, columns: Sequence[str], points: list[dict]) -> None:
    if fmt == "json":
        sys.stdout.write(_json_text({"points": points}) + "\n")
    else:
        _write_csv(columns, [[point[c] for c in columns] for point in points])


def _parse_number(token: str, where: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise _InputError(f"{where}: {token!r} is not a number") from None


def _read_side_values(args: argparse.Namespace) -> list[float]:
    if args.sides is not None:
        tokens = [t.strip() for t in args.sides.split(",")]
        if not any(tokens):
            raise _InputError("--sides: no values given")
        return [
            _parse_number(t, f"--sides entry {i}") for i, t in enumerate(tokens) if t
        ]
    try:
        text = open(args.file, encoding="utf-8").read()
    except OSError as exc:
        raise _InputError(f"--file: {exc}") from None
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line:
            values.append(_parse_number(line, f"--file {args.file} line {lineno}"))
    if not values:
        raise _InputError(f"--file {args.file}: no values found")
    return values


def _cmd_area(args: argparse.Namespace) -> int:
    report = analysis.ratio(polygon.validate_sides(_read_side_values(args)))
    _emit_record(
        args.format,
        {
            "n": report.n,
            "exact": report.exact,
            "approx": report.approx,
            "ratio": report.ratio,
            "rel_error": report.rel_error,
        },
    )
    return 0


def _cmd_radius(args: argparse.Namespace) -> int:
    config = polygon.solve_circumradius(polygon.validate_sides(_read_side_values(args)))
    _emit_record(
        args.format,
        {"radius": config.radius, "center_position": config.center_position.value},
    )
    return 0


def _cmd_regular(args: argparse.Namespace) -> int:
    if not (math.isfinite(args.side) and args.side > 0.0):
        raise _InputError(f"--side must be a positive number, got {args.side!r}")
    point = analysis.regular_ratio(args.n)
    report = analysis.ratio([args.side] * args.n)
    _emit_record(
        args.format,
        {
            "n": point.n,
            "side": args.side,
            "x_n": point.ratio,
            "gap_to_limit": point.gap_to_limit,
            "exact": report.exact,
            "approx": report.approx,
            "ratio": report.ratio,
        },
    )
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    table = analysis.sequence_table(args.n_min, args.n_max)
    points = [
        {"n": p.n, "x_n": p.ratio, "gap_to_limit": p.gap_to_limit} for p in table
    ]
    _emit_points(args.format, ["n", "x_n", "gap_to_limit"], points)
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    if not (math.isfinite(args.start) and args.start > 2.0):
        raise _InputError(f"--from must be a number greater than 2, got {args.start!r}")
    if not (math.isfinite(args.stop) and args.stop >= args.start):
        raise _InputError(f"--to must be at least --from, got {args.stop!r}")
    if not (math.isfinite(args.step) and args.step > 0.0):
        raise _InputError(f"--step must be a positive number, got {args.step!r}")
    count = int(math.floor((args.stop - args.start) / args.step + 1e-9)) + 1
    points = []
    for i in range(count):
        x = args.start + i * args.step
        points.append({"x": x, "ratio": analysis.ratio_curve(x)})
    _emit_points(args.format, ["x", "ratio"], points)
    return 0


def _angle_list(angles: polygon.CentralAngles) -> list[float]:
    return [float(a) for a in angles.values]


def _cmd_verify(args: argparse.Namespace) -> int:
    report = analysis.monte_carlo_verify(
        args.n, args.samples, seed=args.seed, allow_reflex=args.allow_reflex
    )
    violations = [
        {"angles": _angle_list(a), "ratio": r} for a, r in report.upper_violations
    ]
    shortfalls = [
        {"angles": _angle_list(a), "ratio": r} for a, r in report.lower_violations
    ]
    _emit_record(
        args.format,
        {
            "n": report.n,
            "samples": report.samples,
            "seed": report.seed,
            "allow_reflex": report.allow_reflex,
            "skipped": report.skipped,
            "min_ratio": report.min_ratio,
            "max_ratio": report.max_ratio,
            "argmin": _angle_list(report.argmin),
            "argmax": _angle_list(report.argmax),
            "upper_violations": violations,
            "lower_violations": shortfalls,
        },
    )
    if violations or shortfalls:
        worst = (violations + shortfalls)[0]
        print(
            "claim violation: ratio {} is outside [1, pi/e] at angles {}".format(
                _fmt(worst["ratio"]), ",".join(_fmt(a) for a in worst["angles"])
            ),
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_optimize(args: argparse.Namespace) -> int:
    result = analysis.maximize_ratio(args.n, restarts=args.restarts, tol=args.tol)
    _emit_record(
        args.format,
        {
            "n": result.n,
            "restarts_used": result.restarts_used,
            "converged": result.converged,
            "best_ratio": result.best_ratio,
            "best_angles": _angle_list(result.best_angles),
        },
    )
    if not result.converged:
        print(
            f"convergence failure: no restart met tol={_fmt(args.tol)}; "
            "best point reported above",
            file=sys.stderr,
        )
        return 3
    return 0


def _add_side_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--sides", help="comma separated side lengths, e.g. 3,4,5")
    group.add_argument("--file", help="path to a file with one side length per line")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("json", "csv"),
        default="json",
        help="output format (default json)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicgon",
        description="Exact and extended-Heron areas of cyclic polygons, "
        "with tools that probe the accuracy of the approximation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    area = sub.add_parser("area", help="area report for one polygon")
    _add_side_source(area)
    _add_format(area)
    area.set_defaults(handler=_cmd_area)

    radius = sub.add_parser("radius", help="circumradius and center position")
    _add_side_source(radius)
    _add_format(radius)
    radius.set_defaults(handler=_cmd_radius)

    regular = sub.add_parser("regular", help="ratio report for the regular n-gon")
    regular.add_argument("--n", type=int, required=True, help="number of sides")
    regular.add_argument(
        "--side", type=float, default=1.0, help="side length (default 1.0)"
    )
    _add_format(regular)
    regular.set_defaults(handler=_cmd_regular)

    sequence = sub.add_parser(
        "sequence", help="regular-polygon ratio for each n in a range"
    )
    sequence.add_argument("--n-min", type=int, required=True, dest="n_min")
    sequence.add_argument("--n-max", type=int, required=True, dest="n_max")
    _add_format(sequence)
    sequence.set_defaults(handler=_cmd_sequence)

    curve = sub.add_parser(
        "curve", help="continuous ratio curve sampled on a uniform grid"
    )
    curve.add_argument("--from", type=float, required=True, dest="start")
    curve.add_argument("--to", type=float, required=True, dest="stop")
    curve.add_argument(
        "--step", type=float, default=0.01, help="grid spacing (default 0.01)"
    )
    _add_format(curve)
    curve.set_defaults(handler=_cmd_curve)

    verify = sub.add_parser(
        "verify", help="Monte Carlo check that the ratio stays inside [1, pi/e]"
    )
    verify.add_argument("--n", type=int, required=True, help="number of sides")
    verify.add_argument(
        "--samples", type=int, default=100000, help="sample count (default 100000)"
    )
    verify.add_argument("--seed", type=int, default=42, help="seed (default 42)")
    verify.add_argument(
        "--allow-reflex",
        action="store_true",
        help="include center-outside polygons (one reflex central angle)",
    )
    _add_format(verify)
    verify.set_defaults(handler=_cmd_verify)

    optimize = sub.add_parser(
        "optimize", help="search for the angle vector maximizing the ratio"
    )
    optimize.add_argument("--n", type=int, required=True, help="number of sides")
    optimize.add_argument(
        "--restarts", type=int, default=16, help="search restarts (default 16)"
    )
    optimize.add_argument(
        "--tol", type=float, default=1e-10, help="function tolerance (default 1e-10)"
    )
    _add_format(optimize)
    optimize.set_defaults(handler=_cmd_optimize)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return args.handler(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConvergenceFailure, RejectionOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CyclicgonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
