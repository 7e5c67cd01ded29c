"""Command-line frontend: gamma, transform, clock, linac, mismatch.

Exit codes: 0 success, 1 an invariant check failed (implementation
bug), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from relscale.kinematics import Event, RelativeSpeed, gamma, interval, inverse_transform, lorentz_transform
from relscale.linac import DEFAULT_SPEC, LinacSpec, generate_table
from relscale.measurement import MeasurementCondition, diagnose_paradigm
from relscale.scale import ClockGeometry, clock_report

__all__ = ["main", "build_parser"]

INTERVAL_TOL = 1e-9
PRODUCT_TOL = 1e-12
RATIO_TOL = 1e-12

LINAC_HEADER = [
    "kinetic_energy_gev",
    "covarying_scale_size_cm",
    "covarying_length_vcm",
    "real_length_km",
]


@dataclass
class Check:
    name: str
    passed: bool
    error: float


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict
    checks: list[Check] = field(default_factory=list)
    rows: list[dict] | None = None


def _round2(value: float) -> str:
    """Half-up rounding to 2 decimal places, for table display only."""
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _sig(value, digits: int) -> str:
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def _full(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


# ---------------------------------------------------------------------------
# command handlers

def _cmd_gamma(args) -> RunReport:
    speed = RelativeSpeed(args.beta)
    return RunReport(
        command="gamma",
        inputs={"beta": args.beta},
        results={"gamma": gamma(speed).value},
    )


def _cmd_transform(args) -> RunReport:
    speed = RelativeSpeed(args.beta)
    e = Event(x=args.x, y=args.y, z=args.z, t=args.t)
    if args.direction == "lt":
        out = lorentz_transform(e, speed)
        in_suffix, out_suffix = "", "'"
    else:
        out = inverse_transform(e, speed)
        in_suffix, out_suffix = "'", ""
    results = {
        f"x{out_suffix}": out.x,
        f"y{out_suffix}": out.y,
        f"z{out_suffix}": out.z,
        f"t{out_suffix}": out.t,
    }
    checks = []
    if args.check:
        before = interval(e).value
        after = interval(out).value
        results["interval_before"] = before
        results["interval_after"] = after
        err = abs(after - before)
        checks.append(
            Check("interval_invariance", err <= INTERVAL_TOL * (1.0 + abs(before)), err)
        )
    return RunReport(
        command="transform",
        inputs={
            "direction": args.direction,
            f"x{in_suffix}": args.x,
            f"y{in_suffix}": args.y,
            f"z{in_suffix}": args.z,
            f"t{in_suffix}": args.t,
            "beta": args.beta,
        },
        results=results,
        checks=checks,
    )


def _cmd_clock(args) -> RunReport:
    report = clock_report(ClockGeometry(d=args.d, c=args.c), args.v)
    reference = gamma(RelativeSpeed(args.v / args.c)).value
    err = abs(report.ratio.value - reference) / reference
    return RunReport(
        command="clock",
        inputs={"d": args.d, "c": args.c, "v": args.v},
        results={"t1": report.t1, "t2": report.t2, "ratio": report.ratio.value},
        checks=[Check("ratio_equals_gamma", err <= RATIO_TOL, err)],
    )


def _cmd_linac(args) -> RunReport:
    spec = LinacSpec(
        length=args.length,
        rest_energy=args.rest_energy,
        base_scale=args.base_scale,
        energies=tuple(args.energies),
    )
    rows = []
    checks = []
    for row in generate_table(spec):
        cells = {
            "kinetic_energy_gev": row.kinetic_energy,
            "covarying_scale_size_cm": row.covarying_scale_size,
            "covarying_length_vcm": row.covarying_length,
            "real_length_km": row.product_length,
        }
        if args.with_beta:
            cells["beta"] = row.beta
        rows.append(cells)
        err = abs(row.product_length - spec.length) / spec.length
        checks.append(
            Check(f"product_invariance[K={_full(row.kinetic_energy)}]", err <= PRODUCT_TOL, err)
        )
    return RunReport(
        command="linac",
        inputs={
            "length_km": args.length,
            "rest_energy_gev": args.rest_energy,
            "base_scale_cm": args.base_scale,
            "energies_gev": list(args.energies),
        },
        results={},
        checks=checks,
        rows=rows,
    )


def _cmd_mismatch(args) -> RunReport:
    cond = MeasurementCondition.from_text(args.cond)
    verdict = diagnose_paradigm(cond, args.claim, RelativeSpeed(0.0))
    expected = verdict.expected_relation
    return RunReport(
        command="mismatch",
        inputs={"condition": cond.value, "claim": args.claim},
        results={
            "verdict": verdict.classification.value,
            "expected_relation": expected.canonical_form(),
            "equation_id": expected.equation_id,
            "contracted_view_frame": expected.contracted_view_frame,
        },
    )


# ---------------------------------------------------------------------------
# rendering

def _render_plain(report: RunReport, args) -> str:
    lines = []
    for key, value in report.inputs.items():
        lines.append(f"{key} = {_sig(value, args.digits)}")
    for key, value in report.results.items():
        lines.append(f"{key} = {_sig(value, args.digits)}")
    if report.rows is not None:
        lines.append(_render_table_plain(report.rows, args))
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(f"check {check.name}: {status} (error={check.error:.3e})")
    return "\n".join(lines) + "\n"


def _table_cell(value, args) -> str:
    if isinstance(value, float) and not getattr(args, "full_precision", False):
        return _round2(value)
    return _full(value)


def _render_table_plain(rows: list[dict], args) -> str:
    header = list(rows[0]) if rows else LINAC_HEADER
    table = [header] + [[_table_cell(row[col], args) for col in header] for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in table
    )


def _render_csv(report: RunReport, args) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if report.rows is not None:
        header = list(report.rows[0]) if report.rows else LINAC_HEADER
        writer.writerow(header)
        for row in report.rows:
            writer.writerow(_table_cell(row[col], args) for col in header)
    else:
        fields = {**report.inputs, **report.results}
        writer.writerow(fields)
        writer.writerow(_full(value) for value in fields.values())
    return buffer.getvalue()


def _render_json(report: RunReport, args) -> str:
    payload = {
        "command": report.command,
        "inputs": report.inputs,
        "results": report.results,
        "checks": [
            {"name": c.name, "passed": c.passed, "error": c.error} for c in report.checks
        ],
    }
    if report.rows is not None:
        payload["rows"] = report.rows
    return json.dumps(payload, indent=2) + "\n"


_RENDERERS = {"plain": _render_plain, "csv": _render_csv, "json": _render_json}


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain",
        help="output format (default plain)",
    )
    common.add_argument(
        "--digits", type=int, default=10,
        help="significant digits for plain output (default 10)",
    )

    parser = argparse.ArgumentParser(
        prog="relscale",
        description="Special-relativity kinematics and scale-conversion calculator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", parents=[common], help="Lorentz factor for a speed beta")
    p.add_argument("beta", type=float, help="relative speed as a fraction of c, |beta| < 1")
    p.set_defaults(handler=_cmd_gamma)

    p = sub.add_parser(
        "transform", parents=[common],
        help="boost an event with the Lorentz transform (lt) or its inverse (it)",
    )
    p.add_argument("direction", choices=("lt", "it"))
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, default=0.0)
    p.add_argument("--z", type=float, default=0.0)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument(
        "--check", action="store_true",
        help="also report the spacetime interval before and after the boost",
    )
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser(
        "clock", parents=[common],
        help="light-clock periods t1, t2 and their scale-conversion ratio",
    )
    p.add_argument("--d", type=float, required=True, help="emitter-to-mirror distance")
    p.add_argument("--c", type=float, required=True, help="light speed, same length unit as d")
    p.add_argument("--v", type=float, required=True, help="clock speed, 0 <= v < c")
    p.set_defaults(handler=_cmd_clock)

    p = sub.add_parser(
        "linac", parents=[common],
        help="measurements-and-scales table for a fixed-length linear accelerator",
    )
    p.add_argument("--length", type=float, default=DEFAULT_SPEC.length, help="invariant length in km")
    p.add_argument(
        "--rest-energy", type=float, default=DEFAULT_SPEC.rest_energy,
        help="particle rest energy in GeV (default: electron)",
    )
    p.add_argument(
        "--base-scale", type=float, default=DEFAULT_SPEC.base_scale,
        help="invariant measuring-unit size in cm",
    )
    p.add_argument(
        "--energies", type=float, nargs="+", default=list(DEFAULT_SPEC.energies),
        help="kinetic energies in GeV",
    )
    p.add_argument(
        "--full-precision", action="store_true",
        help="emit full double precision instead of the 2-dp table rounding",
    )
    p.add_argument(
        "--with-beta", action="store_true",
        help="append the recovered speed beta as an extra column",
    )
    p.set_defaults(handler=_cmd_linac)

    p = sub.add_parser(
        "mismatch", parents=[common],
        help="check a claimed length/time relation against its measurement condition",
    )
    p.add_argument(
        "--cond", required=True,
        help="measurement condition: one of dT=0, dT'=0, dX=0, dX'=0",
    )
    p.add_argument(
        "--claim", required=True,
        help="claimed relation, e.g. \"dX'=r*dX\" or \"dX'=dX/r\"",
    )
    p.set_defaults(handler=_cmd_mismatch)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.handler(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(_RENDERERS[args.format](report, args))
    return 0 if all(check.passed for check in report.checks) else 1


if __name__ == "__main__":
    sys.exit(main())
