"""Command-line interface.

Subcommands::

    standardize  convert a raw channel JSON document to standard form
    feasible     test a power vector against the allowable power set
    region       achievable-region halfspaces (and vertices for K <= 2)
    maxsum       sum-rate-optimal power allocation
    jam          two-user cooperative jamming optimum
    sweep        CSV sweeps: per-grid-point region bounds, or the jamming
                 objective as a function of the jamming power

All JSON output is deterministic (two-space indent, insertion order) and
floats use their shortest round-trip representation.  Exit status 1 marks
invalid input, 2 an internal consistency failure (e.g. a ``--verify``
cross-check disagreeing beyond tolerance).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .channel import channel_to_json, load_channel
from .errors import InternalError, ValidationError
from .jamming import (
    BRANCH_NO_JAM,
    CASE_DEGENERATE,
    TwoUserChannel,
    jam_objective,
    solve_jamming,
)
from .oracle import GridSpec, grid_max_jamming, grid_max_sum_rate
from .region import build_region, is_feasible, union_sweep
from .sumrate import max_sum_rate

#: --verify tolerances: the closed forms must match the oracles this well.
MAXSUM_VERIFY_TOL = 1e-9
JAM_VERIFY_TOL = 1e-5


def _parse_powers(text):
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(
            f"power: expected comma-separated numbers (got {text!r})") from None


def _parse_float(name, text):
    try:
        return float(text)
    except ValueError:
        raise ValidationError(f"{name}: expected a number (got {text!r})") from None


def _fmt(value) -> str:
    return repr(float(value))


def _csv(header, rows) -> str:
    lines = [header]
    lines += [",".join(_fmt(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _json_doc(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _load(args):
    ch = load_channel(args.channel)
    if args.unit is not None and args.unit != ch.rate_unit:
        ch = replace(ch, rate_unit=args.unit)
    return ch


def _cmd_standardize(args):
    return _json_doc(channel_to_json(_load(args)))


def _cmd_feasible(args):
    ch = _load(args)
    ok, witness = is_feasible(_parse_powers(args.power), ch)
    doc = {"feasible": ok, "rate_unit": ch.rate_unit}
    doc["witness"] = None if witness is None else {
        "kind": witness.kind,
        "users": [k + 1 for k in witness.users],
    }
    return _json_doc(doc)


def _cmd_region(args):
    ch = _load(args)
    powers = _parse_powers(args.power) if args.power else ch.p_max
    region = build_region(powers, ch)
    if args.format == "json":
        return _json_doc(region.to_json_dict())
    if ch.num_users > 2 or region.vertices is None:
        raise ValidationError(
            "format: CSV vertex output is only available for 1- or 2-user "
            "channels")
    header = ",".join(f"R{k + 1}" for k in range(ch.num_users))
    return _csv(header, region.vertices)


def _cmd_maxsum(args):
    ch = _load(args)
    sol = max_sum_rate(ch)
    doc = sol.to_json_dict()
    if args.verify:
        steps = args.grid_steps or (11 if ch.num_users <= 3 else 6)
        powers, rate = grid_max_sum_rate(ch, GridSpec(steps_per_axis=steps))
        gap = sol.sum_rate - rate
        doc["oracle"] = {"p_star": list(powers), "sum_rate": rate, "gap": gap}
        if abs(gap) > MAXSUM_VERIFY_TOL:
            raise InternalError(
                f"sum-rate optimizer and grid oracle disagree by {gap} "
                f"(tolerance {MAXSUM_VERIFY_TOL}); oracle found "
                f"p_star={list(powers)}")
    return _json_doc(doc)


def _cmd_jam(args):
    ch = _load(args)
    two, perm = TwoUserChannel.from_standard(ch)
    sol = solve_jamming(two, ch.rate_unit)
    doc = sol.to_json_dict(permutation=perm)
    if args.verify:
        if sol.case_tag == CASE_DEGENERATE and sol.branch == BRANCH_NO_JAM:
            # No jammer: the solution came from the sum-rate optimizer, so
            # verify against the matching oracle.
            powers, rate = grid_max_sum_rate(ch, GridSpec(steps_per_axis=11))
            gap = sol.secrecy_rate - rate
            doc["oracle"] = {
                "kind": "sum_rate", "p_star": list(powers),
                "rate": rate, "gap": gap,
            }
            if abs(gap) > MAXSUM_VERIFY_TOL:
                raise InternalError(
                    f"jamming dispatch and sum-rate oracle disagree by {gap} "
                    f"(tolerance {MAXSUM_VERIFY_TOL})")
        else:
            step = args.p2_step
            steps = max(2, int(two.p2_max / step) + 1) if two.p2_max > 0 else 2
            p1, p2, rate = grid_max_jamming(
                two, GridSpec(steps_per_axis=steps), ch.rate_unit)
            gap = sol.secrecy_rate - rate
            doc["oracle"] = {
                "kind": "jamming", "powers": [p1, p2], "rate": rate, "gap": gap,
            }
            if abs(gap) > JAM_VERIFY_TOL:
                raise InternalError(
                    f"jamming solver and grid oracle disagree by {gap} "
                    f"(tolerance {JAM_VERIFY_TOL}); oracle found "
                    f"(p1, p2)=({p1}, {p2})")
    return _json_doc(doc)


def _cmd_sweep(args):
    ch = _load(args)
    if args.kind == "region":
        print(
            "# region sweep: bounds at every feasible grid point "
            "(union data), rate_unit=" + ch.rate_unit,
            file=sys.stderr)
        rows = []
        for (p1, p2), region in union_sweep(ch, args.grid_steps):
            rows.append((
                p1, p2,
                region.halfspaces[0][1],
                region.halfspaces[1][1],
                region.halfspaces[2][1]))
        return _csv("P1,P2,b1,b2,b12", rows)

    two, _ = TwoUserChannel.from_standard(ch)
    p1 = two.p1_max if args.p1 is None else float(args.p1)
    if p1 < 0:
        raise ValidationError(f"p1: must be >= 0 (got {p1})")
    step = args.p2_step
    if step <= 0:
        raise ValidationError(f"p2-step: must be > 0 (got {step})")
    print(
        f"# jamming sweep: objective vs jamming power at p1={_fmt(p1)}, "
        f"rate_unit={ch.rate_unit}",
        file=sys.stderr)
    count = int(two.p2_max / step + 1e-9) + 1
    rows = []
    for i in range(count):
        p2 = i * step
        rows.append((p2, jam_objective(p1, p2, two, ch.rate_unit)))
    return _csv("p2,objective", rows)


_COMMANDS = {
    "standardize": _cmd_standardize,
    "feasible": _cmd_feasible,
    "region": _cmd_region,
    "maxsum": _cmd_maxsum,
    "jam": _cmd_jam,
    "sweep": _cmd_sweep,
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gmacwt",
        description="Secrecy rate regions, optimal power allocation, and "
                    "cooperative jamming for the Gaussian multiple-access "
                    "wiretap channel.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("channel", help="channel JSON file")
        p.add_argument("--unit", choices=("bits", "nats"), default=None,
                       help="override the document's rate unit")
        p.add_argument("--out", default=None,
                       help="write output here instead of stdout")

    p = sub.add_parser("standardize", help="emit the standard-form channel")
    common(p)

    p = sub.add_parser("feasible", help="test a power vector for feasibility")
    common(p)
    p.add_argument("--power", required=True,
                   help="comma-separated per-user powers, e.g. 10,0")

    p = sub.add_parser("region", help="achievable region at fixed powers")
    common(p)
    p.add_argument("--power", default=None,
                   help="comma-separated per-user powers (default: p_max)")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="csv emits the vertex list (K <= 2 only)")

    p = sub.add_parser("maxsum", help="sum-rate-optimal power allocation")
    common(p)
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the grid oracle")
    p.add_argument("--grid-steps", type=int, default=None,
                   help="oracle grid steps per axis (default: 11 for K <= 3, "
                        "6 otherwise)")

    p = sub.add_parser("jam", help="two-user cooperative jamming optimum")
    common(p)
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the grid oracle")
    p.add_argument("--p2-step", type=float, default=1e-3,
                   help="oracle grid step on the jamming power (default 1e-3)")

    p = sub.add_parser("sweep", help="CSV sweep data for plotting")
    common(p)
    p.add_argument("--kind", choices=("region", "jam"), required=True)
    p.add_argument("--grid-steps", type=int, default=11,
                   help="region sweep: grid steps per power axis")
    p.add_argument("--p2-step", type=float, default=0.1,
                   help="jam sweep: step on the jamming power")
    p.add_argument("--p1", default=None,
                   help="jam sweep: transmit power (default: p1_max)")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload = _COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
