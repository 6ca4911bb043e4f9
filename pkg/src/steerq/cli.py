"""Command-line front end.

Subcommands: simulate, eval, eval-state, threshold, sweep, tables.
Angles are given in degrees on the command line and converted to radians
internally.  Exit codes: 0 success, 2 input validation, 3 numeric-domain
error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import criteria, expio

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def _parse_q_list(text: str) -> tuple[float, ...]:
    try:
        qs = tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"could not parse q list {text!r}")
    if not qs:
        raise ValueError("q list is empty")
    for q in qs:
        if not 0.0 < q <= criteria.Q_MAX:
            raise ValueError(f"q={q:g} outside (0, {criteria.Q_MAX:g}]")
    return qs


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steerq",
        description="Steering detection on two-qubit Werner-like states: "
                    "generalized entropic criterion (SCG) and linear criterion (LSC).",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sim = sub.add_parser("simulate", help="simulate coincidence counts and write a CSV")
    sim.add_argument("--theta", type=float, required=True, help="state angle in degrees [0, 45]")
    sim.add_argument("--chi", type=float, required=True, help="mixing weight in [0, 1]")
    sim.add_argument("--shots", type=int, default=100_000,
                     help="mean total counts per setting (default 100000)")
    sim.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    sim.add_argument("--out", required=True, help="output CSV path")

    ev = sub.add_parser("eval", help="evaluate criteria on a counts CSV")
    ev.add_argument("--counts", required=True, help="input counts CSV path")
    ev.add_argument("--q", default="2,1", help="comma-separated entropic indices (default 2,1)")
    ev.add_argument("--bootstrap", type=int, default=expio.DEFAULT_BOOTSTRAP,
                    help="bootstrap resamples for error bars (default 1000)")
    ev.add_argument("--seed", type=int, default=0, help="bootstrap seed (default 0)")

    evs = sub.add_parser("eval-state", help="evaluate criteria analytically on a state")
    evs.add_argument("--theta", type=float, required=True, help="state angle in degrees [0, 45]")
    evs.add_argument("--chi", type=float, required=True, help="mixing weight in [0, 1]")
    evs.add_argument("--q", default="2,1", help="comma-separated entropic indices (default 2,1)")

    th = sub.add_parser("threshold", help="solve for the critical mixing weight")
    th.add_argument("--theta", type=float, required=True, help="state angle in degrees [0, 45]")
    th.add_argument("--criterion", choices=("scg", "lsc"), default="scg")
    th.add_argument("--q", type=float, default=2.0, help="entropic index for scg (default 2)")
    th.add_argument("--tol", type=float, default=1e-6, help="bisection tolerance (default 1e-6)")

    sw = sub.add_parser("sweep", help="write analytic criterion curves over chi")
    sw.add_argument("--theta", type=float, required=True, help="state angle in degrees [0, 45]")
    sw.add_argument("--steps", type=int, default=101, help="grid points on [0, 1] (default 101)")
    sw.add_argument("--out", required=True, help="output CSV path")

    tb = sub.add_parser("tables", help="compare analytic predictions to reference data")
    tb.add_argument("--out", default=None, help="optional output path (default stdout)")
    return parser


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _cmd_simulate(args) -> int:
    rec = expio.simulate_record(math.radians(args.theta), args.chi, args.shots, args.seed)
    _write_text(args.out, expio.serialize_counts_csv(rec))
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_eval(args) -> int:
    with open(args.counts, "r", encoding="utf-8") as handle:
        text = handle.read()
    rec = expio.parse_counts_csv(text, label=args.counts)
    report = expio.evaluate_record(rec, qs=_parse_q_list(args.q),
                                   bootstrap=args.bootstrap, seed=args.seed)
    print(expio.report_to_json(report))
    return EXIT_OK


def _cmd_eval_state(args) -> int:
    report = expio.evaluate_state(math.radians(args.theta), args.chi,
                                  qs=_parse_q_list(args.q))
    print(expio.report_to_json(report))
    return EXIT_OK


def _cmd_threshold(args) -> int:
    criterion = criteria.SCG if args.criterion == "scg" else criteria.LSC
    q = args.q if criterion == criteria.SCG else None
    result = criteria.chi_threshold(math.radians(args.theta), criterion, q=q,
                                    tol=args.tol)
    label = f"SCG(q={args.q:g})" if criterion == criteria.SCG else "LSC"
    if result.crossed:
        print(f"{label} threshold at theta={args.theta:g}deg: chi = {result.chi:.6f}")
    else:
        print(f"{label} is not violated on chi in [0, 1] at theta={args.theta:g}deg "
              f"(threshold reported as {result.chi:.1f})")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    rows = expio.sweep_curve(math.radians(args.theta), args.steps)
    _write_text(args.out, expio.curve_to_csv(rows))
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_tables(args) -> int:
    text = expio.comparison_to_text(expio.reproduce_tables())
    if args.out is None:
        print(text, end="")
    else:
        _write_text(args.out, text)
        print(f"wrote {args.out}")
    return EXIT_OK


_HANDLERS = {
    "simulate": _cmd_simulate,
    "eval": _cmd_eval,
    "eval-state": _cmd_eval_state,
    "threshold": _cmd_threshold,
    "sweep": _cmd_sweep,
    "tables": _cmd_tables,
}


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, OSError):
        return EXIT_IO
    if isinstance(exc, ArithmeticError):  # includes SolverError
        return EXIT_NUMERIC
    if isinstance(exc, ValueError):
        return EXIT_INPUT
    raise exc


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.subcommand](args)
    except (OSError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
