"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 solver
non-convergence.  Results go to stdout (or ``--out``) as CSV, or as JSON with
``--format json``; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closed_form as cf
from .allocation import AllocationProblem, allocate
from .errors import CardinalityError, ConvergenceError, DomainError, NumericalError
from .exact_mi import McSpec, QuadratureSpec
from .rates import Method, Snr
from .sweep import accuracy, snr_grid_db, sweep

RATE_HEADER = ["snr_db", "snr_linear", "modulation", "m", "method", "rate_bits_per_sym_per_dim"]
EXIT_USAGE, EXIT_NUMERICAL, EXIT_CONVERGENCE = 2, 3, 4


class UsageError(Exception):
    pass


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _method_list(text: str) -> list[Method]:
    try:
        return [Method(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError:
        choices = ", ".join(m.value for m in Method)
        raise argparse.ArgumentTypeError(f"methods must be among {choices}; got {text!r}")


def _emit(args, tables: list[tuple[list[str], list[list]]], json_obj) -> None:
    if args.format == "json":
        text = json.dumps(json_obj, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for header, rows in tables:
            w.writerow(header)
            for row in rows:
                w.writerow([fmt(v) for v in row])
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _specs(args) -> tuple[QuadratureSpec, McSpec]:
    try:
        return (QuadratureSpec(args.gh_nodes, args.gh_scale),
                McSpec(args.mc_samples, args.seed))
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit_rate_rows(args, rows) -> None:
    with_se = any(r.method is Method.EXACT_MC for r in rows)
    header = RATE_HEADER + (["std_error"] if with_se else [])
    table = []
    records = []
    for r in rows:
        row = [r.snr_db, r.snr_linear, r.modulation.value, r.m, r.method.value, r.rate]
        if with_se:
            row.append(r.std_error)
        table.append(row)
        records.append(dict(zip(header, row)))
    _emit(args, [(header, table)], records)


def cmd_rate(args) -> None:
    quad, mc = _specs(args)
    rows = sweep(args.modulation, [args.m], args.method, [args.snr_db], quad, mc)
    _emit_rate_rows(args, rows)


def cmd_sweep(args) -> None:
    quad, mc = _specs(args)
    try:
        grid = snr_grid_db(args.snr_db_from, args.snr_db_to, args.snr_db_step)
    except ValueError as exc:
        raise UsageError(str(exc))
    rows = sweep(args.modulation, args.m, args.methods, grid, quad, mc)
    _emit_rate_rows(args, rows)


def cmd_accuracy(args) -> None:
    quad, _ = _specs(args)
    try:
        grid = snr_grid_db(args.snr_db_from, args.snr_db_to, args.snr_db_step)
    except ValueError as exc:
        raise UsageError(str(exc))
    rep = accuracy(args.modulation, args.m, grid, args.approx, quad)
    header = ["modulation", "m", "approx", "max_abs_error", "max_rel_entropy_error",
              "max_rel_exact_error", "argmax_abs_snr_db", "argmax_rel_exact_snr_db"]
    row = [rep.modulation.value, rep.m, rep.approx, rep.max_abs, rep.max_rel_entropy,
           rep.max_rel_exact, rep.argmax_abs_db, rep.argmax_rel_exact_db]
    _emit(args, [(header, [row])], dict(zip(header, row)))


def cmd_mmin(args) -> None:
    snr = Snr.from_db(args.snr_db)
    res = cf.mmin(snr, args.modulation)
    header = ["snr_db", "snr_linear", "modulation", "exact_value", "rounded_pow2", "upper_bound"]
    row = [float(args.snr_db), snr.linear, args.modulation, res.exact_value,
           res.rounded_pow2, res.upper_bound]
    _emit(args, [(header, [row])], dict(zip(header, row)))


def cmd_allocate(args) -> None:
    if len(args.gains) != len(args.m):
        raise UsageError(f"--gains has {len(args.gains)} entries but --m has {len(args.m)}")
    try:
        prob = AllocationProblem(tuple(args.gains), tuple(args.m), args.budget, args.tolerance)
    except ValueError as exc:
        raise UsageError(str(exc))
    sol = allocate(prob)
    stream_header = ["stream", "gain", "m", "power", "rate"]
    streams = [[k, float(g), m, float(p), float(r)]
               for k, (g, m, p, r) in enumerate(zip(prob.gains, prob.constellations,
                                                    sol.powers, sol.rates))]
    summary_header = ["objective", "lambda", "kkt_residual"]
    summary = [sol.objective, sol.dual, sol.kkt_residual]
    _emit(
        args,
        [(stream_header, streams), (summary_header, [summary])],
        {"streams": [dict(zip(stream_header, s)) for s in streams],
         "summary": dict(zip(summary_header, summary))},
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmrate",
        description="Achievable information rates of PAM/QAM over AWGN: exact and closed-form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def outputs(p):
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    def numerics(p):
        p.add_argument("--gh-nodes", type=int, default=64, help="Gauss-Hermite nodes (default 64)")
        p.add_argument("--gh-scale", type=float, default=0.5, help="abscissa contraction (default 0.5)")
        p.add_argument("--mc-samples", type=int, default=10**6, help="Monte-Carlo samples (default 1e6)")
        p.add_argument("--seed", type=int, default=0, help="Monte-Carlo seed")

    def modulation(p):
        p.add_argument("--modulation", choices=["pam", "qam"], required=True)

    def snr_range(p, start, stop, step):
        p.add_argument("--snr-db-from", type=float, default=start)
        p.add_argument("--snr-db-to", type=float, default=stop)
        p.add_argument("--snr-db-step", type=float, default=step)

    p = sub.add_parser("rate", help="rate at one SNR point")
    modulation(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--snr-db", type=float, required=True)
    p.add_argument("--method", type=_method_list, required=True,
                   help="comma list of: " + ", ".join(m.value for m in Method))
    numerics(p)
    outputs(p)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("sweep", help="rates over an SNR grid")
    modulation(p)
    p.add_argument("--m", type=_int_list, required=True, help="comma list of cardinalities")
    p.add_argument("--methods", type=_method_list, default=[Method.EXACT_GH, Method.APPROX_SPHERE])
    snr_range(p, -10.0, 40.0, 0.5)
    numerics(p)
    outputs(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("accuracy", help="worst-case error of an approximation vs exact MI")
    modulation(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--approx", choices=["sphere", "asymptotic"], default="sphere")
    snr_range(p, -10.0, 40.0, 0.25)
    numerics(p)
    outputs(p)
    p.set_defaults(func=cmd_accuracy)

    p = sub.add_parser("mmin", help="minimum cardinality to approach capacity")
    modulation(p)
    p.add_argument("--snr-db", type=float, required=True)
    outputs(p)
    p.set_defaults(func=cmd_mmin)

    p = sub.add_parser("allocate", help="optimal multi-stream power allocation")
    p.add_argument("--gains", type=_float_list, required=True)
    p.add_argument("--m", type=_int_list, required=True)
    p.add_argument("--budget", type=float, required=True)
    p.add_argument("--tolerance", type=float, default=1e-10)
    outputs(p)
    p.set_defaults(func=cmd_allocate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on malformed flags
    try:
        args.func(args)
    except (UsageError, CardinalityError, DomainError) as exc:
        print(f"cmrate {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"cmrate {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ConvergenceError as exc:
        print(f"cmrate {args.command}: solver did not converge: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    return 0


if __name__ == "__main__":
    sys.exit(main())
