"""Command-line surface: single coefficients, truncated expansions,
defect tables, partition sets, and the identity sweeps.

Exit codes: 0 success (all sweeps PASS), 1 an identity sweep produced a
counterexample, 2 usage error.  Data goes to stdout, diagnostics to
stderr.  Everything is exact integer arithmetic serialized as decimal
strings; identical invocations produce byte-identical output.  The
environment variable BARYBINOM_WORKERS (default 1) fans verify sweeps
out across processes, one slice per base or prime; reports merge in a
fixed order, so the output does not depend on scheduling.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import identities
from .altdefs import dstar_binom, star_binom
from .bary import Method, bary_binom
from .digits import to_digits
from .identities import IdentityReport, merge_reports
from .partitions import enumerate_partitions, enumerate_restricted
from .series import ExpansionPoint, gf_expand

MAX_WITNESS_LINES = 20


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barybinom",
        description="Exact b-ary binomial coefficients for arbitrary integer entries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binom", help="evaluate one coefficient")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=["std", "star", "dstar"], default="std")
    p.add_argument("--method", choices=["auto", "series", "partition"], default="auto")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(run=cmd_binom)

    p = sub.add_parser("expand", help="truncated expansion of f_{n,b}")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", choices=["zero", "infinity"], required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(run=cmd_expand)

    p = sub.add_parser("table", help="defect matrices")
    p.add_argument("--kind", choices=["table1", "pascal-defect"], required=True)
    p.add_argument("--base", type=int, default=4)
    p.add_argument("--variant", choices=["std", "star", "dstar"], default="star")
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--kmax", type=int, default=19)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("partitions", help="restricted-partition index sets (debug)")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--len", type=int, dest="length")
    p.add_argument("--restrict", type=int, help="positive n whose digits bound the parts from below")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(run=cmd_partitions)

    p = sub.add_parser("verify", help="run identity sweeps")
    p.add_argument(
        "--suite",
        required=True,
        choices=sorted(identities.SUITES) + ["all"],
    )
    p.add_argument("--base", type=int, help="restrict a base-swept suite to one base")
    p.add_argument("--prime", type=int, help="restrict the lucas suite to one prime")
    p.add_argument("--nmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(run=cmd_verify)

    return parser


def cmd_binom(args) -> int:
    if args.variant == "std":
        value = bary_binom(args.n, args.k, args.base, Method(args.method))
    elif args.variant == "star":
        value = star_binom(args.n, args.k, args.base)
    else:
        value = dstar_binom(args.n, args.k, args.base)
    if args.format == "json":
        _emit_json(
            {
                "n": str(args.n),
                "k": str(args.k),
                "base": str(args.base),
                "variant": args.variant,
                "value": str(value),
            }
        )
    else:
        print(value)
    return 0


def cmd_expand(args) -> int:
    if args.order < 1:
        raise ValueError("order must be >= 1")
    point = ExpansionPoint.AT_ZERO if args.at == "zero" else ExpansionPoint.AT_INFINITY
    series = gf_expand(args.n, args.base, point, args.order)
    if args.format == "json":
        for e, c in series.terms():
            _emit_json({"exponent": str(e), "coefficient": str(c)})
    else:
        print("exponent\tcoefficient")
        for e, c in series.terms():
            print(f"{e}\t{c}")
    return 0


def cmd_table(args) -> int:
    if args.kind == "table1":
        matrix = identities.table1_matrix()
    else:
        matrix = identities.pascal_defect_matrix(args.base, args.variant, args.nmax, args.kmax)
    if args.format == "json":
        for i, row in enumerate(matrix.entries, start=1):
            _emit_json({"n": str(i), "values": [str(v) for v in row]})
    else:
        print("\t".join(f"k{j}" for j in range(1, matrix.cols + 1)))
        for row in matrix.entries:
            print("\t".join(str(v) for v in row))
    return 0


def cmd_partitions(args) -> int:
    if args.restrict is not None:
        digits = to_digits(args.restrict, args.base, args.length or 0)
        tuples = enumerate_restricted(args.k, digits)
        length = len(digits)
    else:
        if args.length is None:
            raise ValueError("--len is required without --restrict")
        tuples = enumerate_partitions(args.k, args.base, args.length)
        length = args.length
    if args.format == "json":
        for t in tuples:
            _emit_json({"parts": [str(p) for p in t.parts]})
    else:
        print("\t".join(f"j{l}" for l in range(length - 1, -1, -1)))
        for t in tuples:
            print("\t".join(str(p) for p in t.parts))
    return 0


def cmd_verify(args) -> int:
    names = list(identities.SUITES) if args.suite == "all" else [args.suite]
    workers = int(os.environ.get("BARYBINOM_WORKERS", "1"))
    results: list[tuple[str, IdentityReport]] = []
    for name in names:
        results.append((name, _run_suite(name, args, workers)))
    if args.format == "json":
        for name, report in results:
            _emit_json(_report_json(name, report))
    else:
        print("suite\tswept_domain\tchecked\tskipped\tfailures\tstatus")
        for name, report in results:
            status = "PASS" if report.passed else "FAIL"
            print(
                f"{name}\t{report.swept_domain}\t{report.checked_count}"
                f"\t{report.skipped_count}\t{len(report.failures)}\t{status}"
            )
    for name, report in results:
        for w in report.failures[:MAX_WITNESS_LINES]:
            print(f"{name}: {w.inputs} lhs={w.lhs} rhs={w.rhs}", file=sys.stderr)
        extra = len(report.failures) - MAX_WITNESS_LINES
        if extra > 0:
            print(f"{name}: {extra} further failures not shown", file=sys.stderr)
    return 0 if all(r.passed for _, r in results) else 1


def _run_suite(name: str, args, workers: int) -> IdentityReport:
    spec = identities.SUITES[name]
    values = spec.axis_values
    if spec.axis == "bases" and args.base is not None:
        values = (args.base,)
    if spec.axis == "primes" and args.prime is not None:
        values = (args.prime,)
    extra = {}
    params = inspect.signature(spec.func).parameters
    if args.nmax is not None and "n_max" in params:
        extra["n_max"] = args.nmax
    if args.kmax is not None and "k_max" in params:
        extra["k_max"] = args.kmax
    tasks = [(name, spec.axis, v, extra) for v in values]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_slice, tasks))
    else:
        reports = [_run_slice(t) for t in tasks]
    return merge_reports(reports)


def _run_slice(task) -> IdentityReport:
    name, axis, value, extra = task
    func = identities.SUITES[name].func
    return func(**{axis: (value,)}, **extra)


def _report_json(name: str, report: IdentityReport) -> dict:
    return {
        "suite": name,
        "swept_domain": report.swept_domain,
        "checked": str(report.checked_count),
        "skipped": str(report.skipped_count),
        "status": "PASS" if report.passed else "FAIL",
        "failures": [
            {
                "inputs": [str(v) for v in w.inputs],
                "lhs": str(w.lhs),
                "rhs": str(w.rhs),
            }
            for w in report.failures[:MAX_WITNESS_LINES]
        ],
        "failure_count": str(len(report.failures)),
    }


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


if __name__ == "__main__":
    sys.exit(main())
