#!/usr/bin/env python3
"""Run every registered identity sweep at its default ranges.

Prints one timed line per suite and any counterexample witnesses, then
exits 0 only if all sweeps pass.  Pass suite names to run a subset.
"""

from __future__ import annotations

import argparse
import sys
import time

from barybinom.identities import SUITES

WITNESS_CAP = 10


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("suites", nargs="*", metavar="suite",
                        help=f"subset to run (default: all of {', '.join(SUITES)})")
    args = parser.parse_args(argv)
    unknown = [s for s in args.suites if s not in SUITES]
    if unknown:
        parser.error(f"unknown suite(s): {', '.join(unknown)}")
    names = args.suites or list(SUITES)

    all_passed = True
    for name in names:
        start = time.perf_counter()
        report = SUITES[name].func()
        elapsed = time.perf_counter() - start
        status = "PASS" if report.passed else "FAIL"
        all_passed &= report.passed
        print(
            f"{status} {name:13s} {report.checked_count:8d} checked "
            f"{report.skipped_count:6d} skipped {len(report.failures):4d} failures "
            f"{elapsed:6.2f}s  [{report.swept_domain}]"
        )
        for w in report.failures[:WITNESS_CAP]:
            print(f"     witness {w.inputs}: lhs={w.lhs} rhs={w.rhs}")
        if len(report.failures) > WITNESS_CAP:
            print(f"     ... {len(report.failures) - WITNESS_CAP} more")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
