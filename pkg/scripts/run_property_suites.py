#!/usr/bin/env python3
"""Run every property suite at moderate size and print a summary table."""

import argparse
import sys
import time

from tropstab.fields import FieldSpec
from tropstab import suites


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--scale", type=int, default=100,
                        help="base case count per check")
    args = parser.parse_args()
    seed, k = args.seed, args.scale

    q2 = FieldSpec("Qp", 2)
    f3t = FieldSpec("FpT", 3)
    runs = [
        ("semiring", lambda: suites.run_semiring(seed, count=2 * k)),
        ("stabilizer Q2 n=3",
         lambda: suites.run_stabilizer(q2, 3, seed, matrices=k, points=10,
                                       closure_pairs=k)),
        ("stabilizer F3T n=2",
         lambda: suites.run_stabilizer(f3t, 2, seed, matrices=k, points=10,
                                       closure_pairs=k // 2)),
        ("parahoric n=3", lambda: suites.run_parahoric(q2, 3, seed, count=k)),
        ("sp n=2", lambda: suites.run_sp(q2, 2, seed, count=k)),
        ("fans identity n=4",
         lambda: suites.run_fans("identity", seed, n=4, samples=5 * k,
                                 expected_cones=4)),
        ("fans sp n=2",
         lambda: suites.run_fans("sp", seed, n=2, samples=5 * k,
                                 expected_cones=4)),
        ("hypersurface adjoint p=2",
         lambda: suites.run_hypersurface("schur", 2, seed, n=3, lam=(2, 1, 0),
                                         samples=5 * k)),
        ("schur", lambda: suites.run_schur(seed, inputs=max(1, k // 10))),
        ("boundary n=3", lambda: suites.run_boundary(q2, 3, seed, count=k)),
        ("sp boundary", lambda: suites.run_sp_boundary(q2, seed, count=k)),
    ]

    failed = False
    for name, run in runs:
        start = time.perf_counter()
        report = run()
        elapsed = time.perf_counter() - start
        status = "ok" if report["pass"] else "FAIL"
        cases = sum(c["cases"] for c in report["checks"])
        print(f"{name:28s} {status:4s} {cases:7d} cases {elapsed:6.2f}s")
        if not report["pass"]:
            failed = True
            for check in report["checks"]:
                if not check["pass"]:
                    print(f"  failing check: {check['name']}")
                    print(f"  counterexample: {check['counterexample']}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
