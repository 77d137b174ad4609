#!/usr/bin/env python3
"""Run the addition-formula verification over a parameter grid and print a table.

Examples:
    python3 scripts/verify_grid.py
    python3 scripts/verify_grid.py --alphas 1 2 3 4 --lmax 2 --mmax 2 --jobs 4
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from qdisk.tensor import verify_addition


def run_case(case):
    l, m, alpha, variant = case
    return verify_addition(l, m, alpha, variant)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alphas", type=int, nargs="+", default=[1, 2, 3, 4])
    parser.add_argument("--lmax", type=int, default=2)
    parser.add_argument("--mmax", type=int, default=2)
    parser.add_argument("--variant", choices=("final", "precursor", "both"),
                        default="both")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    variants = ("final", "precursor") if args.variant == "both" else (args.variant,)
    cases = [(l, m, alpha, variant)
             for alpha in args.alphas
             for l in range(args.lmax + 1)
             for m in range(args.mmax + 1)
             for variant in variants]

    start = time.monotonic()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(run_case, cases))
    else:
        verdicts = [run_case(case) for case in cases]
    elapsed = time.monotonic() - start

    header = f"{'alpha':>5} {'l':>2} {'m':>2} {'variant':<9} {'status':<6} {'lhs':>5} {'rhs':>5} {'ms':>6}"
    print(header)
    print("-" * len(header))
    for v in verdicts:
        status = "pass" if v.passed else "FAIL"
        print(f"{v.alpha:>5} {v.l:>2} {v.m:>2} {v.variant:<9} {status:<6}"
              f" {v.lhs_terms:>5} {v.rhs_terms:>5} {v.millis:>6}")
    passed = sum(1 for v in verdicts if v.passed)
    print(f"\n{passed}/{len(verdicts)} cases passed in {elapsed:.1f}s")
    return 0 if passed == len(verdicts) else 1


if __name__ == "__main__":
    sys.exit(main())
