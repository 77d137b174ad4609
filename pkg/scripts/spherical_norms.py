#!/usr/bin/env python3
"""Tabulate spherical-element norms and check them against the closed form.

For each bidegree (l, m) up to a bound, computes the Haar inner product
<R_lm, R_lm> of the rank-n spherical element with itself and compares it
with the closed-form constant c_{l,m}^(n-2).

Example:
    python3 scripts/spherical_norms.py --n 3 --degmax 3
"""

import argparse
import sys

from qdisk.diskpoly import spherical
from qdisk.haar import inner, norm_const


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2, help="rank (>= 2)")
    parser.add_argument("--degmax", type=int, default=3)
    args = parser.parse_args()
    if args.n < 2:
        parser.error("--n must be at least 2")

    ok = True
    print(f"{'l':>2} {'m':>2}  norm")
    for l in range(args.degmax + 1):
        for m in range(args.degmax + 1):
            s = spherical(l, m, args.n)
            value = inner(s, s)
            match = value == norm_const(l, m, args.n - 2)
            ok = ok and match
            flag = "" if match else "  MISMATCH"
            print(f"{l:>2} {m:>2}  {value}{flag}")
    print("\nall norms match the closed form" if ok else "\nMISMATCHES FOUND")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
