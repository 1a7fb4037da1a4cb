#!/usr/bin/env python3
"""Compare |A| by enumeration with the binomial product at degrees 1..kmax.

Prints a table and exits nonzero on any disagreement.

    python3 scripts/count_table.py --r 3 --q 3 --kmax 3
"""

import argparse
import sys
import time

from richardson_quotient.tableau import count_A_formula, enumerate_A
from richardson_quotient.weyl import GrassmannianContext, all_m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=2)
    ap.add_argument("--cap", type=int, default=10**5, help="skip degrees predicted above this")
    args = ap.parse_args()

    ctx = GrassmannianContext(args.q * args.r + 1, args.r, args.q)
    bad = 0
    print(f"{ctx}")
    print(f"{'m':<14}{'k':>3}{'formula':>10}{'enumerated':>12}{'seconds':>9}")
    for m in all_m(ctx):
        for k in range(1, args.kmax + 1):
            predicted = count_A_formula(m, ctx, k)
            if predicted > args.cap:
                print(f"{str(m):<14}{k:>3}{predicted:>10}{'skipped':>12}")
                continue
            t0 = time.perf_counter()
            got = len(enumerate_A(m, ctx, k))
            dt = time.perf_counter() - t0
            bad += got != predicted
            print(f"{str(m):<14}{k:>3}{predicted:>10}{got:>12}{dt:>9.3f}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
