#!/usr/bin/env python3
"""Dump the factorization certificate of every degree-one invariant as JSON lines.

    python3 scripts/certificates.py --n 10 --r 3 --m 2,2 > certs.jsonl
"""

import argparse
import json
import sys

from richardson_quotient.deodhar import build_matrix, common_factor, factorization_certificate
from richardson_quotient.tableau import enumerate_A
from richardson_quotient.weyl import GrassmannianContext


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--r", type=int, required=True)
    ap.add_argument("--m", required=True)
    args = ap.parse_args()

    ctx = GrassmannianContext.from_any(n=args.n, r=args.r)
    m = tuple(int(x) for x in args.m.split(","))
    M, F = build_matrix(m, ctx), common_factor(m, ctx)
    for T in enumerate_A(m, ctx):
        cert = factorization_certificate(T, m, ctx, M, F)
        print(json.dumps(cert.to_json()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
