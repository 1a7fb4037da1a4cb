#!/usr/bin/env python3
"""Run the full verification suite over every m for a list of contexts.

Writes one JSON report per (ctx, m) plus a summary to --out.

    python3 scripts/sweep.py --contexts 7,2,3 10,3,3 13,4,3 --kmax 2 --out results/sweep
"""

import argparse
import json
import sys
from pathlib import Path

from richardson_quotient.verify import RunConfig, run_verification
from richardson_quotient.weyl import GrassmannianContext, all_m


def parse_ctx(text):
    n, r, q = (int(x) for x in text.split(","))
    return GrassmannianContext(n, r, q)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--contexts", nargs="+", type=parse_ctx,
                    default=[parse_ctx("7,2,3"), parse_ctx("10,3,3")])
    ap.add_argument("--kmax", type=int, default=2)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--out", type=Path, default=Path("results/sweep"))
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    summary = []
    for ctx in args.contexts:
        for m in all_m(ctx):
            rep = run_verification(RunConfig(ctx, m, kmax=args.kmax, trials=args.trials))
            name = f"verify_{ctx.n}_{ctx.r}_{ctx.q}_m{'-'.join(map(str, m))}.json"
            (args.out / name).write_text(json.dumps(rep.to_json(), indent=2, ensure_ascii=False))
            summary.append({"n": ctx.n, "r": ctx.r, "q": ctx.q, "m": list(m),
                            "overall": "pass" if rep.ok else "fail", **rep.counts})
            print(f"{ctx} m={m}: {'pass' if rep.ok else 'FAIL'} {rep.counts}")
    (args.out / "summary.json").write_text(json.dumps(summary, indent=2))
    return 0 if all(s["overall"] == "pass" for s in summary) else 1


if __name__ == "__main__":
    sys.exit(main())
