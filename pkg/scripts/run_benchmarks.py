"""Run every benchmark experiment and write one CSV per experiment.

    python scripts/run_benchmarks.py --out results/ --reps 5 --warmup 3

Prints the headline ratios after each experiment (growth n=120 vs n=60 for
matching, memo speedups, append vs full recheck).
"""

from __future__ import annotations

import argparse
import os
import time
from pathlib import Path

from invlex import bench


def _by(records, variant):
    return {r.n: r.mean_ns for r in records if r.variant == variant}


def summarize(name: str, records) -> str:
    if name == "regex-comment":
        naive, zipper, memo = _by(records, "naive"), _by(records, "zipper"), _by(records, "zipper-memo")
        top = max(zipper)
        half = min(zipper, key=lambda n: abs(n - top / 2))
        return (
            f"naive {top}/{half}: {naive[top] / naive[half]:.2f}  zipper {top}/{half}: {zipper[top] / zipper[half]:.2f}  "
            f"zipper R2 {bench.linear_r2(list(zipper), list(zipper.values())):.3f}  memo speedup {zipper[top] / memo[top]:.1f}x"
        )
    pairs = {"json-lex": ("lex", "lex-memo"), "rpath-check": ("rpath", "rpath-memo"), "pt-recombine": ("full-recheck", "pt-append")}
    slow, fast = pairs[name]
    a, b = _by(records, slow), _by(records, fast)
    return "  ".join(f"n={n}: {a[n] / b[n]:.1f}x" for n in sorted(a))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--out", type=Path, default=Path("results"))
    p.add_argument("--experiments", nargs="*", default=list(bench.EXPERIMENTS))
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--warmup", type=int, default=3)
    p.add_argument("--seed", type=int, default=int(os.environ.get("INVLEX_SEED", bench.DEFAULT_SEED)))
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in args.experiments:
        config = bench.BenchConfig(name, reps=args.reps, warmup=args.warmup, seed=args.seed)
        t0 = time.perf_counter()
        records = bench.run(config)
        path = args.out / f"{name}.csv"
        with open(path, "w", newline="") as f:
            bench.write_csv(records, f, config.seed)
        print(f"{name:14s} {time.perf_counter() - t0:6.1f}s  {summarize(name, records)}  -> {path}")


if __name__ == "__main__":
    main()
