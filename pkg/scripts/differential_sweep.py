"""Compare every solver against the exhaustive oracle on seeded random theories.

    python scripts/differential_sweep.py --seed 1 --count 2000 --max-args 10
"""
import argparse
import collections
import time

from bparg import bp_labelling, completions, enumerate_bp_labellings, grounded_labelling, serialize_theory
from bparg.oracle import oracle_report, random_theories

parser = argparse.ArgumentParser()
parser.add_argument("--seed", type=int, default=0)
parser.add_argument("--count", type=int, default=1000)
parser.add_argument("--max-args", type=int, default=10)
args = parser.parse_args()

stats = collections.Counter()
mismatches = 0
start = time.perf_counter()
for t, g in random_theories(args.seed, args.count, args.max_args):
    report = oracle_report(t, cap=args.max_args, graph=g)
    first = grounded_labelling(g)
    bp, diag = bp_labelling(g, first)
    checks = {
        "grounded": first == report.grounded,
        "models": enumerate_bp_labellings(g, first) == report.exact_models,
        "selected": bp == report.selected,
        "completions": completions(g, bp) == report.completions,
    }
    if not all(checks.values()):
        mismatches += 1
        print("MISMATCH", [k for k, ok in checks.items() if not ok])
        print(serialize_theory(t))
    stats["exact" if diag.exact else "approximate"] += 1
    stats[f"models={diag.model_count}"] += 1
    stats["grounding" if report.grounding_exists else "no grounding"] += 1

elapsed = time.perf_counter() - start
print(f"{args.count} theories, {mismatches} mismatches, {elapsed:.1f}s")
for key, n in sorted(stats.items()):
    print(f"  {key:<14} {n}")
