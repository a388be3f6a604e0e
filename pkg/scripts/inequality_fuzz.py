#!/usr/bin/env python3
"""Seeded fuzz sweep over random polytope pairs: counts Strict vs Equality
verdicts and aborts loudly if a Violation ever appears (it must not).

Usage: python3 scripts/inequality_fuzz.py [--pairs N] [--dim {2,3}] [--seed S]
"""

import argparse
import random
import sys

from convexkit.bodies import random_polytope
from convexkit.inequalities import Verdict, minkowski_check


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=200)
    parser.add_argument("--dim", type=int, default=2, choices=[2, 3])
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    counts = {Verdict.STRICT: 0, Verdict.EQUALITY: 0}
    for i in range(args.pairs):
        first = random_polytope(args.dim, args.dim + 3, rng)
        second = random_polytope(args.dim, args.dim + 3, rng)
        report = minkowski_check(first, second)
        if report.verdict is Verdict.VIOLATION:
            print("VIOLATION -- this is an implementation bug", file=sys.stderr)
            print("first:", first.vertices, file=sys.stderr)
            print("second:", second.vertices, file=sys.stderr)
            sys.exit(4)
        counts[report.verdict] += 1
    print(f"{args.pairs} pairs in dimension {args.dim} (seed {args.seed}):")
    print(f"  Strict:   {counts[Verdict.STRICT]}")
    print(f"  Equality: {counts[Verdict.EQUALITY]}")


if __name__ == "__main__":
    main()
