#!/usr/bin/env python3
"""Randomized counterexample search over small GF(p) algebras.

Generates random local quotient presentations, finds exact zero-divisor
pairs on them, gates candidate (C, M) configurations through the full set
of hypotheses, and tests whether total reflexivity descends along the
induced quotient.  Prints the deterministic JSON report.

Usage: python3 scripts/run_search.py [--seed N] [--trials N] [--dims N]
"""

import argparse
import json
import sys

from ezdlab.propcheck import SearchConfig, search_counterexamples


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--dims", type=int, default=6)
    ap.add_argument("--p", type=int, default=2, help="field characteristic")
    ap.add_argument("--bound", type=int, default=4)
    args = ap.parse_args()
    report = search_counterexamples(
        SearchConfig(
            seed=args.seed,
            trials=args.trials,
            max_dim=args.dims,
            p=args.p,
            bound=args.bound,
        )
    )
    print(json.dumps(report, sort_keys=True, indent=2))
    return 1 if report["counterexamples"] else 0


if __name__ == "__main__":
    sys.exit(main())
