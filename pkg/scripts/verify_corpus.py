#!/usr/bin/env python3
"""Run every property verifier against every gated corpus instance.

One line per (property, instance); nonzero exit if anything fails.

Usage: python3 scripts/verify_corpus.py [--prop ID] [--bound N]
"""

import argparse
import sys
import time

from ezdlab.propcheck import PROP_VERIFIERS, load_corpus


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--prop", default=None, help="restrict to one property id")
    ap.add_argument("--bound", type=int, default=10)
    args = ap.parse_args()
    props = [args.prop] if args.prop else sorted(PROP_VERIFIERS)
    instances = load_corpus(bound=args.bound)
    failures = 0
    for pid in props:
        for inst in instances:
            t0 = time.monotonic()
            result = PROP_VERIFIERS[pid](inst)
            millis = int((time.monotonic() - t0) * 1000)
            note = f"  [{result.witness}]" if result.witness else ""
            print(f"{result.status:<13} {pid}:{inst.name} ({millis} ms){note}")
            failures += result.status == "fail"
    print(f"\n{failures} failure(s) over {len(props)} properties, "
          f"{len(instances)} instances")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
