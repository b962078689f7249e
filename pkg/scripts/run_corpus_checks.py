#!/usr/bin/env python3
"""Execute every `.ezd` script in the corpus and summarize check outcomes.

Usage: python3 scripts/run_corpus_checks.py [corpus_dir]
"""

import sys
from pathlib import Path

from ezdlab import dsl
from ezdlab.groebner import InfiniteDimensionalError, NonLocalError


def main():
    directory = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "corpus"
    )
    failures = 0
    for path in sorted(directory.glob("*.ezd")):
        script = dsl.parse_script(path.read_text())
        try:
            _env, results = dsl.run_script(script)
        except (InfiniteDimensionalError, NonLocalError) as exc:
            print(f"skip          {path.name}: {exc}")
            continue
        for r in results:
            note = f"  [{r.witness}]" if r.witness else ""
            print(f"{r.status:<13} {path.name}: {r.id}{note}")
            failures += r.status == "fail"
    print(f"\n{failures} failing check(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
