#!/usr/bin/env python3
"""Classify every spec in specs/ and print the text reports side by side."""

import sys
from pathlib import Path

from reinhardt import classify_all, load_spec

SPEC_DIR = Path(__file__).resolve().parent.parent / "specs"


def main() -> int:
    for path in sorted(SPEC_DIR.glob("*.json")):
        spec = load_spec(str(path))
        report = classify_all(spec)
        print(f"== {path.stem}  (n={spec.n}, {len(spec.constraints)} constraints)")
        flags = report.flags
        print(f"   bounded={flags['bounded']}  finite_volume={flags['finite_volume']}  "
              f"proper_subset={flags['proper_subset']}")
        for name in ("hinf", "l2", "lp_ak", "ainf", "hinf_k"):
            v = report.verdicts[name]
            extra = ""
            if v.criterion == "axis-approach-witness":
                extra = f"  epsilon={v.evidence['failing_epsilon']}"
            if v.criterion == "product-split":
                extra = f"  m={v.evidence['m']}"
            print(f"   {name:8s} {v.value:15s} {v.criterion}{extra}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
