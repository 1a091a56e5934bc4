#!/usr/bin/env python3
"""Run the full certification suite and write one JSON report per check.

Equivalent to `cstk verify all --out <dir>` plus a compact console table;
kept as a script so a certification run is one command from a checkout.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from cstk import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports", help="directory for the JSON reports")
    parser.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    reports = verify.run_suite("all", seed=args.seed, jobs=args.jobs)
    for rep in reports:
        (outdir / f"{rep.check_name}.json").write_text(rep.to_json() + "\n")
        print(rep.summary_line())
    comparison = verify.ladder_eigenvalue_comparison()
    (outdir / "ladder_eigenvalue_comparison.json").write_text(json.dumps(comparison, sort_keys=True, indent=2) + "\n")
    n_pass = sum(r.passed for r in reports)
    print(f"\n{n_pass}/{len(reports)} checks passed in {time.perf_counter() - t0:.1f}s; reports in {outdir}/")
    return 0 if n_pass == len(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
