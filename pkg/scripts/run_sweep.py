#!/usr/bin/env python3
"""
Run the theorem oracle and print a summary table.

Usage:
    python scripts/run_sweep.py                      # every theorem, settings ranges
    python scripts/run_sweep.py --n 5 --jobs 4       # every theorem up to S_5
    python scripts/run_sweep.py rectangle w0t --n 6  # selected theorems
"""

import argparse
import logging
import os
import sys

# Add the project root to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from schubert_complexity.config import LOG_FORMAT, get_sweep_config
from schubert_complexity.oracle import list_theorem_names, run_verification

logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
logger = logging.getLogger(__name__)


def print_section(title: str) -> None:
    print("\n" + "=" * 60)
    print(title)
    print("=" * 60)


def main() -> int:
    parser = argparse.ArgumentParser(description="Exhaustive theorem sweep")
    parser.add_argument("theorems", nargs="*", help="Theorem ids (default: all)")
    parser.add_argument("--n", type=int, default=None, help="n_max for every scale")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes")
    parser.add_argument("--reports", action="store_true", help="Write a report for every theorem")
    args = parser.parse_args()

    config = get_sweep_config(n=args.n, jobs=args.jobs, write_reports=args.reports)
    names = args.theorems or list_theorem_names()

    print_section(f"THEOREM SWEEP ({len(names)} theorems, {config.jobs} jobs)")
    failures = 0
    for name in names:
        outcome = run_verification(name, config)
        if not outcome["success"]:
            print(f"❌ {name:20s} {outcome['error']}")
            failures += 1
            continue
        result = outcome["result"]
        if result["passed"]:
            print(f"✅ {name:20s} n <= {result['n_max']}  {result['checked']:8d} checked  {result['seconds']:8.2f}s")
        else:
            print(f"❌ {name:20s} counterexample {result['counterexample']}")
            print(f"   report: {result['report_path']}")
            failures += 1

    print_section("SUMMARY")
    print(f"{len(names) - failures}/{len(names)} passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
