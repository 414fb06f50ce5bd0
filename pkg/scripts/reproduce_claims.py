#!/usr/bin/env python3
"""
Run every experiment suite and write one JSON report per suite.
"""
import os
import sys
import argparse
import time

# Add the project root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from coverideal_lab.config import DEFAULT_CAPS
from coverideal_lab.parsers import write_json
from coverideal_lab.services import experiment_service as es


def reproduce(out_dir: str, seed: int = 0, jobs: int = 1, progress: bool = True) -> bool:
    """
    Run all suites and write their reports.

    Args:
        out_dir: Directory for the `<experiment>.json` files
        seed: Seed for the random corpora
        jobs: Worker processes for Betti numbers
        progress: Show tqdm progress bars

    Returns:
        True when every row of every suite passed
    """
    os.makedirs(out_dir, exist_ok=True)
    caps = DEFAULT_CAPS.model_copy(update={"jobs": jobs})
    start_time = time.time()
    reports = es.all_suites(caps, seed, progress)
    for report in reports:
        path = os.path.join(out_dir, f"{report.experiment}.json")
        write_json(path, report.model_dump(mode="json"))
        status = "ok" if report.passed else f"{len(report.failures)} FAILED"
        print(f"{report.experiment:<20} {len(report.rows):>5} rows  {status}")
    print(f"Finished in {time.time() - start_time:.1f} seconds, reports in {out_dir}")
    return all(r.passed for r in reports)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Reproduce every claim and write reports")
    parser.add_argument("--out", default="reports", help="Output directory")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--quiet", action="store_true", help="No progress bars")

    args = parser.parse_args()
    ok = reproduce(args.out, args.seed, args.jobs, not args.quiet)
    sys.exit(0 if ok else 1)
