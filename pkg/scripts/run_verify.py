"""Run the check suite and optionally save a JSON report.

    python3 scripts/run_verify.py                       # default suite
    python3 scripts/run_verify.py configs/quick.json --report out.json --jobs 4
"""

import argparse
import json
import sys
from pathlib import Path

from cspoly.verify import load_config, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("config", nargs="?", type=Path)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--report", type=Path, help="write all reports as JSON")
    args = ap.parse_args()

    cfg = load_config(args.config)
    cfg.jobs = args.jobs
    cfg.__post_init__()
    reports = run_all(cfg)
    for r in reports:
        print(r.summary())
        for item in r.observed[:3]:
            print(f"    observed {item['instance']}: {item['reason']}")
    if args.report:
        args.report.write_text(json.dumps([r.to_json() for r in reports], indent=1) + "\n")
    total = sum(r.wall_time for r in reports)
    print(f"{sum(r.ok for r in reports)}/{len(reports)} checks passed, {total:.1f}s of check time")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
