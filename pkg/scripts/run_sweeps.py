"""Run the oracle-equivalence sweeps and write one JSON + CSV report per field.

    python scripts/run_sweeps.py --out results/sweeps --workers 4
"""

import argparse
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from trinomial_pp.sweep import SweepConfig, report_csv, report_json, run_sweep

log = logging.getLogger("run_sweeps")

ALL = ("brute", "h-mu", "prop21", "tzlh", "thm11")


@dataclass
class Plan:
    full_range: tuple[int, ...] = (2, 3, 4)
    base_range: tuple[int, ...] = (5, 6)
    full_oracles: tuple[str, ...] = ALL
    base_oracles: tuple[str, ...] = ("brute", "thm11")
    workers: int = 1
    out: Path = Path("results/sweeps")


def orbit_summary(report: dict) -> dict:
    """Group PP pairs by b in the base field versus outside it."""
    inside = [p for p in report["pairs"] if p["b"].endswith("+0*z")]
    return {"pp": report["summary"]["pp"], "b_in_base_field": len(inside),
            "b_outside_base_field": report["summary"]["pp"] - len(inside)}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Plan.out)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--quick", action="store_true", help="skip q=64")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    plan = Plan(workers=args.workers, out=args.out)
    if args.quick:
        plan.base_range = tuple(n for n in plan.base_range if n < 6)
    plan.out.mkdir(parents=True, exist_ok=True)

    overview = {}
    jobs = [(n, "full", plan.full_oracles) for n in plan.full_range]
    jobs += [(n, "base", plan.base_oracles) for n in plan.base_range]
    for n, b_range, oracles in jobs:
        cfg = SweepConfig(n=n, b_range=b_range, oracles=oracles, workers=plan.workers)
        rep = run_sweep(cfg)
        stem = plan.out / f"q{2**n}_{b_range}"
        stem.with_suffix(".json").write_text(report_json(rep))
        stem.with_suffix(".csv").write_text(report_csv(rep))
        overview[f"q={2**n} {b_range}"] = {**rep["summary"], **orbit_summary(rep),
                                          "seconds": rep["runtime"]["seconds"]}
        log.info("q=%d %s: %s", 2**n, b_range, json.dumps(overview[f"q={2**n} {b_range}"]))
    (plan.out / "overview.json").write_text(json.dumps(overview, indent=2) + "\n")


if __name__ == "__main__":
    main()
