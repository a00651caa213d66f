"""Run the adjacency and signless validation campaigns and save per-trial tables.

    python scripts/run_campaigns.py --trials 1000 --seed 0 --out results/
"""

import argparse
import csv
import json
from pathlib import Path

from hyperbounds.campaign import CampaignConfig, record_dict, run_campaign
from hyperbounds.cli import to_json


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("results"))
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for kind in ("adjacency", "signless"):
        cfg = CampaignConfig(kind=kind, n_max=args.n_max, k_values=tuple(args.k),
                             trials=args.trials, seed=args.seed)
        result = run_campaign(cfg, jobs=args.jobs)
        (args.out / f"{kind}_summary.json").write_text(to_json(result.to_dict()))
        rows = [record_dict(r) for r in result.records]
        with open(args.out / f"{kind}_trials.csv", "w", newline="") as f:
            w = csv.DictWriter(f, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
        stats = result.margin_stats()
        print(f"{kind:10s} trials={len(result.records)} skipped={len(result.skipped)} "
              f"violations={len(result.violations)} min_margin={stats['min']:.6g}")


if __name__ == "__main__":
    main()
