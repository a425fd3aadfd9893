#!/usr/bin/env python3
"""Time the exhaustive search for every n in a range, regardless of criteria.

Criteria-excluded instances make good cross-checks: the search must never
find a tiling the criteria rule out.
"""

import argparse
from dataclasses import dataclass

from sn_tiler.criteria import aggregate
from sn_tiler.perms import Target
from sn_tiler.tiling import search, tile_size


@dataclass
class SearchConfig:
    n_min: int = 3
    n_max: int = 6
    budget: float = 120.0


def run(cfg: SearchConfig) -> int:
    disagreements = 0
    print(f"{'n':>2} {'target':<7} {'|Y|':>5} {'criteria':<9} {'search':<13} {'nodes':>9} {'time':>8}")
    for n in range(cfg.n_min, cfg.n_max + 1):
        for target in (Target.T, Target.T_STAR):
            overall = aggregate(n, target).overall
            cert = search(n, target, time_budget=cfg.budget, max_n=max(n, 7))
            if overall == "excluded" and cert.status == "found":
                disagreements += 1
            size = tile_size(n, target)
            print(
                f"{n:>2} {target.value:<7} {size if size else '-':>5} {overall:<9} {cert.status:<13}"
                f" {cert.nodes_explored:>9} {cert.wall_time:>7.2f}s"
            )
    print(f"disagreements: {disagreements}")
    return disagreements


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--budget", type=float, default=120.0)
    a = ap.parse_args()
    raise SystemExit(1 if run(SearchConfig(a.n_min, a.n_max, a.budget)) else 0)
