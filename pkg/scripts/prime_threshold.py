#!/usr/bin/env python3
"""Where does the (p-1)^2 >= n threshold beat (p-2)^2 >= n?"""

import argparse
from dataclasses import dataclass

from sn_tiler.criteria import prime_criterion


@dataclass
class ThresholdConfig:
    n_min: int = 3
    n_max: int = 2000


def run(cfg: ThresholdConfig) -> list[int]:
    sharper = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        rep = prime_criterion(n)
        if rep.excluded and not rep.detail["original_threshold"]:
            sharper.append(n)
            print(f"n={n:<6} p={rep.detail['p']:<6} partition={rep.detail['partition']}")
    print(f"{len(sharper)} values of n in {cfg.n_min}..{cfg.n_max}")
    return sharper


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=2000)
    a = ap.parse_args()
    run(ThresholdConfig(a.n_min, a.n_max))
