#!/usr/bin/env python3
"""Criteria scan over a range of n, optionally followed by search on open rows.

    python scripts/run_scan.py --n-min 3 --n-max 40 --out scan.json
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from sn_tiler.perms import Target
from sn_tiler.report import emit_report, scan


@dataclass
class ScanConfig:
    n_min: int = 3
    n_max: int = 30
    search: bool = True
    budget: float | None = 60.0
    out: Path | None = None


def run(cfg: ScanConfig) -> None:
    start = time.monotonic()
    rows = scan(cfg.n_min, cfg.n_max, (Target.T, Target.T_STAR), with_search=cfg.search, time_budget=cfg.budget)
    print(emit_report(rows, "table"))

    # which criterion fires first, per target
    first = Counter()
    for r in rows:
        fired = next((k for k, v in r.verdicts.items() if v == "excluded"), "none")
        first[(r.target.value, fired)] += 1
    print()
    for (target, name), k in sorted(first.items()):
        print(f"{target:<7} first exclusion by {name:<16} {k:>4} rows")
    print(f"\n{len(rows)} rows in {time.monotonic() - start:.1f}s")
    if cfg.out:
        cfg.out.write_text(emit_report(rows, "json") + "\n")
        print(f"wrote {cfg.out}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--no-search", action="store_true")
    ap.add_argument("--budget", type=float, default=60.0)
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    run(ScanConfig(a.n_min, a.n_max, not a.no_search, a.budget, a.out))
