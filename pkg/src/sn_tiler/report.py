"""n-range scans, JSON/table reports, and witness files."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import sn_tiler
from sn_tiler.criteria import aggregate
from sn_tiler.errors import InputError
from sn_tiler.partitions import MAX_N
from sn_tiler.perms import Permutation, Target
from sn_tiler.tiling import TilingWitness, search, search_bound

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ScanRow:
    n: int
    target: Target
    verdicts: dict[str, str]
    overall: str  # excluded, open or resolved_by_search
    search_outcome: str | None = None  # found, none or inconclusive
    search_nodes: int | None = None
    witness: tuple[str, ...] | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "target": self.target.value,
            "criteria": dict(self.verdicts),
            "overall": self.overall,
            "search_outcome": self.search_outcome,
            "search_nodes": self.search_nodes,
            "witness": list(self.witness) if self.witness is not None else None,
        }

    @classmethod
    def from_json(cls, d: dict) -> ScanRow:
        return cls(
            n=d["n"],
            target=Target(d["target"]),
            verdicts=dict(d["criteria"]),
            overall=d["overall"],
            search_outcome=d.get("search_outcome"),
            search_nodes=d.get("search_nodes"),
            witness=tuple(d["witness"]) if d.get("witness") is not None else None,
        )


def scan(
    n_min: int,
    n_max: int,
    targets: Iterable[Target] = (Target.T, Target.T_STAR),
    with_search: bool = False,
    time_budget: float | None = None,
    threads: int = 1,
    deterministic: bool = True,
) -> list[ScanRow]:
    if not 3 <= n_min <= n_max <= MAX_N:
        raise InputError(f"scan range must satisfy 3 <= n_min <= n_max <= {MAX_N}, got {n_min}..{n_max}")
    targets = sorted(set(targets), key=lambda t: t.value)
    bound = search_bound()
    rows = []
    for n in range(n_min, n_max + 1):
        for target in targets:
            agg = aggregate(n, target)
            verdicts = {r.name: r.verdict.value for r in agg.reports}
            row = ScanRow(n, target, verdicts, agg.overall)
            if with_search and agg.overall == "open" and n <= bound:
                cert = search(n, target, deterministic=deterministic, time_budget=time_budget, threads=threads)
                overall = "resolved_by_search" if cert.exhaustive else "open"
                witness = tuple(str(y) for y in cert.witness.members) if cert.witness else None
                row = ScanRow(n, target, verdicts, overall, cert.status, cert.nodes_explored, witness)
            rows.append(row)
    return rows


def emit_report(rows: Iterable[ScanRow], format: str = "json") -> str:
    rows = list(rows)
    if format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "tool_version": sn_tiler.__version__,
            "composition": sn_tiler.COMPOSITION_CONVENTION,
            "rows": [r.to_json() for r in rows],
        }
        return json.dumps(doc, indent=2)
    if format == "table":
        return format_table(rows)
    raise InputError(f"unknown report format {format!r}")


def parse_report(text: str) -> list[ScanRow]:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise InputError(f"unsupported report schema {doc.get('schema_version')!r}")
    return [ScanRow.from_json(d) for d in doc["rows"]]


def format_table(rows: list[ScanRow]) -> str:
    names = ["counting", "divisibility", "prime", "zero_eigenvalue", "hoffman"]
    header = ["n", "target", *names, "overall", "search"]
    body = [
        [str(r.n), r.target.value, *(r.verdicts.get(k, "-") for k in names), r.overall, r.search_outcome or "-"]
        for r in rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in [header, *body])


def save_witness(w: TilingWitness, path: str | Path) -> None:
    lines = [f"{w.n} {w.target.label}"] + [str(y) for y in w.members]
    Path(path).write_text("\n".join(lines) + "\n")


def load_witness(path: str | Path) -> TilingWitness:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise InputError("empty witness file, line 1")
    head = lines[0].split()
    if len(head) != 2 or not head[0].isdigit():
        raise InputError(f"expected 'n TARGET' header, line 1: {lines[0]!r}")
    n = int(head[0])
    labels = {t.label: t for t in Target}
    if head[1].upper() not in labels:
        raise InputError(f"unknown target {head[1]!r}, line 1")
    target = labels[head[1].upper()]
    members: list[Permutation] = []
    seen: set[Permutation] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            images = [int(a) for a in line.split()]
        except ValueError:
            raise InputError(f"non-integer entry, line {lineno}") from None
        if len(images) != n:
            raise InputError(f"wrong degree {len(images)} (expected {n}), line {lineno}")
        if sorted(images) != list(range(1, n + 1)):
            raise InputError(f"not a bijection, line {lineno}")
        y = Permutation(tuple(images))
        if y in seen:
            raise InputError(f"duplicate member, line {lineno}")
        seen.add(y)
        members.append(y)
    return TilingWitness(n, target, tuple(members))
