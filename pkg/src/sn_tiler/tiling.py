"""Tiling verification, exhaustive exact-cover search, and properties of tiling sets.

A tiling ``(X, Y)`` of S_n is an exact cover of the group by the right
translates ``X*y``. Both T_n and T_n* are closed under conjugation, so any
tiling can be translated to one with ``id`` in ``Y``; the search fixes that
row up front.
"""

from __future__ import annotations

import itertools
import logging
import math
import os
import threading
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from sn_tiler.dlx import DancingLinks, SearchAborted, deadline_checker
from sn_tiler.errors import InputError
from sn_tiler.partitions import Partition
from sn_tiler.perms import (
    Permutation,
    Target,
    compose,
    enumerate_group,
    fixed_points,
    generator_set,
    group_index,
    product_square,
)

log = logging.getLogger(__name__)

DEFAULT_SEARCH_MAX_N = 7
HARD_SEARCH_MAX_N = 8
MAX_SET_PARTITIONS = 200_000


def search_bound() -> int:
    """Search bound, overridable through ``SN_TILER_MAX_N``."""
    raw = os.environ.get("SN_TILER_MAX_N")
    if raw is None:
        return DEFAULT_SEARCH_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"SN_TILER_MAX_N must be an integer, got {raw!r}") from None


def tile_size(n: int, target: Target) -> int | None:
    """Required ``|Y|``, or None when ``|X|`` does not divide ``n!``."""
    q, rem = divmod(math.factorial(n), target.size(n))
    return None if rem else q


@dataclass(frozen=True)
class TilingWitness:
    n: int
    target: Target
    members: tuple[Permutation, ...]

    def __post_init__(self):
        members = tuple(sorted(self.members))
        for y in members:
            if y.n != self.n:
                raise InputError(f"member {y} has degree {y.n}, expected {self.n}")
        if len(set(members)) != len(members):
            raise InputError("duplicate member in witness")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)


class Verification(NamedTuple):
    ok: bool
    diagnostic: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_tiling(w: TilingWitness) -> Verification:
    """Check that every element of S_n is ``x*y`` for exactly one pair."""
    X = sorted(generator_set(w.n, w.target))
    hits: Counter[Permutation] = Counter(compose(x, y) for y in w.members for x in X)
    for g in enumerate_group(w.n, bound=max(w.n, HARD_SEARCH_MAX_N)):
        k = hits[g]
        if k != 1:
            how = "uncovered" if k == 0 else f"covered {k} times"
            return Verification(False, f"element [{g}] = {g.cycle_string()} is {how}")
    return Verification(True)


@dataclass(frozen=True)
class SearchCertificate:
    outcome: str  # "found" or "none"
    witness: TilingWitness | None
    nodes_explored: int
    wall_time: float
    exhaustive: bool
    normalized: bool

    @property
    def status(self) -> str:
        """found, none (exhaustive) or inconclusive."""
        if self.outcome == "found":
            return "found"
        return "none" if self.exhaustive else "inconclusive"

    def to_json(self, include_time: bool = True) -> dict:
        out = {
            "outcome": self.outcome,
            "exhaustive": self.exhaustive,
            "normalized": self.normalized,
            "nodes_explored": self.nodes_explored,
            "witness": [str(y) for y in self.witness.members] if self.witness else None,
        }
        if include_time:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def cover_rows(n: int, target: Target, bound: int = HARD_SEARCH_MAX_N) -> list[list[int]]:
    """Row ``j`` lists the group indices of the translate ``X * g_j``."""
    group = enumerate_group(n, bound)
    index = group_index(n, bound)
    X = [x.images for x in sorted(generator_set(n, target))]
    rows = []
    for y in group:
        yi = y.images
        rows.append(sorted(index[tuple(x[a - 1] for a in yi)] for x in X))
    return rows


def _check_search_n(n: int, max_n: int | None) -> int:
    bound = search_bound() if max_n is None else max_n
    if n < 2 or n > min(bound, HARD_SEARCH_MAX_N):
        raise InputError(f"search needs 2 <= n <= {min(bound, HARD_SEARCH_MAX_N)}, got {n}")
    if n > DEFAULT_SEARCH_MAX_N:
        log.warning("searching S_%d: the cover matrix has %d rows", n, math.factorial(n))
    return bound


def search(
    n: int,
    target: Target,
    deterministic: bool = True,
    time_budget: float | None = None,
    threads: int = 1,
    normalize: bool = True,
    max_n: int | None = None,
) -> SearchCertificate:
    """Look for a tiling ``(target, Y)`` of S_n by exact cover.

    With ``normalize`` the identity is forced into ``Y``. A ``none`` outcome
    with ``exhaustive=True`` proves no tiling exists. Running out of
    ``time_budget`` (seconds) gives ``none`` with ``exhaustive=False``.
    """
    _check_search_n(n, max_n)
    start = time.monotonic()

    def finish(members, nodes, exhaustive):
        witness = None
        if members is not None:
            group = enumerate_group(n, HARD_SEARCH_MAX_N)
            witness = TilingWitness(n, target, tuple(group[j] for j in members))
            check = verify_tiling(witness)
            if not check:
                raise AssertionError(f"exact cover produced an invalid tiling: {check.diagnostic}")
        return SearchCertificate(
            "found" if witness else "none", witness, nodes, time.monotonic() - start, exhaustive, normalize
        )

    if tile_size(n, target) is None:
        return finish(None, 0, True)

    rows = cover_rows(n, target)
    n_cols = len(rows)
    should_stop = deadline_checker(time_budget)

    def fresh(*pre: int) -> DancingLinks:
        dlx = DancingLinks(n_cols, rows)
        for r in pre:
            dlx.preselect(r)
        return dlx

    base = (0,) if normalize else ()
    workers = 1 if deterministic else max(1, threads)
    if workers == 1:
        dlx = fresh(*base)
        try:
            sol = next(dlx.solutions(should_stop), None)
        except SearchAborted:
            return finish(None, dlx.nodes, False)
        return finish(None if sol is None else list(base) + sol, dlx.nodes, True)

    # fan out over the rows of the first branching column
    probe = fresh(*base)
    c = probe.choose_column()
    if c == 0:
        return finish(list(base), 0, True)
    branches = probe.rows_in_column(c - 1)
    found = threading.Event()
    lock = threading.Lock()
    state = {"nodes": len(branches), "solution": None, "aborted": False}

    def stop() -> bool:
        return found.is_set() or (should_stop is not None and should_stop())

    def run(row: int) -> None:
        if found.is_set():
            return
        dlx = fresh(*base, row)
        try:
            sol = next(dlx.solutions(stop), None)
        except SearchAborted:
            sol = None
            with lock:
                state["aborted"] |= not found.is_set()
        with lock:
            state["nodes"] += dlx.nodes
            if sol is not None and state["solution"] is None:
                state["solution"] = list(base) + [row] + sol
                found.set()

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(run, branches))
    if state["solution"] is not None:
        return finish(state["solution"], state["nodes"], True)
    return finish(None, state["nodes"], not state["aborted"])


def sigma_graph_connection(n: int, target: Target) -> frozenset[Permutation]:
    """``X^2`` minus the identity, computed directly from the generators."""
    return product_square(generator_set(n, target)) - {Permutation.identity(n)}


def is_independent(Y: Iterable[Permutation], connection: frozenset[Permutation]) -> bool:
    """No two members are adjacent in ``Cay(S_n, connection)``."""
    Y = list(Y)
    return all(compose(a, b.inverse()) not in connection for a, b in itertools.permutations(Y, 2))


def ordered_set_partitions(n: int, lam: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Tuples of disjoint sorted blocks with sizes ``lam`` covering 1..n."""
    if lam.n != n:
        raise InputError(f"{lam} is not a partition of {n}")

    def rec(remaining: tuple[int, ...], sizes: tuple[int, ...]):
        if not sizes:
            yield ()
            return
        for block in itertools.combinations(remaining, sizes[0]):
            rest = tuple(a for a in remaining if a not in block)
            for tail in rec(rest, sizes[1:]):
                yield (block,) + tail

    yield from rec(tuple(range(1, n + 1)), lam.parts)


def count_ordered_set_partitions(n: int, lam: Partition) -> int:
    if lam.n != n:
        raise InputError(f"{lam} is not a partition of {n}")
    return math.factorial(n) // math.prod(math.factorial(p) for p in lam.parts)


def _apply(y: Permutation, P: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    im = y.images
    return tuple(tuple(sorted(im[a - 1] for a in block)) for block in P)


@dataclass(frozen=True)
class TransitivityReport:
    lam: Partition
    is_transitive: bool
    r: int | None = None
    # two (P, Q, count) triples whose counts differ
    counterexample: tuple | None = None


def is_lambda_transitive(
    Y: Iterable[Permutation], lam: Partition, limit: int = MAX_SET_PARTITIONS
) -> TransitivityReport:
    """Does every shape-``lam`` ordered set partition go to every other in exactly r ways?"""
    Y = list(Y)
    n = lam.n
    for y in Y:
        if y.n != n:
            raise InputError(f"member {y} has degree {y.n}, expected {n}")
    total = count_ordered_set_partitions(n, lam)
    if total > limit:
        raise InputError(f"{total} ordered set partitions of shape {lam} exceed the limit {limit}")
    parts = list(ordered_set_partitions(n, lam))
    ref = None  # (P, Q, count)
    for P in parts:
        counts = Counter(_apply(y, P) for y in Y)
        for Q in parts:
            k = counts.get(Q, 0)
            if ref is None:
                ref = (P, Q, k)
            elif k != ref[2]:
                return TransitivityReport(lam, False, counterexample=(ref, (P, Q, k)))
    r = ref[2]
    if r < 1:
        return TransitivityReport(lam, False, r=None)
    return TransitivityReport(lam, True, r=r)


def transitivity_count(Y: Iterable[Permutation], P, Q) -> int:
    """Number of members sending ``P`` to ``Q`` blockwise."""
    Q = tuple(tuple(sorted(b)) for b in Q)
    return sum(1 for y in Y if _apply(y, P) == Q)


def avoids_intersection(Y: Iterable[Permutation], i: int) -> tuple[bool, tuple[Permutation, Permutation] | None]:
    """True unless two distinct members ``y1, y2`` have ``y1*y2^-1`` fixing exactly ``i`` points.

    An ``i`` outside ``0..n`` is avoided vacuously.
    """
    for a, b in itertools.combinations(list(Y), 2):
        if fixed_points(compose(a, b.inverse())) == i:
            return False, (a, b)
    return True, None
