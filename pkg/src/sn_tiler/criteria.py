"""Necessary conditions for T_n or T_n* to tile S_n.

Each criterion either excludes a tiling (with a re-checkable witness in
``detail``) or stays silent. None of them ever proves existence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from sympy import factorint

from sn_tiler.characters import fraction_str, hoffman_report
from sn_tiler.errors import InputError
from sn_tiler.partitions import MAX_N, Partition, content_sum, iter_partitions
from sn_tiler.perms import Target

CRITERIA_ORDER = ("counting", "divisibility", "prime", "zero_eigenvalue", "hoffman")
DEFAULT_BETA = {Target.T: (2, 3, 2), Target.T_STAR: (0, 3, 2)}


class Verdict(str, Enum):
    EXCLUDED = "excluded"
    SILENT = "silent"


@dataclass(frozen=True)
class CriterionReport:
    name: str
    target: Target
    n: int
    verdict: Verdict
    detail: dict = field(default_factory=dict)

    @property
    def excluded(self) -> bool:
        return self.verdict is Verdict.EXCLUDED

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "target": self.target.value,
            "n": self.n,
            "verdict": self.verdict.value,
            "detail": self.detail,
        }


def _verdict(flag: bool) -> Verdict:
    return Verdict.EXCLUDED if flag else Verdict.SILENT


def _check_n(n: int, lo: int, hi: int | None = MAX_N) -> None:
    if n < lo or (hi is not None and n > hi):
        raise InputError(f"n must lie in {lo}..{hi if hi is not None else 'inf'}, got {n}")


def legendre(m: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``m!``."""
    e = 0
    while m:
        m //= p
        e += m
    return e


def divides_factorial_product(d: int, parts: Sequence[int]) -> bool:
    """Whether ``d`` divides ``prod(k! for k in parts)``, via prime multiplicities."""
    return _divides(factorint(d), parts)


def _divides(factors: dict[int, int], parts: Sequence[int]) -> bool:
    return all(sum(legendre(k, p) for k in parts) >= e for p, e in factors.items())


def counting_criterion(n: int, target: Target) -> CriterionReport:
    _check_n(n, 2)
    size = target.size(n)
    fact = math.factorial(n)
    excluded = fact % size != 0
    detail = {"generator_size": size, "group_order": fact}
    if not excluded:
        detail["tile_count"] = fact // size
    return CriterionReport("counting", target, n, _verdict(excluded), detail)


def iter_violators(n: int, target: Target) -> Iterator[Partition]:
    """Qualifying partitions whose factorial product is not divisible by |target|."""
    size = target.size(n)
    factors = factorint(size)
    for lam in iter_partitions(n):
        s = content_sum(lam)
        qualifies = s >= 0 if target is Target.T else s > 0
        if qualifies and not _divides(factors, lam.parts):
            yield lam


def divisibility_criterion(n: int, target: Target, all_violators: bool = False) -> CriterionReport:
    """Factorial divisibility over partitions with nonnegative (T) or positive (T*) content sum."""
    _check_n(n, 3)
    size = target.size(n)
    found = iter_violators(n, target)
    violators = list(found) if all_violators else list(itertools.islice(found, 1))
    detail: dict = {"divisor": size, "strict": target is Target.T_STAR}
    if violators:
        lam = violators[0]
        detail["violator"] = str(lam)
        detail["content_sum"] = content_sum(lam)
        detail["factorial_product"] = math.prod(math.factorial(k) for k in lam.parts)
        if all_violators:
            detail["violators"] = [str(v) for v in violators]
    return CriterionReport("divisibility", target, n, _verdict(bool(violators)), detail)


@dataclass(frozen=True)
class RothausPartition:
    n: int
    p: int
    q: int
    r: int
    lam: Partition
    eq7_value: int


def rothaus_partition(n: int, p: int) -> RothausPartition:
    """Write ``n = (p-1)q + r`` with ``0 <= r <= p-2`` and form ``((p-1)^q, r)``."""
    if p < 2 or n < 1:
        raise InputError(f"need p >= 2 and n >= 1, got n={n}, p={p}")
    if p == 2:
        # p - 1 = 1 forces r = 0
        q, r = n, 0
    else:
        q, r = divmod(n, p - 1)
    parts = (p - 1,) * q + ((r,) if r else ())
    lam = Partition(parts)
    closed = (p - 1) * (p - 1 - q) * q + r * (r - 2 * q - 1)
    direct = sum(x * (x - 2 * i + 1) for i, x in enumerate(parts, start=1))
    if closed != direct:
        raise ArithmeticError(f"closed form {closed} != direct sum {direct} for n={n}, p={p}")
    return RothausPartition(n, p, q, r, lam, closed)


def prime_criterion(n: int) -> CriterionReport:
    """Largest prime ``p | 1 + n(n-1)/2`` with ``(p-1)^2 >= n`` excludes T_n.

    Pure integer arithmetic, so ``n`` has no upper bound here.
    """
    _check_n(n, 3, None)
    size = Target.T.size(n)
    primes = sorted(factorint(size), reverse=True)
    hits = [p for p in primes if (p - 1) ** 2 >= n]
    detail: dict = {"value": size, "prime_factors": sorted(primes)}
    if hits:
        p = hits[0]
        rp = rothaus_partition(n, p)
        detail.update(
            p=p,
            original_threshold=p >= 2 and (p - 2) ** 2 >= n,
            partition=str(rp.lam),
            eq7_value=rp.eq7_value,
        )
    return CriterionReport("prime", Target.T, n, _verdict(bool(hits)), detail)


def zero_eigenvalue_criterion(n: int, target: Target) -> CriterionReport:
    """Exclude when 0 is not an eigenvalue of Cay(S_n, target).

    Eigenvalues are ``1 + content_sum`` for T_n and ``content_sum`` for T_n*.
    """
    _check_n(n, 3)
    needed = -1 if target is Target.T else 0
    witness = next((lam for lam in iter_partitions(n) if content_sum(lam) == needed), None)
    detail: dict = {"required_content_sum": needed}
    if witness is not None:
        detail["witness"] = str(witness)
    return CriterionReport("zero_eigenvalue", target, n, _verdict(witness is None), detail)


def hoffman_criterion(n: int, target: Target, beta: Sequence | None = None) -> CriterionReport:
    """Exclude when the weighted Hoffman ratio is below ``1/|target|``."""
    _check_n(n, 3)
    beta = DEFAULT_BETA[target] if beta is None else beta
    rep = hoffman_report(n, beta)
    needed = Fraction(1, target.size(n))
    detail = {
        "beta": [fraction_str(b) for b in rep.beta],
        "ell_min": fraction_str(rep.ell_min),
        "argmin": [str(lam) for lam in rep.argmin],
        "weighted_degree": fraction_str(rep.weighted_degree),
        "ratio_bound": fraction_str(rep.ratio_bound),
        "required_density": fraction_str(needed),
    }
    return CriterionReport("hoffman", target, n, _verdict(rep.ratio_bound < needed), detail)


@dataclass(frozen=True)
class Aggregate:
    n: int
    target: Target
    reports: tuple[CriterionReport, ...]

    @property
    def overall(self) -> str:
        return "excluded" if any(r.excluded for r in self.reports) else "open"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "target": self.target.value,
            "criteria": [r.to_json() for r in self.reports],
            "overall": self.overall,
        }


def aggregate(
    n: int, target: Target, beta: Sequence | None = None, all_violators: bool = False
) -> Aggregate:
    _check_n(n, 3)
    reports = [counting_criterion(n, target), divisibility_criterion(n, target, all_violators)]
    if target is Target.T:
        reports.append(prime_criterion(n))
    reports.append(zero_eigenvalue_criterion(n, target))
    reports.append(hoffman_criterion(n, target, beta))
    return Aggregate(n, target, tuple(reports))
