"""Integer partitions, Young diagrams and the dominance order.

Partitions are immutable and stored with parts expanded, e.g. ``(2, 2, 1, 1)``;
the caret shorthand ``"2^2,1^2"`` exists only in :meth:`Partition.parse`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from sn_tiler.errors import InputError

MAX_N = 64


class BoxContent(NamedTuple):
    row: int
    col: int
    content: int


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise InputError("a partition needs at least one part")
        if any(p <= 0 for p in parts):
            raise InputError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"4,2"`` or ``"2^2,1^2"``; whitespace is ignored.

        Parts may be given in any order and are sorted.
        """
        body = re.sub(r"\s+", "", text).strip("()")
        if not body:
            raise InputError(f"empty partition: {text!r}")
        parts: list[int] = []
        for token in body.split(","):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if m is None:
                raise InputError(f"bad partition token {token!r} in {text!r}")
            part, mult = int(m.group(1)), int(m.group(2) or 1)
            parts.extend([part] * mult)
        parts = [p for p in parts if p > 0]
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def compact(self) -> str:
        """Caret form, e.g. ``2^2,1^2``."""
        out = []
        for part in sorted(set(self.parts), reverse=True):
            m = self.parts.count(part)
            out.append(f"{part}^{m}" if m > 1 else str(part))
        return ",".join(out)

    def multiplicities(self) -> dict[int, int]:
        mult: dict[int, int] = {}
        for p in self.parts:
            mult[p] = mult.get(p, 0) + 1
        return mult

    def boxes(self) -> Iterator[BoxContent]:
        for i, row_len in enumerate(self.parts, start=1):
            for j in range(1, row_len + 1):
                yield BoxContent(i, j, j - i)


def _check_n(n: int, bound: int = MAX_N) -> None:
    if not 1 <= n <= bound:
        raise InputError(f"n must lie in 1..{bound}, got {n}")


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def iter_partitions(n: int, bound: int = MAX_N) -> Iterator[Partition]:
    """Lazy version of :func:`enumerate_partitions`; only small ``n`` is cached."""
    _check_n(n, bound)
    if n <= 40:
        yield from (Partition(p) for p in _partitions(n, n))
        return

    def rec(m: int, largest: int, prefix: tuple[int, ...]):
        if m == 0:
            yield prefix
            return
        for first in range(min(m, largest), 0, -1):
            yield from rec(m - first, first, prefix + (first,))

    for parts in rec(n, n, ()):
        yield Partition(parts)


def enumerate_partitions(n: int, bound: int = MAX_N) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, starting at ``(n)``."""
    _check_n(n, bound)
    if n > 40:
        return list(iter_partitions(n, bound))
    return [Partition(p) for p in _partitions(n, n)]


def content_sum(lam: Partition) -> int:
    # sum_i lam_i (lam_i - 2i + 1) / 2, always even before halving
    twice = sum(p * (p - 2 * i + 1) for i, p in enumerate(lam.parts, start=1))
    return twice // 2


def content_square_sum(lam: Partition) -> int:
    return sum(b.content ** 2 for b in lam.boxes())


def conjugate(lam: Partition) -> Partition:
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff every prefix sum of ``mu`` is at least that of ``lam``."""
    if mu.n != lam.n:
        raise InputError(f"dominance needs equal sizes, got {mu.n} and {lam.n}")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu.parts[i] if i < len(mu) else 0
        b += lam.parts[i] if i < len(lam) else 0
        if a < b:
            return False
    return True


def is_two_column_hookless(lam: Partition) -> bool:
    """True iff ``lam`` has the shape ``(2^k, 1^(n-2k))``.

    For ``n >= 3`` these are exactly the partitions not dominating ``(3, 1^(n-3))``.
    """
    return lam.parts[0] <= 2


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam).parts
    return [lam.parts[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam.parts[i])]


def dimension(lam: Partition, bound: int = MAX_N) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    _check_n(lam.n, bound)
    return math.factorial(lam.n) // math.prod(hook_lengths(lam))


def hook(n: int, k: int) -> Partition:
    """The hook ``(n-k, 1^k)``."""
    if not 0 <= k < n:
        raise InputError(f"hook (n-k,1^k) needs 0 <= k < n, got n={n}, k={k}")
    return Partition((n - k,) + (1,) * k)


def single_class_partition(n: int, cycle: tuple[int, ...]) -> Partition:
    """Cycle type ``cycle`` padded with fixed points, e.g. ``(2,2) -> (2,2,1^(n-4))``."""
    rest = n - sum(cycle)
    if rest < 0:
        raise InputError(f"cycle type {cycle} does not fit in degree {n}")
    return Partition(tuple(sorted(cycle, reverse=True)) + (1,) * rest)
