"""Permutations of {1..n}, conjugacy classes, and the sets T_n and T_n*.

Products compose right to left: ``(g * h)(i) == g(h(i))``. A tiling
factorization is then ``g = x * y`` and the Cayley graph ``Cay(G, S)`` has an
arc ``g -> h`` exactly when ``h * g.inverse()`` lies in ``S``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from sn_tiler.errors import InputError
from sn_tiler.partitions import Partition, single_class_partition

MAX_GROUP_N = 8


class Target(str, Enum):
    T = "tn"
    T_STAR = "tnstar"

    @classmethod
    def parse(cls, text: str) -> Target:
        key = text.strip().lower().replace("_", "").replace("*", "star")
        for t in cls:
            if key == t.value:
                return t
        raise InputError(f"unknown target {text!r}; expected 'tn' or 'tnstar'")

    @property
    def label(self) -> str:
        return "TN" if self is Target.T else "TNSTAR"

    def size(self, n: int) -> int:
        d1 = n * (n - 1) // 2
        return d1 + 1 if self is Target.T else d1


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InputError(f"not a bijection of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> Permutation:
        """Build from disjoint cycles; points not mentioned are fixed."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = list(cyc)
            for a in cyc:
                if not 1 <= a <= n or a in seen:
                    raise InputError(f"bad or repeated point {a} in cycle {cyc}")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> Permutation:
        return cls.from_cycles([(i, j)], n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Accept image form ``"2 1 3"`` or cycle form ``"(1 2)(3 4)"``.

        Cycle form needs ``n`` unless every point appears.
        """
        text = text.strip()
        if text.startswith("("):
            cycles = [
                [int(a) for a in re.split(r"[\s,]+", body.strip()) if a]
                for body in re.findall(r"\(([^)]*)\)", text)
            ]
            if re.sub(r"\([^)]*\)", "", text).strip():
                raise InputError(f"bad cycle notation {text!r}")
            if n is None:
                n = max((a for c in cycles for a in c), default=0)
            return cls.from_cycles(cycles, n)
        try:
            images = tuple(int(a) for a in re.split(r"[\s,]+", text) if a)
        except ValueError:
            raise InputError(f"bad permutation {text!r}") from None
        if n is not None and len(images) != n:
            raise InputError(f"expected degree {n}, got {len(images)} in {text!r}")
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, a in enumerate(self.images, start=1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            a = start
            while not seen[a]:
                seen[a] = True
                cyc.append(a)
                a = self.images[a - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self.images, start=1))


def compose(g: Permutation, h: Permutation) -> Permutation:
    """The product ``g*h``: apply ``h`` first, then ``g``."""
    if g.n != h.n:
        raise InputError(f"degree mismatch: {g.n} vs {h.n}")
    gi = g.images
    return Permutation(tuple(gi[a - 1] for a in h.images))


def inverse(g: Permutation) -> Permutation:
    return g.inverse()


def cycle_type(g: Permutation) -> Partition:
    return Partition(tuple(sorted((len(c) for c in g.cycles(include_fixed=True)), reverse=True)))


def fixed_points(g: Permutation) -> int:
    return sum(1 for i, a in enumerate(g.images, start=1) if a == i)


def class_size(mu: Partition) -> int:
    """``|C_mu| = n! / prod_j (m_j! * j^m_j)``."""
    denom = 1
    for j, m in mu.multiplicities().items():
        denom *= math.factorial(m) * j**m
    return math.factorial(mu.n) // denom


@dataclass(frozen=True)
class ClassSet:
    """A normal subset of S_n given as a union of conjugacy classes."""

    n: int
    cycle_types: frozenset[Partition] = field(default_factory=frozenset)
    include_identity: bool = False

    def __post_init__(self):
        types = frozenset(self.cycle_types)
        for mu in types:
            if mu.n != self.n:
                raise InputError(f"cycle type {mu} is not a partition of {self.n}")
        identity_type = Partition((1,) * self.n)
        if identity_type in types:
            types = types - {identity_type}
            object.__setattr__(self, "include_identity", True)
        object.__setattr__(self, "cycle_types", types)

    @classmethod
    def of(cls, n: int, *cycles: tuple[int, ...], include_identity: bool = False) -> ClassSet:
        """``ClassSet.of(5, (3,), (2, 2))`` is C_(3,1,1) together with C_(2,2,1)."""
        return cls(n, frozenset(single_class_partition(n, c) for c in cycles), include_identity)

    def __contains__(self, g: Permutation) -> bool:
        if g.n != self.n:
            return False
        if g.is_identity():
            return self.include_identity
        return cycle_type(g) in self.cycle_types

    def size(self) -> int:
        return int(self.include_identity) + sum(class_size(mu) for mu in self.cycle_types)

    def sorted_types(self) -> list[Partition]:
        """Cycle types, largest first, identity last when included."""
        types = sorted(self.cycle_types, key=lambda p: p.parts, reverse=True)
        if self.include_identity:
            types.append(Partition((1,) * self.n))
        return types

    def elements(self) -> Iterator[Permutation]:
        for g in enumerate_group(self.n):
            if g in self:
                yield g


def generator_classes(n: int, target: Target) -> ClassSet:
    """T_n or T_n* as a class set."""
    if n < 2:
        raise InputError(f"generator sets need n >= 2, got {n}")
    return ClassSet.of(n, (2,), include_identity=target is Target.T)


def sigma_classes(n: int, target: Target) -> ClassSet:
    """Connection set of Sigma_n (T_n^2 minus id) or Sigma_n* ((T_n*)^2 minus id)."""
    cycles = [(3,), (2, 2)]
    if target is Target.T:
        cycles.insert(0, (2,))
    return ClassSet.of(n, *(c for c in cycles if sum(c) <= n))


def generator_set(n: int, kind: Target) -> frozenset[Permutation]:
    if n < 2:
        raise InputError(f"generator sets need n >= 2, got {n}")
    out = {Permutation.transposition(i, j, n) for i, j in itertools.combinations(range(1, n + 1), 2)}
    if kind is Target.T:
        out.add(Permutation.identity(n))
    return frozenset(out)


def product_square(S: Iterable[Permutation]) -> frozenset[Permutation]:
    S = list(S)
    return frozenset(compose(a, b) for a in S for b in S)


@lru_cache(maxsize=4)
def _group(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def enumerate_group(n: int, bound: int = MAX_GROUP_N) -> tuple[Permutation, ...]:
    """All of S_n in lexicographic order of image sequences; index 0 is the identity."""
    if not 1 <= n <= bound:
        raise InputError(f"group enumeration needs 1 <= n <= {bound}, got {n}")
    return _group(n)


def group_index(n: int, bound: int = MAX_GROUP_N) -> dict[tuple[int, ...], int]:
    """Map image tuple -> position in :func:`enumerate_group`."""
    return {g.images: i for i, g in enumerate(enumerate_group(n, bound))}
