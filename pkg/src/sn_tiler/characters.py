"""Central characters from content sums, normal Cayley spectra, weighted Hoffman bound.

Every quantity here is an exact :class:`fractions.Fraction` or ``int``.
Only the three classes reached by products of two transpositions are
supported; they are all the graphs in this package need.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from sn_tiler.errors import InputError
from sn_tiler.partitions import (
    Partition,
    content_square_sum,
    content_sum,
    dimension,
    enumerate_partitions,
    single_class_partition,
)
from sn_tiler.perms import ClassSet, class_size


class ClassKind(Enum):
    TRANSPOSITION = (2,)
    THREE_CYCLE = (3,)
    DOUBLE_TRANSPOSITION = (2, 2)

    @property
    def min_n(self) -> int:
        return sum(self.value)

    def cycle_type(self, n: int) -> Partition:
        return single_class_partition(n, self.value)

    def class_size(self, n: int) -> int:
        """Size of the class, 0 when it does not exist in S_n."""
        if n < self.min_n:
            return 0
        return class_size(self.cycle_type(n))


def fraction_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {text!r}") from None


@dataclass(frozen=True)
class CentralCharacterRow:
    lam: Partition
    omega2: int
    omega3: int
    omega22: int

    @property
    def n(self) -> int:
        return self.lam.n

    def __getitem__(self, kind: ClassKind) -> int:
        return {
            ClassKind.TRANSPOSITION: self.omega2,
            ClassKind.THREE_CYCLE: self.omega3,
            ClassKind.DOUBLE_TRANSPOSITION: self.omega22,
        }[kind]


def central_character_row(lam: Partition) -> CentralCharacterRow:
    """All three central characters at ``lam``.

    For degrees too small to contain a class the formulas give 0, matching
    the empty class; :func:`central_character` is the strict entry point.
    """
    n = lam.n
    s = content_sum(lam)
    q = content_square_sum(lam)
    pairs = n * (n - 1) // 2
    omega22 = Fraction(s * s, 2) - Fraction(3 * q, 2) + pairs
    if omega22.denominator != 1:
        raise ArithmeticError(f"non-integral double-transposition character at {lam}: {omega22}")
    return CentralCharacterRow(lam, s, q - pairs, int(omega22))


def central_character(lam: Partition, kind: ClassKind) -> Fraction:
    if lam.n < kind.min_n:
        raise InputError(f"class {kind.name.lower()} needs n >= {kind.min_n}, got n = {lam.n}")
    return Fraction(central_character_row(lam)[kind])


def _kind_for(mu: Partition) -> ClassKind:
    for kind in ClassKind:
        if lam_matches(mu, kind):
            return kind
    raise InputError(
        f"unsupported class {mu} in connection set; only transpositions, "
        "3-cycles and double transpositions are supported"
    )


def lam_matches(mu: Partition, kind: ClassKind) -> bool:
    return mu.n >= kind.min_n and mu == kind.cycle_type(mu.n)


@dataclass(frozen=True)
class SpectrumRow:
    lam: Partition
    eigenvalue: Fraction
    multiplicity: int


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    connection: ClassSet
    rows: tuple[SpectrumRow, ...]

    def eigenvalue(self, lam: Partition) -> Fraction:
        for row in self.rows:
            if row.lam == lam:
                return row.eigenvalue
        raise KeyError(lam)

    def multiset(self) -> dict[Fraction, int]:
        out: dict[Fraction, int] = {}
        for row in self.rows:
            out[row.eigenvalue] = out.get(row.eigenvalue, 0) + row.multiplicity
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "connection": [str(mu) for mu in self.connection.sorted_types()],
            "rows": [
                {"lambda": str(r.lam), "eigenvalue": fraction_str(r.eigenvalue), "multiplicity": r.multiplicity}
                for r in self.rows
            ],
        }


def spectrum(n: int, connection: ClassSet) -> SpectrumTable:
    """Eigenvalues of ``Cay(S_n, connection)``, one row per irreducible character."""
    if connection.n != n:
        raise InputError(f"connection set has degree {connection.n}, expected {n}")
    kinds = [_kind_for(mu) for mu in connection.sorted_types() if mu != Partition((1,) * n)]
    rows = []
    for lam in enumerate_partitions(n):
        cc = central_character_row(lam)
        value = Fraction(int(connection.include_identity) + sum(cc[k] for k in kinds))
        rows.append(SpectrumRow(lam, value, dimension(lam) ** 2))
    return SpectrumTable(n, connection, tuple(rows))


@dataclass(frozen=True)
class HoffmanReport:
    n: int
    beta: tuple[Fraction, Fraction, Fraction]
    per_lambda: tuple[tuple[Partition, Fraction], ...]
    ell_min: Fraction
    argmin: tuple[Partition, ...]
    weighted_degree: Fraction
    ratio_bound: Fraction

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "beta": [fraction_str(b) for b in self.beta],
            "ell_min": fraction_str(self.ell_min),
            "argmin": [str(lam) for lam in self.argmin],
            "weighted_degree": fraction_str(self.weighted_degree),
            "ratio_bound": fraction_str(self.ratio_bound),
            "rows": [{"lambda": str(lam), "ell": fraction_str(v)} for lam, v in self.per_lambda],
        }


def hoffman_report(n: int, beta: Sequence[Fraction | int | str]) -> HoffmanReport:
    """Weighted Hoffman bound on independent-set density for the union of the three classes.

    ``beta`` weights the transposition, 3-cycle and double-transposition
    graphs. At ``n = 3`` the double-transposition class is empty and
    contributes nothing.
    """
    if n < 3:
        raise InputError(f"hoffman bound needs n >= 3, got {n}")
    if len(beta) != 3:
        raise InputError(f"beta must have three entries, got {len(beta)}")
    b1, b2, b3 = (Fraction(b) for b in beta)
    per_lambda = []
    for lam in enumerate_partitions(n):
        cc = central_character_row(lam)
        per_lambda.append((lam, b1 * cc.omega2 + b2 * cc.omega3 + b3 * cc.omega22))
    ell_min = min(v for _, v in per_lambda)
    d1, d2, d3 = (k.class_size(n) for k in ClassKind)
    degree = b1 * d1 + b2 * d2 + b3 * d3
    if degree - ell_min == 0:
        raise InputError(f"degenerate beta {beta}: all weighted eigenvalues coincide")
    return HoffmanReport(
        n=n,
        beta=(b1, b2, b3),
        per_lambda=tuple(per_lambda),
        ell_min=ell_min,
        argmin=tuple(lam for lam, v in per_lambda if v == ell_min),
        weighted_degree=degree,
        ratio_bound=-ell_min / (degree - ell_min),
    )
