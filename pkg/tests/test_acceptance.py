"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from oracles import adjacency_matrix, box_content_sum, brute_force_tilings, transpositions0
from sn_tiler.characters import ClassKind, central_character, hoffman_report, spectrum
from sn_tiler.criteria import (
    aggregate,
    divisibility_criterion,
    hoffman_criterion,
    prime_criterion,
    rothaus_partition,
    zero_eigenvalue_criterion,
)
from sn_tiler.partitions import Partition, content_sum, dominates, enumerate_partitions
from sn_tiler.perms import ClassSet, Permutation, Target, enumerate_group, generator_classes, sigma_classes
from sn_tiler.report import emit_report, scan
from sn_tiler.tiling import (
    avoids_intersection,
    count_ordered_set_partitions,
    is_independent,
    is_lambda_transitive,
    search,
    sigma_graph_connection,
    tile_size,
    transitivity_count,
    verify_tiling,
)

T, TS = Target.T, Target.T_STAR


def record(number, title, ok, note=""):
    line = f"AC{number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{note}]" if note else "")
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def is_prime(p):
    return p >= 2 and all(p % k for k in range(2, math.isqrt(p) + 1))


def test_ac01_content_sum_formula():
    start = time.monotonic()
    bad = [lam for n in range(1, 21) for lam in enumerate_partitions(n) if content_sum(lam) != box_content_sum(lam.parts)]
    elapsed = time.monotonic() - start
    record(1, "content-sum closed form == box enumeration, n <= 20, < 5 s", not bad and elapsed < 5, f"{elapsed:.2f}s")


def test_ac02_dominance_monotonicity():
    start = time.monotonic()
    violations = pairs = 0
    for n in range(1, 13):
        parts = enumerate_partitions(n)
        sums = {lam: content_sum(lam) for lam in parts}
        for mu in parts:
            for lam in parts:
                if mu != lam and dominates(mu, lam):
                    pairs += 1
                    violations += sums[mu] <= sums[lam]
    elapsed = time.monotonic() - start
    record(2, "dominance monotonicity, n <= 12, < 30 s", violations == 0 and elapsed < 30, f"{pairs} pairs, {elapsed:.2f}s")


def test_ac03_central_characters_at_trivial():
    ok = True
    for n in range(4, 31):
        top = Partition.of(n)
        ok &= central_character(top, ClassKind.TRANSPOSITION) == n * (n - 1) // 2
        ok &= central_character(top, ClassKind.THREE_CYCLE) == n * (n - 1) * (n - 2) // 3
        ok &= central_character(top, ClassKind.DOUBLE_TRANSPOSITION) == n * (n - 1) * (n - 2) * (n - 3) // 8
    record(3, "central characters at (n) equal d1, d2, d3, n = 4..30", ok)


def test_ac04_spectrum_oracle():
    start = time.monotonic()
    worst = 0.0
    for n in (4, 5):
        sets = [ClassSet.of(n, (2,)), ClassSet.of(n, (3,)), ClassSet.of(n, (2, 2))]
        sets += [sigma_classes(n, T), sigma_classes(n, TS)]
        for cs in sets:
            table = spectrum(n, cs)
            A = adjacency_matrix(n, {mu.parts for mu in cs.cycle_types}, cs.include_identity)
            numeric = np.sort(np.linalg.eigvalsh(A))
            predicted = np.sort([float(r.eigenvalue) for r in table.rows for _ in range(r.multiplicity)])
            worst = max(worst, float(np.max(np.abs(numeric - predicted))))
    elapsed = time.monotonic() - start
    record(4, "spectra match numeric eigensolve within 1e-8, n = 4, 5, < 2 min", worst < 1e-8 and elapsed < 120,
           f"max err {worst:.1e}, {elapsed:.2f}s")


def test_ac05_hoffman_tightness():
    ok = all(hoffman_report(n, (2, 3, 2)).ratio_bound == Fraction(2, n * n - n + 2) for n in range(14, 31))
    checked = 0
    for n in range(3, 31):
        if any(content_sum(lam) == 0 for lam in enumerate_partitions(n)):
            checked += 1
            ok &= hoffman_report(n, (0, 3, 2)).ratio_bound == Fraction(2, n * n - n)
    record(5, "default-beta Hoffman ratios 2/(n^2-n+2) (n = 14..30) and 2/(n^2-n)", ok, f"{checked} T* cases")


def test_ac06_n6_exclusion():
    z = zero_eigenvalue_criterion(6, T)
    no_minus_one = all(content_sum(lam) != -1 for lam in enumerate_partitions(6))
    h = hoffman_criterion(6, T)
    ok = z.excluded and no_minus_one and h.excluded
    ok &= Fraction(h.detail["ratio_bound"]) == Fraction(1, 17) < Fraction(1, 16) == Fraction(h.detail["required_density"])
    record(6, "n = 6: zero-eigenvalue excludes T_6; Hoffman gives 1/17 < 1/16", ok)


def test_ac07_n5_prime():
    r = prime_criterion(5)
    record(7, "n = 5: prime criterion excludes with p = 11", r.excluded and r.detail["p"] == 11)


def test_ac08_n4_resolution():
    start = time.monotonic()
    agg = aggregate(4, T)
    cert = search(4, TS)
    elapsed = time.monotonic() - start
    ok = agg.overall == "excluded" and cert.outcome == "none" and cert.exhaustive and elapsed < 60
    record(8, "n = 4: T_4 excluded by criteria, T_4* none by exhaustive search, < 60 s", ok, f"{elapsed:.2f}s")


def test_ac09_n3_positive_control():
    cert = search(3, TS)
    w = cert.witness
    ok = cert.outcome == "found" and w is not None and bool(verify_tiling(w))
    ok = ok and len(w) == tile_size(3, TS) == 2 * math.factorial(1)
    ok = ok and is_independent(w.members, sigma_graph_connection(3, TS))
    ok = ok and avoids_intersection(w.members, 0)[0] and avoids_intersection(w.members, -1)[0]
    record(9, "n = 3: T_3* witness found, verified, independent, avoids n-3 and n-4", ok)


def test_ac10_n5_star_cross_validation():
    start = time.monotonic()
    d = divisibility_criterion(5, TS)
    ok = d.excluded and d.detail["violator"] == "4,1" and 24 % 10 != 0 and d.detail["factorial_product"] == 24
    cert = search(5, TS)
    elapsed = time.monotonic() - start
    ok = ok and cert.outcome == "none" and cert.exhaustive and elapsed < 600
    record(10, "n = 5: divisibility excludes T_5* via (4,1) and search agrees, < 10 min", ok, f"{elapsed:.2f}s")


def test_ac11_rothaus_identity():
    count = 0
    for p in (q for q in range(2, 51) if is_prime(q)):
        for n in range(1, 101):
            rp = rothaus_partition(n, p)
            direct = sum(x * (x - 2 * i + 1) for i, x in enumerate(rp.lam.parts, start=1))
            closed = (p - 1) * (p - 1 - rp.q) * rp.q + rp.r * (rp.r - 2 * rp.q - 1)
            assert direct == closed == rp.eq7_value
            count += 1
    record(11, "Rothaus partition identity, n <= 100, p <= 50", True, f"{count} cases")


def test_ac12_transitivity():
    ok = True
    for n in range(1, 6):
        group = enumerate_group(n)
        for lam in enumerate_partitions(n):
            rep = is_lambda_transitive(group, lam)
            ok &= rep.is_transitive and rep.r == math.prod(math.factorial(p) for p in lam.parts)
    e = Permutation.identity(3)
    t = Permutation.transposition(1, 2, 3)
    rep = is_lambda_transitive([e, t], Partition.of(2, 1))
    ok &= not rep.is_transitive and rep.counterexample[0][2] != rep.counterexample[1][2]
    ok &= transitivity_count([e, t], ((1, 2), (3,)), ((1, 2), (3,))) == 2
    ok &= transitivity_count([e, t], ((1, 3), (2,)), ((1, 3), (2,))) == 1
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            ok &= count_ordered_set_partitions(n, lam) == math.factorial(n) // math.prod(math.factorial(p) for p in lam.parts)
    record(12, "S_n is lambda-transitive with r = prod lam_i!; {id,(1 2)} fails (2,1); set-partition counts", ok)


def test_ac13_brute_force_equivalence():
    ok = True
    for target in (T, TS):
        size = tile_size(3, target)
        X = transpositions0(3, target is T)
        brute = bool(size) and bool(brute_force_tilings(3, X, size, tuple(range(3))))
        ok &= (search(3, target).outcome == "found") == brute
    X = transpositions0(4, False)
    brute = bool(brute_force_tilings(4, X, tile_size(4, TS), tuple(range(4))))
    ok &= (search(4, TS).outcome == "found") == brute
    record(13, "search agrees with brute-force enumeration at n = 3 (both) and n = 4 (T*)", ok)


def test_ac14_determinism():
    runs = [emit_report(scan(3, 6, {T, TS}, with_search=True, deterministic=True)) for _ in range(3)]
    record(14, "deterministic scan(3, 6) JSON is byte-identical across runs", len(set(runs)) == 1)
