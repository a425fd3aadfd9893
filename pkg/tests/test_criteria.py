import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import factorial_product
from sn_tiler.criteria import (
    CRITERIA_ORDER,
    aggregate,
    counting_criterion,
    divides_factorial_product,
    divisibility_criterion,
    hoffman_criterion,
    legendre,
    prime_criterion,
    rothaus_partition,
    zero_eigenvalue_criterion,
)
from sn_tiler.partitions import Partition, content_sum, enumerate_partitions
from sn_tiler.perms import Target

T, TS = Target.T, Target.T_STAR
P = Partition.of


def is_prime(p):
    return p >= 2 and all(p % k for k in range(2, math.isqrt(p) + 1))


def test_counting_examples():
    assert counting_criterion(5, T).excluded
    assert not counting_criterion(6, T).excluded
    assert counting_criterion(6, T).detail["tile_count"] == 45
    assert not counting_criterion(2, T).excluded


def test_legendre_matches_factorial():
    for m in range(0, 30):
        for p in (2, 3, 5, 7, 11, 13):
            f, e = math.factorial(m), 0
            while f % p == 0:
                f //= p
                e += 1
            assert legendre(m, p) == e


@given(st.integers(1, 200), st.lists(st.integers(0, 12), min_size=1, max_size=5))
def test_divides_factorial_product_exact(d, parts):
    assert divides_factorial_product(d, parts) == (factorial_product(parts) % d == 0)


def test_divisibility_examples():
    r = divisibility_criterion(6, TS)
    assert r.excluded and r.detail["violator"] == "4,2" and r.detail["factorial_product"] == 48
    r = divisibility_criterion(5, TS)
    assert r.excluded and r.detail["violator"] == "4,1"
    assert not divisibility_criterion(4, TS).excluded


def test_divisibility_n4_star_qualifying_partitions():
    qualifying = [lam for lam in enumerate_partitions(4) if content_sum(lam) > 0]
    assert qualifying == [P(4), P(3, 1)]
    assert all(factorial_product(lam.parts) % 6 == 0 for lam in qualifying)


@pytest.mark.parametrize("n", range(3, 41))
@pytest.mark.parametrize("target", [T, TS])
def test_divisibility_violators_recheck(n, target):
    r = divisibility_criterion(n, target, all_violators=True)
    size = target.size(n)
    for text in r.detail.get("violators", []):
        lam = Partition.parse(text)
        s = content_sum(lam)
        assert s >= 0 if target is T else s > 0
        assert factorial_product(lam.parts) % size != 0
    if r.excluded:
        assert r.detail["violator"] == r.detail["violators"][0]


@pytest.mark.parametrize("n", range(3, 41))
def test_counting_implies_divisibility(n):
    if counting_criterion(n, T).excluded:
        assert divisibility_criterion(n, T).excluded


def test_prime_examples():
    r = prime_criterion(5)
    assert r.excluded and r.detail["p"] == 11 and r.detail["original_threshold"]
    r = prime_criterion(6)
    assert not r.excluded and r.detail["prime_factors"] == [2]
    r = prime_criterion(4)
    assert r.excluded and r.detail["p"] == 7


@pytest.mark.parametrize("n", range(3, 65))
def test_prime_criterion_exact_threshold(n):
    value = 1 + n * (n - 1) // 2
    primes = [p for p in range(2, value + 1) if value % p == 0 and is_prime(p)]
    fires = any(p >= math.sqrt(n) + 1 for p in primes)
    r = prime_criterion(n)
    assert r.excluded == fires
    if fires:
        p = r.detail["p"]
        assert value % p == 0 and (p - 1) ** 2 >= n
        # the Rothaus partition then satisfies the divisibility hypothesis
        assert r.detail["eq7_value"] >= 0
        assert divisibility_criterion(n, T).excluded


def test_prime_criterion_sharper_than_original():
    # some n where only the weakened threshold fires
    reports = [prime_criterion(n) for n in range(3, 1000)]
    sharper = [r.n for r in reports if r.excluded and not r.detail["original_threshold"]]
    assert sharper == [733]
    for n in sharper:
        p = prime_criterion(n).detail["p"]
        assert (p - 1) ** 2 >= n > (p - 2) ** 2


def test_rothaus_examples():
    rp = rothaus_partition(5, 11)
    assert (rp.q, rp.r, rp.lam, rp.eq7_value) == (0, 5, P(5), 20)
    rp = rothaus_partition(9, 5)
    assert (rp.q, rp.r, rp.lam, rp.eq7_value) == (2, 1, P(4, 4, 1), 12)
    for p in (3, 5, 7, 13):
        rp = rothaus_partition(p - 1, p)
        assert (rp.q, rp.r, rp.lam, rp.eq7_value) == (1, 0, P(p - 1), (p - 1) * (p - 2))


@pytest.mark.parametrize("p", [q for q in range(2, 51) if is_prime(q)])
def test_rothaus_identity(p):
    for n in range(1, 101):
        rp = rothaus_partition(n, p)
        assert n == (p - 1) * rp.q + rp.r and 0 <= rp.r <= max(p - 2, 0)
        assert rp.lam.n == n
        assert rp.eq7_value == 2 * content_sum(rp.lam)


def test_zero_eigenvalue_examples():
    assert zero_eigenvalue_criterion(6, T).excluded
    r = zero_eigenvalue_criterion(14, T)
    assert not r.excluded and content_sum(Partition.parse(r.detail["witness"])) == -1
    r = zero_eigenvalue_criterion(4, TS)
    assert not r.excluded and r.detail["witness"] == "2,2"


@pytest.mark.parametrize("n", range(14, 41))
def test_zero_eigenvalue_silent_from_14(n):
    assert not zero_eigenvalue_criterion(n, T).excluded


def test_hoffman_examples():
    r = hoffman_criterion(6, T)
    assert r.excluded and r.detail["ratio_bound"] == "1/17" and r.detail["required_density"] == "1/16"
    r = hoffman_criterion(14, T)
    assert not r.excluded and Fraction(r.detail["ratio_bound"]) == Fraction(1, T.size(14))
    r = hoffman_criterion(5, TS)
    assert not r.excluded and r.detail["ratio_bound"] == "1/10"
    assert hoffman_criterion(6, T, beta=(2, 3, 2)).detail == hoffman_criterion(6, T).detail


@pytest.mark.parametrize("n", range(4, 31))
@pytest.mark.parametrize("target", [T, TS])
def test_zero_eigenvalue_exclusion_implies_hoffman(n, target):
    if zero_eigenvalue_criterion(n, target).excluded:
        assert hoffman_criterion(n, target).excluded


def test_aggregate_examples():
    a = aggregate(4, T)
    assert a.overall == "excluded"
    by = {r.name: r for r in a.reports}
    assert by["prime"].excluded and by["zero_eigenvalue"].excluded
    a = aggregate(4, TS)
    assert a.overall == "open" and not any(r.excluded for r in a.reports)
    a = aggregate(6, TS)
    assert a.overall == "excluded"
    assert [r.name for r in a.reports if r.excluded] == ["divisibility"]


@pytest.mark.parametrize("target", [T, TS])
def test_aggregate_order(target):
    names = [r.name for r in aggregate(7, target).reports]
    expected = [c for c in CRITERIA_ORDER if target is T or c != "prime"]
    assert names == expected


def test_aggregate_custom_beta_reaches_hoffman():
    a = aggregate(6, T, beta=(0, 3, 2))
    h = a.reports[-1]
    assert h.name == "hoffman" and h.detail["beta"] == ["0/1", "3/1", "2/1"]
