import random
from fractions import Fraction

import numpy as np
import pytest

from mincoprime import numtheory as nt
from oracles import is_prime_td, lemma11_brute, nth_prime_td, pi_td, ramanujan_brute

R_KNOWN = [2, 11, 17, 29, 41, 47, 59, 67, 71, 97, 101, 107, 127, 149, 151, 167, 179, 181, 227, 229]


def _list_sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return flags


def test_small_tables():
    assert list(nt.PrimeTables.build(10).primes) == [2, 3, 5, 7]
    t = nt.PrimeTables.build(2)
    assert list(t.primes) == [2] and t.pi_prefix[2] == 1
    assert nt.primes_up_to(10) == [2, 3, 5, 7]


def test_tables_invariants():
    t = nt.PrimeTables.build(5000)
    assert all(t.pi_prefix[p] == i + 1 for i, p in enumerate(t.primes))
    steps = np.diff(t.pi_prefix)
    assert set(np.unique(steps)) <= {0, 1}
    assert np.array_equal(steps == 1, t.is_prime[1:])


def test_growth_keeps_old_entries():
    small = nt.PrimeTables.build(1000)
    big = nt.ensure_sieve(20000)
    assert np.array_equal(big.pi_prefix[:1001], small.pi_prefix)


def test_million_against_independent_sieve():
    nt.ensure_sieve(10**6)
    flags = _list_sieve(10**6)
    pi = np.cumsum(flags)
    rng = random.Random(5)
    for x in rng.sample(range(10**6 + 1), 1000):
        assert nt.prime_count(x) == pi[x]
        assert nt.is_prime(x) == is_prime_td(x)


@pytest.mark.parametrize("i, p", [(1, 2), (7, 17), (16, 53)])
def test_nth_prime(i, p):
    assert nt.nth_prime(i) == p == nth_prime_td(i)


@pytest.mark.parametrize("x, c", [(1, 0), (10, 4), (48, 15)])
def test_prime_count(x, c):
    assert nt.prime_count(x) == c == pi_td(x)


def test_count_and_nth_are_inverse():
    assert all(nt.prime_count(nt.nth_prime(i)) == i for i in range(1, 2000))


def test_bertrand_on_range():
    assert all(nt.prime_count(2 * x) - nt.prime_count(x) >= 1 for x in range(1, 20000))


def test_ramanujan_known_values():
    assert [nt.ramanujan_prime(k) for k in range(1, 21)] == R_KNOWN
    assert nt.ramanujan_prime(4) == 29


def test_ramanujan_against_brute_scan():
    assert [nt.ramanujan_prime(k) for k in range(1, 21)] == [ramanujan_brute(k) for k in range(1, 21)]


@pytest.mark.parametrize("k", range(1, 31))
def test_ramanujan_invariants(k):
    r = nt.ramanujan_prime(k)
    f = nt.ramanujan_counts(8 * r + 100)
    assert nt.is_prime(r)
    assert f[r - 1] < k
    assert f[r:].min() >= k


@pytest.mark.parametrize("x, p", [(1, 2), (11, 13)])
def test_lemma11_examples(x, p):
    assert nt.lemma11_witness(x) == p


def test_lemma11_ranges():
    assert nt.verify_lemma11_range(1) == []
    assert nt.verify_lemma11_range(1331) == []
    assert nt.verify_lemma11_range(5000) == []


def test_lemma11_witness_is_least():
    for x in range(1, 400):
        w = nt.lemma11_witness(x)
        assert x < w <= 2 * x and is_prime_td(w) and w % 11 not in (1, 10)
        assert not any(is_prime_td(p) and p % 11 not in (1, 10) for p in range(x + 1, w))
        assert lemma11_brute(x)


def test_lemma11_real_arguments_reduce_to_integers():
    # for t < x < t + 1 the witness of t lies in (x, 2x]
    rng = random.Random(11)
    for _ in range(2000):
        t = rng.randint(1, 1331)
        x = t + Fraction(rng.randint(1, 999), 1000)
        w = nt.lemma11_witness(t)
        assert x < w <= 2 * x


def test_errors():
    with pytest.raises(ValueError):
        nt.ensure_sieve(1)
    with pytest.raises(ValueError):
        nt.nth_prime(-1)
    old = nt._memory_cap
    try:
        nt.set_memory_cap(1000)
        with pytest.raises(nt.SieveLimitError):
            nt.ensure_sieve(10**7)
    finally:
        nt.set_memory_cap(old)
