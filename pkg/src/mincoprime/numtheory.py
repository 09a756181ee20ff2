"""Prime tables: sieve, pi(x), p_i, Ramanujan primes and mod-11 prime witnesses.

All lookups go through one process-wide :class:`PrimeTables` instance that
grows geometrically on demand.  Each growth step builds fresh arrays and swaps
them in, so a table obtained by a reader is never mutated afterwards.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

DEFAULT_MEMORY_CAP = 2**28


class SieveLimitError(MemoryError):
    """Raised when a request would grow the sieve past the configured cap."""


class WitnessNotFound(LookupError):
    """No prime in (x, 2x] avoids 1 and 10 mod 11 (the guarantee behind the mod-11 witness)."""


@dataclass(frozen=True)
class PrimeTables:
    limit: int
    is_prime: np.ndarray = field(repr=False)
    primes: np.ndarray = field(repr=False)
    pi_prefix: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, limit: int) -> "PrimeTables":
        is_prime = np.ones(limit + 1, dtype=bool)
        is_prime[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if is_prime[p]:
                is_prime[p * p :: p] = False
        primes = np.flatnonzero(is_prime).astype(np.int64)
        pi_prefix = np.cumsum(is_prime, dtype=np.int64)
        for arr in (is_prime, primes, pi_prefix):
            arr.setflags(write=False)
        return cls(limit, is_prime, primes, pi_prefix)


_lock = threading.Lock()
_tables = PrimeTables.build(1 << 12)
_memory_cap = DEFAULT_MEMORY_CAP


def set_memory_cap(cap: int) -> None:
    """Set the maximum sieve size in booleans (default 2**28)."""
    global _memory_cap
    if cap < 2:
        raise ValueError("memory cap must be at least 2")
    _memory_cap = cap


def ensure_sieve(limit: int) -> PrimeTables:
    """Return tables valid at least up to ``limit``, growing by doubling."""
    global _tables
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    tables = _tables
    if tables.limit >= limit:
        return tables
    if limit > _memory_cap:
        raise SieveLimitError(f"sieve limit {limit} exceeds cap {_memory_cap}")
    with _lock:
        tables = _tables
        if tables.limit < limit:
            new_limit = tables.limit
            while new_limit < limit:
                new_limit *= 2
            tables = PrimeTables.build(min(new_limit, _memory_cap))
            _tables = tables
    return tables


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    return bool(ensure_sieve(x).is_prime[x])


def prime_count(x: int) -> int:
    """pi(x), the number of primes <= x."""
    if x < 2:
        return 0
    return int(ensure_sieve(x).pi_prefix[x])


def nth_prime(i: int) -> int:
    """The i-th prime, 1-indexed (nth_prime(1) == 2)."""
    if i < 1:
        raise ValueError(f"prime index must be >= 1, got {i}")
    tables = _tables
    while len(tables.primes) < i:
        # p_i < i (ln i + ln ln i) for i >= 6
        guess = 16 if i < 6 else int(i * (math.log(i) + math.log(math.log(i)))) + 1
        tables = ensure_sieve(max(guess, 2 * tables.limit))
    return int(tables.primes[i - 1])


def primes_up_to(x: int) -> list[int]:
    if x < 2:
        return []
    tables = ensure_sieve(x)
    return tables.primes[: tables.pi_prefix[x]].tolist()


def ramanujan_counts(limit: int) -> np.ndarray:
    """f(x) = pi(x) - pi(floor(x/2)) for x = 0..limit."""
    pi = ensure_sieve(max(limit, 2)).pi_prefix[: limit + 1]
    return pi - pi[np.arange(limit + 1) // 2]


@lru_cache(maxsize=None)
def ramanujan_prime(k: int) -> int:
    """R_k: least integer with pi(x) - pi(x/2) >= k for every x >= R_k.

    The tail condition is certified by doubling the scanned range until the
    minimum of f over its upper half is at least k + 2.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    bound = 64
    while True:
        f = ramanujan_counts(bound)
        if f[bound // 2 :].min() >= k + 2:
            break
        bound *= 2
    below = np.flatnonzero(f < k)
    r = int(below[-1]) + 1
    # stability: the answer must not move when the window doubles again
    f2 = ramanujan_counts(2 * bound)
    if int(np.flatnonzero(f2 < k)[-1]) + 1 != r:
        raise RuntimeError(f"R_{k} not stable under window doubling at {bound}")
    return r


def lemma11_witness(x: int) -> int:
    """Least prime p with x < p <= 2x and p mod 11 not in {1, 10}."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    tables = ensure_sieve(max(2 * x, 2))
    lo = int(tables.pi_prefix[x])
    hi = int(tables.pi_prefix[2 * x])
    for p in tables.primes[lo:hi].tolist():
        if p % 11 not in (1, 10):
            return p
    raise WitnessNotFound(f"no prime in ({x}, {2 * x}] avoids +-1 mod 11")


def verify_lemma11_range(x_max: int) -> list[int]:
    """Run :func:`lemma11_witness` for every integer 1 <= x <= x_max.

    Returns the x values without a witness; any entry is a counterexample.
    Integer x suffices: for t < x < t + 1 the witness for t lies in (x, 2x].
    """
    if x_max < 1:
        raise ValueError(f"x_max must be >= 1, got {x_max}")
    ensure_sieve(2 * x_max)
    failures = []
    for x in range(1, x_max + 1):
        try:
            lemma11_witness(x)
        except WitnessNotFound:
            failures.append(x)
    return failures
