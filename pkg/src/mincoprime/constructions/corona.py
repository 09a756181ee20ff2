"""Minimum coprime labelings of K_n (.) E_m (complete graph crowned by empty graphs)."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .. import graphs
from ..labeling import PrValue
from ..numtheory import nth_prime, prime_count
from ..solver import min_coprime_number_exact
from ._common import ConstructionError, verified


def corona_value(n: int, m: int) -> int:
    """max(mn + n, p_{n-1}); p_0 is taken as 1."""
    return max(m * n + n, nth_prime(n - 1) if n > 1 else 1)


def _greedy(n: int, m: int) -> list[int] | None:
    """Hub labels 1, p_1..p_{n-1}; copy i+1 takes the first m free labels coprime to p_i.

    Returns the labels in corona vertex order, or None when some copy runs
    short of coprime labels.
    """
    top = corona_value(n, m)
    hubs = [1] + [nth_prime(i) for i in range(1, n)]
    hub_set = set(hubs)
    free = [x for x in range(1, top + 1) if x not in hub_set]
    blocks: list[list[int]] = [[] for _ in range(n)]
    for i in range(1, n):
        p = hubs[i]
        chosen = []
        for x in free:
            if gcd(x, p) == 1:
                chosen.append(x)
                if len(chosen) == m:
                    break
        if len(chosen) < m:
            return None
        taken = set(chosen)
        free = [x for x in free if x not in taken]
        blocks[i] = chosen
    blocks[0] = free[:m]
    return hubs + [x for b in blocks for x in b]


def corona_labeling(n: int, m: int) -> PrValue:
    """Exact pr(K_n (.) E_m) with a verified witness.

    Falls back to exact search if the greedy step runs short, which the
    counting argument excludes for n >= 4, m >= 3.
    """
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got ({n}, {m})")
    g = graphs.corona(graphs.complete(n), graphs.empty(m))
    target = corona_value(n, m)
    labels = _greedy(n, m)
    provenance = "construction"
    if labels is None:
        res = min_coprime_number_exact(g)
        if not res.certified:
            raise ConstructionError(f"greedy failed and exact search inconclusive at ({n}, {m})")
        labels = list(res.value.witness.labels)
        provenance = "exact-search"
    lab = verified(g, labels)
    if lab.max_label != target:
        raise ConstructionError(f"corona ({n}, {m}): max {lab.max_label} != {target}")
    return PrValue("exact", target, provenance, lab, note="max(mn+n, p_{n-1})")


@dataclass(frozen=True)
class CountingStage:
    i: int
    p: int
    case: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs > self.rhs


def corona_counting_certificate(n: int, m: int) -> list[CountingStage]:
    """Check p_i (mn - mi + 1) > mn + n for each greedy stage i = 1..n-1.

    Each stage records which case of the argument applies:
    ``"p_i > n"``, ``"p_i <= n, i >= 3"`` or ``"p_i <= n, i = 2"``.
    (i = 1 has p_1 = 2 <= n and falls under none of the three; it is reported
    as ``"p_i <= n, i = 1"`` and checked all the same.)
    """
    if n < 4 or m < 3:
        raise ValueError("the counting argument assumes n >= 4 and m >= 3")
    rows = []
    for i in range(1, n):
        p = nth_prime(i)
        if p > n:
            case = "p_i > n"
        elif i >= 3:
            case = "p_i <= n, i >= 3"
        else:
            case = f"p_i <= n, i = {i}"
        rows.append(CountingStage(i, p, case, p * (m * n - m * i + 1), m * n + n))
    return rows


def corona_prime_condition(n: int, m: int) -> bool:
    """Whether n <= pi(n(m+1)) + 1, cross-checked against p_{n-1} <= mn + n."""
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got ({n}, {m})")
    by_count = n <= prime_count(n * (m + 1)) + 1
    by_formula = n == 1 or nth_prime(n - 1) <= m * n + n
    if by_count != by_formula:
        raise ConstructionError(f"prime condition disagrees with the formula at ({n}, {m})")
    return by_count
