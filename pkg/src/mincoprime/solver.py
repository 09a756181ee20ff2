"""Exact search for coprime labelings, independence and clique numbers.

The labeling search is a backtracking CSP over bitmask domains (bit ``a`` set
means label ``a`` is still allowed):

* next vertex by smallest domain, ties by larger degree, then lower index;
* assigning label a removes a everywhere and intersects neighbour domains
  with the labels coprime to a;
* labels a, b are *interchangeable* when gcd(a, c) = 1 <=> gcd(b, c) = 1 for
  every other c <= k (e.g. 1 and primes above k/2, or 2, 4, 8, 16).  Only the
  smallest unused member of each class is tried;
* counting bounds: the labels still available must cover the unlabeled
  vertices, and for each prime p at most alpha(G) labels may be multiples
  of p (they form an independent set).

Results are three-valued: found / absent (the space was exhausted) /
inconclusive (a node or time limit stopped the search).
"""
from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import Graph
from .labeling import (
    Labeling,
    PrValue,
    certify,
    lower_bound_independence,
    lower_bound_prime_multiples,
)
from .numtheory import primes_up_to

FOUND, ABSENT, INCONCLUSIVE = "found", "absent", "inconclusive"


@dataclass(frozen=True)
class SearchConfig:
    max_k: Optional[int] = None
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    parallel_width: int = 1
    # pruning switches; every combination must give the same answers
    symmetry: bool = True
    pigeonhole: bool = True
    prime_counts: bool = True

    def __post_init__(self):
        for name in ("max_k", "node_limit", "time_limit"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive")
        if self.parallel_width < 1:
            raise ValueError("parallel_width must be >= 1")


def default_threads() -> int:
    return max(1, int(os.environ.get("MINCOPRIME_THREADS", "1")))


@dataclass(frozen=True)
class SearchResult:
    status: str
    k: int
    labeling: Optional[Labeling] = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Limit(Exception):
    pass


class _LabelSearch:
    def __init__(
        self, g: Graph, k: int, alpha: Optional[int], cfg: SearchConfig, allowed: Optional[int] = None
    ):
        self.n = g.n
        self.k = k
        self.cfg = cfg
        self.nbr = g.neighbor_masks()
        self.degree = [g.degree(v) for v in range(g.n)]
        full = ((1 << (k + 1)) - 1) ^ 1
        self.full = full if allowed is None else full & allowed
        self.coprime = [0] * (k + 1)
        for a in range(1, k + 1):
            m = 0
            for b in range(1, k + 1):
                if b != a and math.gcd(a, b) == 1:
                    m |= 1 << b
            self.coprime[a] = m
        # lower_twins[a]: smaller labels interchangeable with a
        self.lower_twins = [0] * (k + 1)
        if cfg.symmetry:
            for a in range(1, k + 1):
                for b in range(1, a):
                    keep = full & ~((1 << a) | (1 << b))
                    if self.coprime[a] & keep == self.coprime[b] & keep:
                        self.lower_twins[a] |= 1 << b
        self.multiples: list[tuple[int, int]] = []
        if cfg.prime_counts and alpha is not None:
            for p in primes_up_to(k // 2):
                mask = sum(1 << j for j in range(p, k + 1, p))
                self.multiples.append((p, mask))
        self.alpha = alpha
        self.nodes = 0
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
        self.assignment = [0] * g.n

    def _tick(self) -> None:
        self.nodes += 1
        lim = self.cfg.node_limit
        if lim is not None and self.nodes > lim:
            raise _Limit
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Limit

    def _bounds_ok(self, domains: dict[int, int], used: int) -> bool:
        if not domains:
            return True
        avail = 0
        for d in domains.values():
            avail |= d
        need = len(domains)
        if self.cfg.pigeonhole and avail.bit_count() < need:
            return False
        if self.multiples:
            alpha = self.alpha
            for _, mask in self.multiples:
                room = alpha - (used & mask).bit_count()
                hit = (avail & mask).bit_count()
                if (avail & ~mask).bit_count() + min(hit, room) < need:
                    return False
        return True

    def _pick(self, domains: dict[int, int]) -> int:
        best, key = -1, None
        for v, d in domains.items():
            kv = (d.bit_count(), -self.degree[v], v)
            if key is None or kv < key:
                best, key = v, kv
        return best

    def candidates(self, v: int, d: int, used: int) -> list[int]:
        out = []
        while d:
            low = d & -d
            a = low.bit_length() - 1
            d ^= low
            if self.lower_twins[a] & self.full & ~used:
                continue
            out.append(a)
        return out

    def assign(self, domains: dict[int, int], v: int, a: int) -> Optional[dict[int, int]]:
        bit = 1 << a
        cop = self.coprime[a]
        nb = self.nbr[v]
        out = {}
        for u, d in domains.items():
            if u == v:
                continue
            d &= ~bit
            if nb >> u & 1:
                d &= cop
            if not d:
                return None
            out[u] = d
        return out

    def solve(self, domains: dict[int, int], used: int) -> bool:
        self._tick()
        if not domains:
            return True
        if not self._bounds_ok(domains, used):
            return False
        v = self._pick(domains)
        for a in self.candidates(v, domains[v], used):
            nxt = self.assign(domains, v, a)
            if nxt is None:
                continue
            self.assignment[v] = a
            if self.solve(nxt, used | (1 << a)):
                return True
        return False

    def root(self) -> dict[int, int]:
        return {v: self.full for v in range(self.n)}


def _subtree(args) -> tuple[str, Optional[tuple[int, ...]], int]:
    g, k, alpha, cfg, allowed, v, a = args
    s = _LabelSearch(g, k, alpha, cfg, allowed)
    nxt = s.assign(s.root(), v, a)
    try:
        ok = nxt is not None and s.solve(nxt, 1 << a)
    except _Limit:
        return INCONCLUSIVE, None, s.nodes
    if ok:
        s.assignment[v] = a
        return FOUND, tuple(s.assignment), s.nodes
    return ABSENT, None, s.nodes


def exists_labeling_with_max(
    g: Graph,
    k: int,
    cfg: SearchConfig = SearchConfig(),
    alpha: Optional[int] = None,
    allowed: Optional[Iterable[int]] = None,
) -> SearchResult:
    """Search for a coprime labeling of ``g`` using distinct labels from 1..k.

    ``alpha`` (the exact independence number) enables the prime-multiple
    counting bound; pass None to skip it.  ``allowed`` restricts the labels
    further (used to complete partial constructions).
    """
    mask = None if allowed is None else sum(1 << a for a in set(allowed) if 1 <= a <= k)
    if g.n == 0:
        return SearchResult(FOUND, k, Labeling(()), 0)
    if k < g.n:
        return SearchResult(ABSENT, k, None, 0)
    s = _LabelSearch(g, k, alpha, cfg, mask)
    if cfg.parallel_width > 1:
        return _parallel(g, k, alpha, cfg, mask, s)
    try:
        ok = s.solve(s.root(), 0)
    except _Limit:
        return SearchResult(INCONCLUSIVE, k, None, s.nodes)
    if not ok:
        return SearchResult(ABSENT, k, None, s.nodes)
    lab = Labeling(s.assignment)
    certify_labeling(g, lab, k)
    return SearchResult(FOUND, k, lab, s.nodes)


def _parallel(g: Graph, k: int, alpha, cfg: SearchConfig, mask, s: _LabelSearch) -> SearchResult:
    # the root branches are disjoint subtrees; scanning them in order returns
    # the same witness as the sequential search
    dom = s.root()
    if not s._bounds_ok(dom, 0):
        return SearchResult(ABSENT, k, None, 1)
    v = s._pick(dom)
    jobs = [(g, k, alpha, cfg, mask, v, a) for a in s.candidates(v, dom[v], 0)]
    nodes, inconclusive = 1, False
    with ProcessPoolExecutor(max_workers=cfg.parallel_width) as pool:
        futures = [pool.submit(_subtree, j) for j in jobs]
        try:
            for fut in futures:
                status, labels, cnt = fut.result()
                nodes += cnt
                if status == FOUND and not inconclusive:
                    lab = Labeling(labels)
                    certify_labeling(g, lab, k)
                    return SearchResult(FOUND, k, lab, nodes)
                inconclusive |= status == INCONCLUSIVE
        finally:
            for fut in futures:
                fut.cancel()
    return SearchResult(INCONCLUSIVE if inconclusive else ABSENT, k, None, nodes)


def certify_labeling(g: Graph, lab: Labeling, k: int) -> None:
    if lab.max_label > k:
        raise AssertionError(f"search returned label {lab.max_label} > {k}")
    certify(g, PrValue("upper-bound", lab.max_label, "exact-search", lab))


@dataclass(frozen=True)
class ExactResult:
    """Outcome of :func:`min_coprime_number_exact`.

    ``value`` is exact when ``certified``; otherwise ``lower`` is the last
    label budget that could not be ruled out and ``value`` (if any) an upper
    bound.
    """

    status: str
    lower: int
    value: Optional[PrValue]
    nodes: int
    start_k: int

    @property
    def certified(self) -> bool:
        return self.status == "exact"


def min_coprime_number_exact(
    g: Graph, cfg: SearchConfig = SearchConfig(), alpha: Optional[int] = None
) -> ExactResult:
    """pr(G) by increasing k from the best available lower bound.

    The result is exact only when the search at k - 1 (or the lower bound)
    ruled out every smaller budget.
    """
    if alpha is None:
        alpha = independence_number(g)
    start = max(g.n, 1, lower_bound_independence(g, alpha).value)
    pm = lower_bound_prime_multiples(g, alpha) if g.n else None
    if pm is not None:
        start = max(start, pm.value)
    k, nodes = start, 0
    while True:
        if cfg.max_k is not None and k > cfg.max_k:
            return ExactResult("inconclusive", k, None, nodes, start)
        res = exists_labeling_with_max(g, k, cfg, alpha)
        nodes += res.nodes
        if res.status == FOUND:
            lab = res.labeling
            note = f"certified absent below {k}; search started at {start}"
            return ExactResult(
                "exact", k, PrValue("exact", lab.max_label, "exact-search", lab, note), nodes, start
            )
        if res.status == INCONCLUSIVE:
            return ExactResult("inconclusive", k, None, nodes, start)
        k += 1


# --- independence / clique numbers -------------------------------------------------


def _max_clique_size(masks: list[int], node_limit: Optional[int] = None) -> int:
    """Branch and bound with a greedy colouring bound (bitset variant of MCQ)."""
    n = len(masks)
    best = 0
    nodes = 0

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # returns (vertex, colour) in increasing colour order
        order = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~low & ~masks[v]
                rest &= ~low
                order.append((v, colour))
        return order

    def expand(cand: int, size: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _Limit
        order = colour_bound(cand)
        for v, c in reversed(order):
            if size + c <= best:
                return
            new = cand & masks[v]
            if new:
                expand(new, size + 1)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    if n:
        expand((1 << n) - 1, 0)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique_size(g.neighbor_masks())


def independence_number(g: Graph) -> int:
    return _max_clique_size(g.complement().neighbor_masks())
