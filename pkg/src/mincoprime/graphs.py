"""Simple undirected graphs and the families used throughout the package.

Vertex identity is the index ``0..n-1``.  The indexing conventions of
:func:`join` and :func:`corona` are fixed so that labelings serialize stably:

* ``join(G, H)``: G keeps ``0..|G|-1``, H is shifted by ``|G|``.
* ``corona(G, H)``: G keeps ``0..|G|-1``; copy ``i`` of H occupies the block
  starting at ``|G| + i*|H|`` and is attached to vertex ``i`` of G.
* ``complete_bipartite(m, n)``: parts ``[0, m)`` and ``[m, m+n)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


class GraphError(ValueError):
    """Invalid graph data or out-of-range family parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield u, v

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def complement(self) -> "Graph":
        everyone = frozenset(range(self.n))
        return Graph(self.n, tuple(everyone - a - {v} for v, a in enumerate(self.adjacency)))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        order = list(vertices)
        pos = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(
            len(order),
            ((pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos),
        )

    def is_spanning_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self.adjacency, other.adjacency))

    def neighbor_masks(self) -> list[int]:
        """Adjacency as one int bitmask per vertex."""
        return [sum(1 << u for u in a) for a in self.adjacency]

    def validate(self) -> None:
        for v, a in enumerate(self.adjacency):
            if v in a:
                raise GraphError(f"self-loop at {v}")
            for u in a:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric edge ({v}, {u})")

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(n: int) -> Graph:
    _check(n >= 1, f"P(n) needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _check(n >= 3, f"C(n) needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete(n: int) -> Graph:
    _check(n >= 1, f"K(n) needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    _check(n >= 1, f"E(n) needs n >= 1, got {n}")
    return Graph.from_edges(n, ())


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_edges(
        g.n + h.n, list(g.edges()) + [(u + shift, v + shift) for u, v in h.edges()]
    )


def join(g: Graph, h: Graph) -> Graph:
    """G + H: disjoint union plus every edge between G and H."""
    shift = g.n
    cross = ((u, shift + v) for u in range(g.n) for v in range(h.n))
    return Graph.from_edges(
        g.n + h.n,
        itertools.chain(g.edges(), ((u + shift, v + shift) for u, v in h.edges()), cross),
    )


def corona(g: Graph, h: Graph) -> Graph:
    """G (.) H: vertex i of G is joined to every vertex of the i-th copy of H."""
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        edges.extend((base + u, base + v) for u, v in h.edges())
        edges.extend((i, base + v) for v in range(h.n))
    return Graph.from_edges(g.n * (1 + h.n), edges)


def complete_bipartite(m: int, n: int) -> Graph:
    _check(m >= 1 and n >= 1, f"Kbip(m,n) needs m, n >= 1, got ({m}, {n})")
    return Graph.from_edges(m + n, ((u, m + v) for u in range(m) for v in range(n)))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    Uses numpy's PCG64 (``np.random.default_rng(seed)``): one uniform draw per
    pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1); the pair is an
    edge when its draw is below ``p``.
    """
    _check(n >= 1, f"GNP needs n >= 1, got {n}")
    _check(0.0 < p < 1.0, f"GNP needs 0 < p < 1, got {p}")
    pairs = list(itertools.combinations(range(n), 2))
    draws = np.random.default_rng(seed).random(len(pairs))
    return Graph.from_edges(n, (pr for pr, d in zip(pairs, draws) if d < p))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n\\nu v\\n..."`` (0-based indices; blank lines and # comments skipped)."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 1:
        raise GraphError("edge list must start with a line holding the vertex count")
    for r in rows[1:]:
        if len(r) != 2:
            raise GraphError(f"edge line must hold two indices, got {' '.join(r)!r}")
    try:
        n = int(rows[0][0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return Graph.from_edges(n, edges)
