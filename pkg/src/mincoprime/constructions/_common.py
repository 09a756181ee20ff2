from __future__ import annotations

from math import gcd
from typing import Iterable, Optional, Sequence

from ..graphs import Graph
from ..labeling import Labeling, verify_coprime_labeling


class ConstructionError(AssertionError):
    """A construction produced an invalid labeling or missed its formula."""


class PreconditionError(ValueError):
    """Parameters outside the range a construction is guaranteed to handle."""


def coprime_chain(seq: Sequence[int], closed: bool = False) -> bool:
    pairs = zip(seq, seq[1:])
    if not all(gcd(a, b) == 1 for a, b in pairs):
        return False
    return not closed or len(seq) < 3 or gcd(seq[0], seq[-1]) == 1


def verified(g: Graph, labels: Sequence[int]) -> Labeling:
    lab = Labeling(labels)
    verdict = verify_coprime_labeling(g, lab)
    if not verdict.ok:
        raise ConstructionError("; ".join(verdict.describe()[:5]))
    return lab


class _Exhausted(Exception):
    pass


def complete_sequence(
    pool: Iterable[int], length: int, closed: bool, node_limit: Optional[int] = 200_000
) -> Optional[list[int]]:
    """Order ``length`` labels from ``pool`` along a path (or cycle) with coprime neighbours.

    Depth-first search for a Hamiltonian path in the coprimality graph of the
    pool, extending one end and trying the label with the fewest free
    coprime partners first.  None if no ordering was found within the limit.
    """
    pool = sorted(set(pool))
    if length == 0:
        return []
    if len(pool) < length:
        return None
    closed = closed and length >= 3
    idx = {a: i for i, a in enumerate(pool)}
    nbr = [sum(1 << idx[b] for b in pool if b != a and gcd(a, b) == 1) for a in pool]
    exact_cover = len(pool) == length
    nodes = 0

    def extend(path: list[int], free: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _Exhausted
        last = path[-1]
        if len(path) == length:
            return not closed or nbr[last] >> path[0] & 1 == 1
        if exact_cover:
            # a free label with no free partner and no link to the path end is stranded
            stranded = 0
            rest = free
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                if not nbr[v] & free and not nbr[v] >> last & 1:
                    stranded += 1
            if stranded > (0 if closed else 1):
                return False
        options = []
        rest = nbr[last] & free
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            options.append(((nbr[v] & free).bit_count(), v))
        options.sort()
        for _, v in options:
            path.append(v)
            if extend(path, free & ~(1 << v)):
                return True
            path.pop()
        return False

    full = (1 << len(pool)) - 1
    starts = sorted(range(len(pool)), key=lambda v: (nbr[v] & full).bit_count())
    try:
        for v in starts:
            path = [v]
            if extend(path, full & ~(1 << v)):
                return [pool[i] for i in path]
    except _Exhausted:
        return None
    return None
