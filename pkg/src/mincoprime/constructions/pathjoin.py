"""Minimum coprime labelings of joins of two paths, P_m + P_n.

Vertex order follows ``graphs.join(path(m), path(n))``: the P_m vertices
come first, in path order, then the P_n vertices.

For large m the labeling comes from a staged pipeline.  With target
L = 2*ceil((m-1)/2) + 2n - 1, the P_n side gets 1 and n-1 primes q_1 < ... <
q_{n-1} from (L/2, L], which are coprime to every other label up to L.  The
P_m side is the list 2..L with the q removed, and each stage deletes one
even neighbour of q_i so that the survivors alternate coprimely across the
gap q_i left behind.  Every stage is checked as it runs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd
from typing import Optional

from .. import graphs
from ..labeling import PrValue
from ..numtheory import lemma11_witness, primes_up_to, ramanujan_prime
from ._common import (
    ConstructionError,
    PreconditionError,
    coprime_chain,
    complete_sequence,
    verified,
)

# P_m + P_5 for 5 <= m <= 19: (P_5 labels, P_m labels, valid m range)
P5_CASES = [
    ((1, 3, 5, 9, 13), (2, 7, 4, 11, 8), range(5, 6)),
    ((3, 5, 9, 1, 15), (2, 7, 4, 11, 8, 13, 14, 17, 16, 19), range(6, 11)),
    (
        (1, 11, 13, 17, 19),
        (2, 3, 4, 5, 6, 7, 8, 9, 14, 15, 16, 21, 10, 23, 12, 25, 24),
        range(11, 18),
    ),
    # 12 and 11 replace 26 and 9 at positions 7 and 8, and 9 moves to position
    # 10: 26 shares the factor 13 with the P_5 side
    (
        (1, 13, 17, 19, 23),
        (2, 3, 4, 5, 6, 7, 12, 11, 10, 9, 14, 15, 16, 21, 22, 25, 8, 27, 20),
        range(18, 20),
    ),
]

# labelings for n = 6, 7 inside the window where the lower bound is attained:
# (n, short path labels, long path labels, m values)
WINDOW_LABELINGS = [
    (6, (3, 5, 9, 1, 15, 11), (2, 7, 4, 17, 8, 13, 14, 19, 16), (6, 7, 8, 9)),
    (7, (3, 5, 9, 1, 15, 11, 13), (2, 7, 4, 17, 8, 19, 16), (7,)),
    (7, (3, 5, 9, 7, 15, 1, 21), (2, 11, 4, 13, 8, 17, 16, 19, 22, 23), (8, 10)),
]

# pr(P_m + P_n) where the lower bound is not attained
ANOMALIES = {(10, 6): 23, (11, 6): 23, (9, 7): 22}

PATCH_PREFIX = (11, 12, 5, 4, 3, 8, 7, 6, 13, 10, 9, 14)


def path_join_value(m: int, n: int) -> int:
    """m + 2n - 2 for odd m, m + 2n - 1 for even m (m is the longer path)."""
    return m + 2 * n - 2 if m % 2 else m + 2 * n - 1


def threshold(n: int) -> int:
    """Smallest m covered by the general pipeline: R_{n-1} - 2n + 1 (n >= 3)."""
    if n <= 2:
        return n
    return max(n, ramanujan_prime(n - 1) - 2 * n + 1)


def in_exceptional_window(m: int, n: int) -> bool:
    m, n = max(m, n), min(m, n)
    return n >= 6 and m < threshold(n)


@dataclass
class PathJoinState:
    """Working state of the staged construction (kept for inspection)."""

    L: int
    q: list[int]
    ell: int
    S: list[int] = field(default_factory=list)
    i: int = 0
    deleted: list[int] = field(default_factory=list)
    sizes: list[int] = field(default_factory=list)
    cases: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def delete(self, x: int) -> None:
        if x not in self.S:
            raise ConstructionError(f"stage {self.i}: {x} is not in S")
        self.S.remove(x)
        self.deleted.append(x)

    def check_stage(self, cutoff: Optional[int]) -> None:
        """|S_i| = L - n - i + 1, and survivors below ``cutoff`` alternate coprimely."""
        n = len(self.q) + 1
        if len(self.S) != self.L - n - self.i + 1:
            raise ConstructionError(f"stage {self.i}: |S| = {len(self.S)}")
        for a, b in zip(self.S, self.S[1:]):
            if (cutoff is None or (a < cutoff and b < cutoff)) and gcd(a, b) != 1:
                raise ConstructionError(f"stage {self.i}: neighbours {a}, {b} share a factor")
        self.sizes.append(len(self.S))


def choose_primes(L: int, n: int) -> tuple[list[int], int]:
    """The n-1 largest primes <= L, all above L/2, with one avoiding +-1 mod 11.

    Returns (q ascending, ell) where q[ell] is the first prime not congruent
    to 1 or 10 mod 11.
    """
    big = [p for p in primes_up_to(L) if 2 * p > L]
    if len(big) < n - 1:
        raise PreconditionError(f"only {len(big)} primes in ({L}/2, {L}], need {n - 1}")
    q = big[len(big) - (n - 1) :] if n > 1 else []
    if q and all(p % 11 in (1, 10) for p in q):
        w = lemma11_witness(L // 2)
        q = sorted([w] + q[1:])
    ell = next(j for j, p in enumerate(q) if p % 11 not in (1, 10))
    return q, ell


def _stage_delete(st: PathJoinState, qi: int, twin_below: bool) -> None:
    """Remove one neighbour of the gap at qi (one of qi+1, qi-1, qi-3)."""
    if not twin_below:
        st.cases.append("mod3")
        st.delete(qi + 1 if (qi + 2) % 3 else qi - 1)
    else:
        st.cases.append("mod5")
        st.delete(qi + 1 if (qi + 2) % 5 else qi - 3)


def staged_list(m: int, n: int) -> tuple[PathJoinState, list[int]]:
    """Run the deletion stages; returns (state, P_n labels).

    ``state.S`` is the final list S_n, or empty when q_1 > m + 1 makes the
    stages unnecessary (noted in ``state.notes``).
    """
    L = path_join_value(m, n)
    q, ell = choose_primes(L, n)
    st = PathJoinState(L=L, q=q, ell=ell)
    side = [1] + q
    if q[0] > m + 1:
        st.notes.append("short-circuit: q_1 > m + 1")
        return st, side

    qs = set(q)
    st.S = [x for x in range(2, L + 1) if x not in qs]
    st.i = 1
    st.check_stage(q[0])
    for i in range(1, n - 1):
        qi, qn = q[i - 1], q[i]
        qp = q[i - 2] if i > 1 else None
        if qn > qi + 2 and (i == 1 or qi > qp + 2):
            _stage_delete(st, qi, twin_below=False)
        elif qn == qi + 2:
            st.cases.append("twin")
            st.delete(qi + 1)
        elif qn > qi + 2 and i > 1 and qi == qp + 2:
            _stage_delete(st, qi, twin_below=True)
        else:
            raise ConstructionError(f"stage {i}: no case applies to q = {q}")
        st.i = i + 1
        st.check_stage(qn)

    last = q[-1]
    if last != L:
        _stage_delete(st, last, twin_below=(last - 2) in qs)
        st.i = n
        st.check_stage(None)
    if not coprime_chain(st.S):
        raise ConstructionError("final list is not coprime along the path")
    return st, side


def run_pipeline(m: int, n: int) -> tuple[list[int], list[int], PathJoinState]:
    """Staged construction; returns (P_m labels, P_n labels, state).

    Raises ConstructionError when a check fails and PreconditionError when
    the primes or the odd-m patch are unavailable.
    """
    st, side = staged_list(m, n)
    if not st.S:
        return list(range(2, m + 2)), side, st
    L, q, ell = st.L, st.q, st.ell
    if q[-1] == L or m % 2 == 0:
        if len(st.S) < m:
            raise ConstructionError(f"final list has {len(st.S)} < {m} labels")
        return st.S[:m], side, st

    # odd m, one label short: reinsert a deleted neighbour x of q_ell with 11 !| x
    x = next((d for d in st.deleted if abs(d - q[ell]) == 1 and d % 11), None)
    if x is None:
        raise ConstructionError(f"no deleted neighbour of q_ell = {q[ell]} is free of 11")
    if q[0] <= 23:
        raise PreconditionError(f"patch needs q_1 > 23, got {q[0]}")
    tail = [y for y in st.S if y >= 15]
    seq = [x, *PATCH_PREFIX, *tail, 2]
    if len(seq) != m or sorted(seq) != sorted(st.S + [x]):
        raise ConstructionError("patched sequence does not reuse the final list")
    st.notes.append(f"odd-m patch with x = {x}")
    return seq, side, st


def _pool(top: int, side: list[int]) -> list[int]:
    taken = set(side)
    return [
        x
        for x in range(1, top + 1)
        if x not in taken and all(gcd(x, y) == 1 for y in side)
    ]


def _join_labels(pm: list[int], pn: list[int], swapped: bool) -> list[int]:
    return pn + pm if swapped else pm + pn


@lru_cache(maxsize=None)
def _table() -> dict[tuple[int, int], tuple[tuple[int, ...], tuple[int, ...]]]:
    """Shipped witnesses (derived by exact search) for small and anomalous joins."""
    raw = json.loads(resources.files(__package__).joinpath("data/join_witnesses.json").read_text())
    return {(e["m"], e["n"]): (tuple(e["long"]), tuple(e["short"])) for e in raw["path_joins"]}


def _finish(m: int, n: int, pm, pn, swapped: bool, target: int, provenance: str, note: str):
    g = graphs.join(graphs.path(n), graphs.path(m)) if swapped else graphs.join(
        graphs.path(m), graphs.path(n)
    )
    lab = verified(g, _join_labels(list(pm), list(pn), swapped))
    if lab.max_label != target:
        raise ConstructionError(f"P_{m} + P_{n}: max {lab.max_label} != {target}")
    return PrValue("exact", target, provenance, lab, note=note)


def path_join_labeling(m: int, n: int) -> PrValue:
    """pr(P_m + P_n) with a verified witness on the formula's range.

    Covered: n in {2, 3, 4} for every m >= n; n = 5 for m >= 5; n >= 6 for
    m >= R_{n-1} - 2n + 1.  Arguments are swapped when m < n, and the
    labeling is laid out for the graph ``join(path(m), path(n))`` as given.
    """
    swapped = m < n
    if swapped:
        m, n = n, m
    if n < 2:
        raise PreconditionError("both paths need at least 2 vertices")
    target = path_join_value(m, n)
    if n == 5 and m < 20:
        pn, pm = _p5_sequences(m)
        return _finish(m, n, pm, pn, swapped, target, "construction", "hardcoded P_5 case")
    if m >= threshold(n):
        try:
            pm, pn, st = run_pipeline(m, n)
            note = "; ".join(["staged construction"] + st.notes)
            return _finish(m, n, pm, pn, swapped, target, "construction", note)
        except (ConstructionError, PreconditionError) as exc:
            repaired = _repair(m, n, target)
            if repaired is not None:
                pm, pn = repaired
                note = f"staged construction repaired by search ({exc})"
                return _finish(m, n, pm, pn, swapped, target, "construction", note)
    if (m, n) in _table() and n <= 4:
        pm, pn = _table()[(m, n)]
        return _finish(m, n, pm, pn, swapped, target, "exact-search", "shipped witness")
    raise PreconditionError(f"P_{m} + P_{n} is outside the covered range")


def _repair(m: int, n: int, target: int) -> Optional[tuple[list[int], list[int]]]:
    """Keep the prime side, order the P_m labels by search."""
    try:
        q, _ = choose_primes(target, n)
    except PreconditionError:
        return None
    side = [1] + q
    seq = complete_sequence(_pool(target, side), m, closed=False)
    return None if seq is None else (seq, side)


def _p5_sequences(m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    for p5, long_seq, ms in P5_CASES:
        if m in ms:
            return p5, long_seq[:m]
    raise PreconditionError(f"no hardcoded P_5 case for m = {m}")


def path_join_p5_labeling(m: int) -> PrValue:
    """pr(P_m + P_5): hardcoded labelings for 5 <= m <= 19, the pipeline beyond."""
    if m < 5:
        raise PreconditionError(f"m must be >= 5, got {m}")
    return path_join_labeling(m, 5)


def special_join_values(m: int, n: int) -> Optional[PrValue]:
    """Values of pr(P_m + P_n) inside the exceptional windows for n = 6, 7.

    Printed labelings are used where they exist; the three anomalous cases
    carry shipped witnesses whose minimality is certified by exhaustive search.
    """
    swapped = m < n
    if swapped:
        m, n = n, m
    if (m, n) in ANOMALIES:
        pm, pn = _table()[(m, n)]
        note = "value exceeds the independence bound; witness from exact search"
        return _finish(m, n, pm, pn, swapped, ANOMALIES[(m, n)], "exact-search", note)
    for size, short, long_seq, ms in WINDOW_LABELINGS:
        if size == n and m in ms:
            target = path_join_value(m, n)
            return _finish(m, n, long_seq[:m], short, swapped, target, "construction", "window labeling")
    return None
