"""Joins involving cycles: C_m + C_n, C_m + P_n and P_m + C_n.

All three start from the path-join labeling.  The short side carries 1 and
primes, so closing it into a cycle is always safe.  Closing the long side is
free for even m (its ends are 2 and an odd label); for odd m the top label
grows by two and the end of the staged list is rewritten.
"""
from __future__ import annotations

from math import gcd
from typing import Optional

from .. import graphs
from ..labeling import PrValue
from ..numtheory import is_prime
from ._common import ConstructionError, PreconditionError, complete_sequence, verified
from .pathjoin import _pool, choose_primes, path_join_labeling, path_join_value, staged_list, threshold

VARIANTS = ("CC", "CP", "PC")


def cycle_join_value(m: int, n: int, variant: str) -> int:
    """m + 2n - 1 for even m; for odd m, m + 2n (cycle of length m) or m + 2n - 2 (path)."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if m % 2 == 0:
        return m + 2 * n - 1
    return m + 2 * n - 2 if variant == "PC" else m + 2 * n


def cycle_join_graph(m: int, n: int, variant: str) -> graphs.Graph:
    long_side = graphs.cycle(m) if variant in ("CC", "CP") else graphs.path(m)
    short_side = graphs.cycle(n) if variant in ("CC", "PC") else graphs.path(n)
    return graphs.join(long_side, short_side)


def _check_range(m: int, n: int, variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if variant in ("CC", "CP") and m < 3:
        raise PreconditionError(f"C_m needs m >= 3, got {m}")
    if variant in ("CC", "PC") and n < 3:
        raise PreconditionError(f"C_n needs n >= 3, got {n}")
    if n < 2 or m < max(n, threshold(n)):
        raise PreconditionError(
            f"({m}, {n}) is outside the covered range m >= max(n, {threshold(n)})"
        )


def odd_cycle_sequence(m: int, n: int) -> tuple[list[int], list[int], str]:
    """Labels for C_m (odd m) with top label m + 2n, built from the staged list.

    Returns (C_m labels in cycle order, P_n labels, case name).
    """
    st, side = staged_list(m, n)
    if not st.S:
        raise PreconditionError("no staged list (short-circuit case)")
    L, S = st.L, st.S
    top = L + 2
    if st.q[-1] != L:
        if len(S) != m - 1 or S[-1] != L:
            raise ConstructionError(f"expected m - 1 labels ending in {L}")
        return S + [top], side, "append"
    if len(S) != m:
        raise ConstructionError(f"expected {m} labels, got {len(S)}")
    if not is_prime(L - 2):
        if S[-2:] != [L - 2, L - 1]:
            raise ConstructionError(f"list ends {S[-2:]}, expected {[L - 2, L - 1]}")
        return S[:-1] + [top], side, "replace L-1"
    if S[-2:] != [L - 4, L - 3]:
        raise ConstructionError(f"list ends {S[-2:]}, expected {[L - 4, L - 3]}")
    # L - 2 and L are twin primes above 3, so 3 | L + 2 and L + 2 cannot
    # simply replace L - 3
    if top % 3:
        raise ConstructionError(f"twin primes {L - 2}, {L} with 3 !| {top}")
    if S[:5] != [2, 3, 4, 5, 6]:
        raise ConstructionError(f"list starts {S[:5]}, cannot rearrange the seam")
    # the cycle now reads ..., L-4, 2, L+2, 4, 3, 5, 6, ...
    return [2, top, 4, 3, 5, 6] + S[5:-1], side, "seam rearranged"


def _search_fallback(m: int, n: int, target: int) -> Optional[tuple[list[int], list[int]]]:
    q, _ = choose_primes(path_join_value(m, n), n)
    side = [1] + q
    seq = complete_sequence(_pool(target, side), m, closed=True)
    return None if seq is None else (seq, side)


def cycle_join_labeling(m: int, n: int, variant: str) -> PrValue:
    """Exact pr of C_m + C_n, C_m + P_n or P_m + C_n with a verified witness.

    ``variant`` names the long factor first: "CP" is C_m + P_n.  Vertex order
    follows ``cycle_join_graph``.
    """
    _check_range(m, n, variant)
    target = cycle_join_value(m, n, variant)
    g = cycle_join_graph(m, n, variant)
    closes_long = variant != "PC"
    pm: Optional[list[int]] = None
    note = ""
    if not closes_long or m % 2 == 0:
        base = path_join_labeling(m, n).witness.labels
        if not closes_long or gcd(base[0], base[m - 1]) == 1:
            pm, pn = list(base[:m]), list(base[m:])
            note = "path-join labeling with ends closed"
    else:
        try:
            pm, pn, case = odd_cycle_sequence(m, n)
            note = f"staged list, {case}"
        except (ConstructionError, PreconditionError) as exc:
            note = f"({exc}) "
    if pm is None:
        found = _search_fallback(m, n, target)
        if found is None:
            raise ConstructionError(f"{variant} ({m}, {n}): no labeling with max {target}")
        pm, pn = found
        note += "long side ordered by search"
    lab = verified(g, pm + pn)
    if lab.max_label != target:
        raise ConstructionError(f"{variant} ({m}, {n}): max {lab.max_label} != {target}")
    return PrValue("exact", target, "construction", lab, note=note)
