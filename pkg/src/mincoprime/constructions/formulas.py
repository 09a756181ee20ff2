"""Closed-form values of pr for the families the library covers.

Every value comes with a witness produced by the matching construction and
re-verified against the graph the expression builds.
"""
from __future__ import annotations

from typing import Optional, Union

from ..family import Atom, BinOp, FamilyExpr, build, parse_family
from ..labeling import Labeling, PrValue, verify_coprime_labeling
from ..numtheory import nth_prime
from ._common import ConstructionError
from .corona import corona_labeling, corona_value
from .cycles import cycle_join_labeling, cycle_join_value
from .pathjoin import path_join_labeling, path_join_value, threshold


def _atom(e: FamilyExpr, *kinds: str) -> bool:
    return isinstance(e, Atom) and e.kind in kinds


def _complete_labels(n: int) -> list[int]:
    return [1] + [nth_prime(i) for i in range(1, n)]


def explain_formula(expr: Union[str, FamilyExpr]) -> tuple[Optional[PrValue], str]:
    """(value, condition used) for a covered family, else (None, reason)."""
    e = parse_family(expr) if isinstance(expr, str) else expr
    value, reason = _dispatch(e)
    if value is None:
        return None, reason
    verdict = verify_coprime_labeling(build(e), value.witness)
    if not verdict.ok:
        raise ConstructionError(f"{e}: formula witness fails: {verdict.describe()[:3]}")
    return PrValue("exact", value.value, "formula", value.witness, note=reason), reason


def pr_formula(expr: Union[str, FamilyExpr]) -> Optional[PrValue]:
    return explain_formula(expr)[0]


def _dispatch(e: FamilyExpr) -> tuple[Optional[PrValue], str]:
    if isinstance(e, Atom):
        return _atom_value(e)
    if e.op == "corona":
        if _atom(e.left, "K") and _atom(e.right, "E"):
            n, m = e.left.params[0], e.right.params[0]
            cond = f"corona of K_{n} by E_{m}: max(mn + n, p_(n-1)) = {corona_value(n, m)}"
            return corona_labeling(n, m), cond
        return None, "no closed form for this corona"
    return _join_value(e)


def _atom_value(e: Atom) -> tuple[Optional[PrValue], str]:
    if e.kind in ("P", "C", "E"):
        n = e.params[0]
        return _witness(list(range(1, n + 1))), f"{e.kind}_{n} is prime"
    if e.kind == "K":
        n = e.params[0]
        return _witness(_complete_labels(n)), f"pr(K_{n}) = p_(n-1)"
    if e.kind == "Kbip":
        return None, "only an upper bound is known for complete bipartite graphs"
    return None, "random graphs have no closed form"


def _witness(labels: list[int]) -> PrValue:
    lab = Labeling(labels)
    return PrValue("exact", lab.max_label, "construction", lab)


def _join_value(e: BinOp) -> tuple[Optional[PrValue], str]:
    left, right = e.left, e.right
    if not (_atom(left, "P", "C") and _atom(right, "P", "C")):
        return None, "no closed form for this join"
    a, b = left.params[0], right.params[0]
    swapped = a < b
    sides = [(left.kind, a), (right.kind, b)]
    if swapped:
        sides.reverse()
    (long_kind, m), (short_kind, n) = sides

    if n == 1:
        if long_kind == "C":
            return None, "no closed form for a wheel"
        # fan: the single vertex takes 1
        labels = list(range(2, m + 2)) + [1]
        return _witness(labels[m:] + labels[:m] if swapped else labels), "P_m + P_1 is prime"

    variant = long_kind + short_kind
    if n >= 6 and m < threshold(n):
        return None, (
            f"inside the exceptional window {n} <= m <= {threshold(n) - 1}, "
            "where the formula can fail"
        )
    if variant == "PP":
        val = path_join_labeling(a, b)
        cond = f"m + 2n - {2 if m % 2 else 1} = {path_join_value(m, n)}"
        return val, f"path join, n <= 5 or m >= R_(n-1) - 2n + 1; {cond}"
    if m < threshold(n) or (short_kind == "C" and n < 3):
        return None, f"cycle join below the covered range m >= {threshold(n)}"
    val = cycle_join_labeling(m, n, variant)
    labels = list(val.witness.labels)
    if swapped:
        labels = labels[m:] + labels[:m]
    cond = f"{variant} join, m >= max(n, R_(n-1) - 2n + 1); value {cycle_join_value(m, n, variant)}"
    return _witness(labels), cond
