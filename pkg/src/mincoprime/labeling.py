"""Labelings, the coprimality verifier, and generic bounds on pr(G)."""
from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .graphs import Graph
from .numtheory import nth_prime

KINDS = ("exact", "upper-bound", "lower-bound")
PROVENANCES = (
    "formula",
    "construction",
    "exact-search",
    "independence-bound",
    "prime-multiple-bound",
    "monotonicity",
)


class LabelingError(ValueError):
    pass


class CertificationError(AssertionError):
    """A lower bound exceeded an upper bound, or a witness failed to verify."""


@dataclass(frozen=True)
class Labeling:
    """Injective vertex -> label map; ``labels[v]`` is the label of vertex v."""

    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if any(x < 1 for x in self.labels):
            raise LabelingError("labels must be positive integers")
        if len(set(self.labels)) != len(self.labels):
            raise LabelingError("labels must be distinct")

    @property
    def max_label(self) -> int:
        return max(self.labels, default=0)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def to_json(self, graph: str = "edges", g: Optional[Graph] = None) -> str:
        doc = {"graph": graph, "labels": list(self.labels), "max": self.max_label}
        if graph == "edges" and g is not None:
            doc["n"] = g.n
            doc["edges"] = [list(e) for e in g.edges()]
        return json.dumps(doc)


@dataclass
class Verdict:
    bad_edges: list[tuple[int, int, int]] = field(default_factory=list)
    duplicates: list[tuple[int, list[int]]] = field(default_factory=list)
    nonpositive: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.bad_edges or self.duplicates or self.nonpositive)

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> list[str]:
        out = [f"vertices {vs} share label {lab}" for lab, vs in self.duplicates]
        out += [f"vertex {v} has non-positive label" for v in self.nonpositive]
        out += [f"edge ({u}, {v}) has gcd {d}" for u, v, d in self.bad_edges]
        return out


def verify_coprime_labeling(g: Graph, labels: Labeling | Sequence[int]) -> Verdict:
    """Check injectivity and gcd 1 across every edge; lists every violation.

    Accepts a raw sequence so that non-injective candidates can be diagnosed.
    """
    raw = labels.labels if isinstance(labels, Labeling) else tuple(labels)
    if len(raw) != g.n:
        raise LabelingError(f"labeling covers {len(raw)} vertices, graph has {g.n}")
    verdict = Verdict()
    seen: dict[int, list[int]] = defaultdict(list)
    for v, x in enumerate(raw):
        seen[x].append(v)
        if x < 1:
            verdict.nonpositive.append(v)
    verdict.duplicates = sorted((x, vs) for x, vs in seen.items() if len(vs) > 1)
    for u, v in g.edges():
        d = math.gcd(raw[u], raw[v])
        if d != 1:
            verdict.bad_edges.append((u, v, d))
    return verdict


@dataclass(frozen=True)
class PrValue:
    kind: str
    value: int
    provenance: str
    witness: Optional[Labeling] = None
    note: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.kind != "lower-bound":
            if self.witness is None:
                raise ValueError(f"{self.kind} value needs a witness")
            if self.witness.max_label != self.value:
                raise ValueError(
                    f"witness max {self.witness.max_label} != value {self.value}"
                )

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "value": self.value, "provenance": self.provenance}
        if self.witness is not None:
            d["labels"] = list(self.witness.labels)
        if self.note:
            d["note"] = self.note
        return d


def certify(g: Graph, value: PrValue) -> PrValue:
    """Re-verify a witness against ``g``; raise CertificationError on failure."""
    if value.witness is not None:
        verdict = verify_coprime_labeling(g, value.witness)
        if not verdict.ok:
            raise CertificationError("; ".join(verdict.describe()[:5]))
    return value


def check_consistency(values: Iterable[PrValue]) -> None:
    values = list(values)
    lows = [v for v in values if v.kind in ("lower-bound", "exact")]
    highs = [v for v in values if v.kind in ("upper-bound", "exact")]
    for lo in lows:
        for hi in highs:
            if lo.value > hi.value:
                raise CertificationError(
                    f"lower bound {lo.value} ({lo.provenance}) exceeds "
                    f"upper bound {hi.value} ({hi.provenance})"
                )


def lower_bound_independence(g: Graph, alpha: int) -> PrValue:
    """At most alpha labels are even, so at least n - alpha are odd."""
    value = max(2 * (g.n - alpha) - 1, g.n)
    return PrValue("lower-bound", value, "independence-bound", note=f"alpha={alpha}")


def prime_multiple_index(n: int, alpha: int) -> tuple[Optional[int], str]:
    """Index i of the bound p_i for a graph with n vertices and independence alpha.

    Returns ``(None, reason)`` when the bound is not certified: it needs
    alpha < sqrt(n) and p_ceil(sqrt n)^2 > p_n, checked numerically.
    """
    root = math.sqrt(n)
    if alpha >= root:
        return None, f"alpha={alpha} >= sqrt(n)={root:.3f}"
    c = math.isqrt(n - 1) + 1 if n > 1 else 1
    if nth_prime(c) ** 2 <= nth_prime(n):
        return None, f"p_{c}^2 = {nth_prime(c) ** 2} <= p_{n} = {nth_prime(n)}"
    # flooring the index only weakens the bound
    return max(1, math.floor(n - alpha * root)), ""


def lower_bound_prime_multiples(g: Graph, alpha: int) -> Optional[PrValue]:
    """Multiples of each of the first sqrt(n) primes occupy an independent set.

    Returns None when the certified hypotheses fail; see
    :func:`prime_multiple_index` for the reason.
    """
    index, _ = prime_multiple_index(g.n, alpha)
    if index is None:
        return None
    return PrValue(
        "lower-bound", nth_prime(index), "prime-multiple-bound", note=f"p_{index}, alpha={alpha}"
    )


def monotonicity_bound(g: Graph, h: Graph, pr_h: PrValue) -> PrValue:
    """A labeling of a spanning supergraph H is also a labeling of G."""
    if not g.is_spanning_subgraph_of(h):
        raise LabelingError("G is not a spanning subgraph of H")
    if pr_h.kind not in ("exact", "upper-bound") or pr_h.witness is None:
        raise LabelingError("pr(H) must carry a witness labeling")
    bound = PrValue("upper-bound", pr_h.value, "monotonicity", pr_h.witness, note="via supergraph")
    return certify(g, bound)
