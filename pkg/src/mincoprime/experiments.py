"""Table and experiment runners shared by the command line and the demos.

Each runner returns an :class:`ExperimentReport`.  Rows keep the frozen CSV
columns (family, m, n, pr, provenance, certified, seconds) plus a free-form
``extra`` dict that only the JSON output carries.  Wall-clock times are left
out of the JSON unless asked for, so equal seeds give byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

import numpy as np

from . import graphs
from .constructions import (
    ANOMALIES,
    corona_labeling,
    corona_prime_condition,
    corona_value,
    in_exceptional_window,
    path_join_labeling,
    path_join_value,
    special_join_values,
)
from .constructions._common import PreconditionError
from .labeling import (
    CertificationError,
    lower_bound_independence,
    lower_bound_prime_multiples,
    prime_multiple_index,
)
from .numtheory import nth_prime
from .solver import SearchConfig, clique_number, independence_number, min_coprime_number_exact

CSV_COLUMNS = ("family", "m", "n", "pr", "provenance", "certified", "seconds")


@dataclass
class Row:
    family: str
    m: Optional[int]
    n: Optional[int]
    pr: Optional[int]
    provenance: str
    certified: bool
    seconds: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    def as_dict(self, timing: bool) -> dict[str, Any]:
        d = {c: getattr(self, c) for c in CSV_COLUMNS if c != "seconds"}
        if timing:
            d["seconds"] = round(self.seconds, 6)
        d.update(self.extra)
        return d


@dataclass
class ExperimentReport:
    command: str
    parameters: dict[str, Any]
    rows: list[Row] = field(default_factory=list)
    seed: Optional[int] = None
    aggregates: dict[str, Any] = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> str:
        doc = {
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "rows": [r.as_dict(timing) for r in self.rows],
            "aggregates": self.aggregates,
        }
        return json.dumps(doc, indent=1, sort_keys=True)

    def to_csv(self, timing: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow(
                [
                    r.family,
                    "" if r.m is None else r.m,
                    "" if r.n is None else r.n,
                    "" if r.pr is None else r.pr,
                    r.provenance,
                    str(r.certified).lower(),
                    f"{r.seconds:.6f}" if timing else "",
                ]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"# {self.command} {json.dumps(self.parameters, sort_keys=True)}"]
        for r in self.rows:
            flag = " *" if r.extra.get("flagged") else ""
            lines.append(
                f"{r.family:<28} m={_blank(r.m):>4} n={_blank(r.n):>4} "
                f"pr={_blank(r.pr):>5} {r.provenance:<14} certified={r.certified}{flag}"
            )
        for k, v in sorted(self.aggregates.items()):
            lines.append(f"{k}: {v}")
        return "\n".join(lines)


def _blank(x) -> str:
    return "-" if x is None else str(x)


def _consistent(family: str, lower: Iterable[Optional[int]], value: Optional[int], upper: Iterable[Optional[int]]):
    lo = max((x for x in lower if x is not None), default=None)
    hi = min((x for x in upper if x is not None), default=None)
    if value is not None and ((lo is not None and value < lo) or (hi is not None and value > hi)):
        raise CertificationError(f"{family}: value {value} outside [{lo}, {hi}]")
    if lo is not None and hi is not None and lo > hi:
        raise CertificationError(f"{family}: lower bound {lo} exceeds upper bound {hi}")


# --- corona tables ---------------------------------------------------------------


def corona_table(n_max: int, m_max: int) -> ExperimentReport:
    rep = ExperimentReport("table corona", {"n_max": n_max, "m_max": m_max})
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            t = time.perf_counter()
            val = corona_labeling(n, m)
            rep.rows.append(
                Row(
                    f"corona(K({n}),E({m}))", m, n, val.value, val.provenance, True,
                    time.perf_counter() - t, {"prime": val.value == n * (m + 1)},
                )
            )
    return rep


def conjecture1_table(m_max: int, n_max: int = 200) -> ExperimentReport:
    """Largest n with n <= pi(n(m+1)) + 1, for each m <= m_max.

    Every n <= n_max is checked against the closed form p_{n-1} <= mn + n
    (``corona_prime_condition`` raises on a disagreement).
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    rep = ExperimentReport("table conjecture1", {"m_max": m_max, "n_max": n_max})
    checked = 0
    for m in range(1, m_max + 1):
        t = time.perf_counter()
        holds = [corona_prime_condition(n, m) for n in range(1, n_max + 1)]
        checked += len(holds)
        largest = max(n for n, ok in enumerate(holds, start=1) if ok)
        contiguous = all(holds[:largest])
        rep.rows.append(
            Row(
                f"corona(K(n),E({m}))", m, largest, corona_value(largest, m), "formula", True,
                time.perf_counter() - t, {"contiguous": contiguous, "capped": largest == n_max},
            )
        )
    rep.aggregates = {"pairs_checked": checked, "discrepancies": 0}
    return rep


# --- path joins ------------------------------------------------------------------


def path_join_sweep(
    n_range: Iterable[int],
    m_range: Iterable[int],
    exact_vertices: int = 17,
    cfg: SearchConfig = SearchConfig(),
) -> ExperimentReport:
    """Formula, construction and (for small joins) exact values of pr(P_m + P_n).

    A row is flagged when the best certified value exceeds the naive value
    m + 2n - 2 / m + 2n - 1.
    """
    n_list, m_list = list(n_range), list(m_range)
    rep = ExperimentReport(
        "table pathjoin",
        {"n": n_list, "m": m_list, "exact_vertices": exact_vertices},
    )
    flagged = []
    for n in n_list:
        for m in m_list:
            if m < n:
                continue
            t = time.perf_counter()
            naive = path_join_value(m, n)
            constructed = None
            try:
                constructed = (
                    special_join_values(m, n) if in_exceptional_window(m, n) else path_join_labeling(m, n)
                )
            except PreconditionError:
                pass
            exact = None
            status = "skipped"
            if m + n <= exact_vertices:
                res = min_coprime_number_exact(graphs.join(graphs.path(m), graphs.path(n)), cfg)
                status = res.status
                exact = res.value.value if res.certified else None
            lower = lower_bound_independence(graphs.join(graphs.path(m), graphs.path(n)), (m + 1) // 2).value
            best = exact if exact is not None else (constructed.value if constructed else None)
            _consistent(f"P_{m} + P_{n}", [lower], exact, [constructed.value if constructed else None])
            covered = not in_exceptional_window(m, n)
            is_flagged = best is not None and best > naive
            if is_flagged:
                flagged.append([m, n])
            rep.rows.append(
                Row(
                    f"join(P({m}),P({n}))", m, n, best,
                    "exact-search" if exact is not None else (constructed.provenance if constructed else "none"),
                    exact is not None or (constructed is not None and constructed.kind == "exact"),
                    time.perf_counter() - t,
                    {
                        "formula": naive if covered else None,
                        "naive": naive,
                        "constructed": constructed.value if constructed else None,
                        "exact": exact,
                        "exact_status": status,
                        "flagged": is_flagged,
                    },
                )
            )
    rep.aggregates = {"flagged": flagged, "known_anomalies": sorted([list(k) for k in ANOMALIES])}
    return rep


# --- random graphs ---------------------------------------------------------------


def trial_seeds(seed: int, trials: int) -> list[int]:
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(trials)]


def random_pr_experiment(
    n: int,
    p: float,
    trials: int,
    seed: int,
    cfg: SearchConfig = SearchConfig(),
    exact_cap: int = 14,
) -> ExperimentReport:
    """Bounds and (for n <= exact_cap) exact pr on seeded G(n, p) samples."""
    rep = ExperimentReport(
        "random", {"n": n, "p": p, "trials": trials, "exact_cap": exact_cap}, seed=seed
    )
    solved, nonprime, ratios = 0, 0, []
    upper = nth_prime(n - 1) if n > 1 else 1
    for i, s in enumerate(trial_seeds(seed, trials)):
        t = time.perf_counter()
        g = graphs.gnp(n, p, s)
        alpha, omega = independence_number(g), clique_number(g)
        ind = lower_bound_independence(g, alpha).value
        pm = lower_bound_prime_multiples(g, alpha)
        _, pm_reason = prime_multiple_index(n, alpha)
        exact, status = None, "skipped"
        if n <= exact_cap:
            res = min_coprime_number_exact(g, cfg, alpha=alpha)
            status = res.status
            if res.certified:
                exact = res.value.value
                solved += 1
                nonprime += exact > n
                ratios.append(exact / (n * math.log(n)))
        family = f"GNP({n},{p!r},{s})"
        _consistent(family, [n, ind, pm.value if pm else None], exact, [upper])
        rep.rows.append(
            Row(
                family, None, n, exact, "exact-search" if exact is not None else "none",
                exact is not None, time.perf_counter() - t,
                {
                    "trial": i,
                    "edges": g.num_edges,
                    "alpha": alpha,
                    "omega": omega,
                    "independence_bound": ind,
                    "prime_multiple_bound": pm.value if pm else None,
                    "prime_multiple_note": pm_reason,
                    "upper_bound": upper,
                    "exact_status": status,
                },
            )
        )
    rep.aggregates = {
        "solved": solved,
        "nonprime_fraction": nonprime / solved if solved else None,
        "mean_pr_over_nlogn": round(float(np.mean(ratios)), 6) if ratios else None,
    }
    return rep
