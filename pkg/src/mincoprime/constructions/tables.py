"""Regenerate ``data/join_witnesses.json``.

Small path joins (n <= 4 below the pipeline threshold) and the three
anomalous joins have no printed labeling; their witnesses come from exact
search and are stored so that construction stays instantaneous.

    python -m mincoprime.constructions.tables
"""
from __future__ import annotations

import json
from pathlib import Path

from .. import graphs
from ..solver import min_coprime_number_exact
from .pathjoin import ANOMALIES, path_join_value, threshold

DATA = Path(__file__).with_name("data") / "join_witnesses.json"


def small_join_cases() -> list[tuple[int, int]]:
    cases = [(m, n) for n in (2, 3, 4) for m in range(n, threshold(n))]
    return cases + sorted(ANOMALIES)


def generate() -> dict:
    rows = []
    for m, n in small_join_cases():
        res = min_coprime_number_exact(graphs.join(graphs.path(m), graphs.path(n)))
        expected = ANOMALIES.get((m, n), path_join_value(m, n))
        if not res.certified or res.value.value != expected:
            raise AssertionError(f"P_{m} + P_{n}: search gave {res}, expected {expected}")
        labels = res.value.witness.labels
        rows.append({"m": m, "n": n, "pr": expected, "long": labels[:m], "short": labels[m:]})
    return {"path_joins": rows}


def main() -> None:
    DATA.parent.mkdir(exist_ok=True)
    DATA.write_text(json.dumps(generate(), indent=1) + "\n")
    print(f"wrote {DATA}")


if __name__ == "__main__":
    main()
