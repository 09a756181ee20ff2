"""Minimum coprime labelings of graphs.

A coprime labeling gives distinct positive integers to the vertices so that
adjacent vertices get coprime labels; pr(G) is the smallest possible largest
label.  The package provides graph families, a verifier, lower bounds,
explicit constructions and an exact search.
"""
from .family import build_family, parse_family
from .graphs import Graph
from .labeling import Labeling, PrValue, verify_coprime_labeling
from .solver import (
    SearchConfig,
    clique_number,
    exists_labeling_with_max,
    independence_number,
    min_coprime_number_exact,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Labeling",
    "PrValue",
    "SearchConfig",
    "build_family",
    "clique_number",
    "exists_labeling_with_max",
    "independence_number",
    "min_coprime_number_exact",
    "parse_family",
    "verify_coprime_labeling",
]
