"""Randomized properties checked against the brute-force oracles."""
from hypothesis import given, settings, strategies as st

from mincoprime import graphs
from mincoprime.constructions import (
    VARIANTS,
    corona_labeling,
    cycle_join_graph,
    cycle_join_labeling,
    path_join_labeling,
    path_join_value,
    threshold,
)
from mincoprime.labeling import (
    lower_bound_independence,
    lower_bound_prime_multiples,
    monotonicity_bound,
    verify_coprime_labeling,
)
from mincoprime.numtheory import nth_prime
from mincoprime.solver import (
    SearchConfig,
    clique_number,
    exists_labeling_with_max,
    independence_number,
    min_coprime_number_exact,
)

from oracles import brute_alpha, brute_omega, brute_pr, labeling_exists


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return n, [e for e, keep in zip(pairs, mask) if keep]


@settings(max_examples=120, deadline=None)
@given(small_graphs())
def test_exact_matches_brute_force(data):
    n, edges = data
    g = graphs.Graph.from_edges(n, edges)
    res = min_coprime_number_exact(g)
    assert res.certified
    assert res.value.value == brute_pr(n, edges)
    assert verify_coprime_labeling(g, res.value.witness).ok
    alpha = independence_number(g)
    assert alpha == brute_alpha(n, edges) and clique_number(g) == brute_omega(n, edges)
    assert lower_bound_independence(g, alpha).value <= res.value.value
    pm = lower_bound_prime_multiples(g, alpha)
    if pm is not None:
        assert pm.value <= res.value.value
    assert res.value.value <= max(1, nth_prime(n - 1) if n > 1 else 1)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6), st.integers(1, 14), st.sampled_from([(True, True, True), (False, False, False), (True, False, True)]))
def test_decision_matches_backtracking(data, k, switches):
    n, edges = data
    g = graphs.Graph.from_edges(n, edges)
    cfg = SearchConfig(symmetry=switches[0], pigeonhole=switches[1], prime_counts=switches[2])
    res = exists_labeling_with_max(g, k, cfg)
    assert res.found == labeling_exists(n, edges, k)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7), st.data())
def test_monotone_under_edge_removal(data, draw):
    n, edges = data
    h = graphs.Graph.from_edges(n, edges)
    keep = draw.draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    g = graphs.Graph.from_edges(n, [e for e, k in zip(edges, keep) if k])
    pr_h = min_coprime_number_exact(h).value
    pr_g = min_coprime_number_exact(g).value
    assert pr_g.value <= pr_h.value
    assert monotonicity_bound(g, h, pr_h).value >= pr_g.value


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 60), st.integers(1, 10))
def test_corona_witness(n, m):
    val = corona_labeling(n, m)
    g = graphs.corona(graphs.complete(n), graphs.empty(m))
    assert verify_coprime_labeling(g, val.witness).ok
    assert val.witness.max_label == val.value


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 8), st.integers(0, 60))
def test_path_join_witness(n, extra):
    m = max(n, threshold(n)) + extra if n >= 5 else n + extra
    val = path_join_labeling(m, n)
    g = graphs.join(graphs.path(m), graphs.path(n))
    assert verify_coprime_labeling(g, val.witness).ok
    assert val.witness.max_label == val.value == path_join_value(m, n)


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 8), st.integers(0, 60), st.sampled_from(VARIANTS))
def test_cycle_join_witness(n, extra, variant):
    m = max(n, threshold(n), 3) + extra
    val = cycle_join_labeling(m, n, variant)
    assert verify_coprime_labeling(cycle_join_graph(m, n, variant), val.witness).ok
    assert val.witness.max_label == val.value
