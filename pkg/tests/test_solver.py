import itertools
import random

import pytest

from mincoprime import graphs
from mincoprime.graphs import Graph
from mincoprime.labeling import verify_coprime_labeling
from mincoprime.solver import (
    ABSENT,
    FOUND,
    INCONCLUSIVE,
    SearchConfig,
    clique_number,
    exists_labeling_with_max,
    independence_number,
    min_coprime_number_exact,
)
from oracles import brute_alpha, brute_omega, brute_pr, random_edges

PP = lambda m, n: graphs.join(graphs.path(m), graphs.path(n))  # noqa: E731


def test_decision_examples():
    res = exists_labeling_with_max(graphs.path(3), 3)
    assert res.status == FOUND and sorted(res.labeling.labels) == [1, 2, 3]
    assert exists_labeling_with_max(graphs.complete(4), 4).status == ABSENT
    assert exists_labeling_with_max(graphs.complete(4), 5).status == FOUND


def test_k4_absent_matches_all_injections():
    k4 = graphs.complete(4)
    for k in (4, 5):
        any_ok = any(
            verify_coprime_labeling(k4, p).ok for p in itertools.permutations(range(1, k + 1), 4)
        )
        assert any_ok == (exists_labeling_with_max(k4, k).status == FOUND)


@pytest.mark.parametrize(
    "g, value",
    [
        (graphs.corona(graphs.complete(8), graphs.empty(1)), 17),
        (PP(7, 7), 19),
        (PP(9, 7), 22),
        (graphs.path(9), 9),
        (graphs.corona(graphs.cycle(4), graphs.empty(2)), 12),
    ],
)
def test_exact_examples(g, value):
    res = min_coprime_number_exact(g)
    assert res.certified and res.value.value == value
    assert verify_coprime_labeling(g, res.value.witness).ok


def test_limits_give_inconclusive():
    res = exists_labeling_with_max(PP(10, 6), 22, SearchConfig(node_limit=50))
    assert res.status == INCONCLUSIVE
    res = min_coprime_number_exact(PP(10, 6), SearchConfig(node_limit=50))
    assert not res.certified and res.value is None
    res = min_coprime_number_exact(PP(9, 7), SearchConfig(max_k=21))
    assert res.status == "inconclusive" and res.lower == 22


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(node_limit=0)
    with pytest.raises(ValueError):
        SearchConfig(parallel_width=0)


def test_allowed_labels():
    res = exists_labeling_with_max(graphs.path(4), 10, allowed=[3, 4, 5, 9])
    assert res.found and set(res.labeling.labels) == {3, 4, 5, 9}
    assert exists_labeling_with_max(graphs.path(3), 10, allowed=[2, 4, 6, 8]).status == ABSENT


def _corpus(count, max_n, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        yield n, random_edges(rng, n, rng.random())


def test_agrees_with_brute_force():
    for n, edges in _corpus(80, 7, 1):
        res = min_coprime_number_exact(Graph.from_edges(n, edges))
        assert res.certified and res.value.value == brute_pr(n, edges)


@pytest.mark.parametrize(
    "switches",
    [
        dict(symmetry=False),
        dict(pigeonhole=False),
        dict(prime_counts=False),
        dict(symmetry=False, pigeonhole=False, prime_counts=False),
    ],
)
def test_pruning_rules_do_not_change_answers(switches):
    cfg = SearchConfig(**switches)
    for n, edges in _corpus(40, 8, 2):
        g = Graph.from_edges(n, edges)
        assert min_coprime_number_exact(g, cfg).value.value == min_coprime_number_exact(g).value.value
    assert exists_labeling_with_max(PP(7, 6), 16, cfg).status == ABSENT
    assert exists_labeling_with_max(PP(7, 6), 17, cfg).status == FOUND


def test_parallel_matches_sequential():
    cfg = SearchConfig(parallel_width=2)
    for g in [PP(7, 5), graphs.corona(graphs.complete(5), graphs.empty(1)), graphs.gnp(9, 0.6, 3)]:
        seq = min_coprime_number_exact(g)
        par = min_coprime_number_exact(g, cfg)
        assert par.value.value == seq.value.value
        assert verify_coprime_labeling(g, par.value.witness).ok
    assert exists_labeling_with_max(PP(9, 7), 21, cfg).status == ABSENT


def test_monotone_under_edge_addition():
    rng = random.Random(3)
    for _ in range(6):
        n = rng.randint(5, 8)
        pairs = list(itertools.combinations(range(n), 2))
        rng.shuffle(pairs)
        prev = 0
        for j in range(0, len(pairs) + 1, 3):
            val = min_coprime_number_exact(Graph.from_edges(n, pairs[:j])).value.value
            assert val >= prev
            prev = val


def test_alpha_and_omega():
    assert independence_number(PP(7, 5)) == 4
    assert independence_number(graphs.join(graphs.cycle(9), graphs.cycle(3))) == 4
    for n in range(1, 8):
        assert independence_number(graphs.complete(n)) == 1
        assert clique_number(graphs.complete(n)) == n
    for n, edges in _corpus(60, 10, 4):
        g = Graph.from_edges(n, edges)
        assert independence_number(g) == brute_alpha(n, edges) == clique_number(g.complement())
        assert clique_number(g) == brute_omega(n, edges) == independence_number(g.complement())
