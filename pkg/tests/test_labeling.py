import json
import math

import pytest

from mincoprime import graphs
from mincoprime.labeling import (
    CertificationError,
    Labeling,
    LabelingError,
    PrValue,
    certify,
    check_consistency,
    lower_bound_independence,
    lower_bound_prime_multiples,
    monotonicity_bound,
    prime_multiple_index,
    verify_coprime_labeling,
)
from mincoprime.numtheory import nth_prime
from mincoprime.solver import independence_number, min_coprime_number_exact


def test_verify_examples():
    g = graphs.join(graphs.path(5), graphs.path(5))
    lab = Labeling([2, 7, 4, 11, 8, 1, 3, 5, 9, 13])
    assert verify_coprime_labeling(g, lab).ok and lab.max_label == 13
    assert verify_coprime_labeling(graphs.complete(3), [1, 2, 3]).ok
    v = verify_coprime_labeling(graphs.complete(2), [2, 4])
    assert not v.ok and v.bad_edges == [(0, 1, 2)]


def test_verify_lists_every_violation():
    v = verify_coprime_labeling(graphs.complete(4), [2, 2, 4, 0])
    assert v.duplicates == [(2, [0, 1])]
    assert v.nonpositive == [3]
    assert len(v.bad_edges) == 6  # every pair among 2, 2, 4, 0 shares 2
    assert len(v.describe()) == 8


def test_domain_mismatch():
    with pytest.raises(LabelingError):
        verify_coprime_labeling(graphs.path(3), [1, 2])


def test_labeling_invariants():
    with pytest.raises(LabelingError):
        Labeling([1, 1])
    with pytest.raises(LabelingError):
        Labeling([0, 1])
    lab = Labeling([3, 1, 2])
    doc = json.loads(lab.to_json(g=graphs.path(3)))
    assert doc == {"graph": "edges", "labels": [3, 1, 2], "max": 3, "n": 3, "edges": [[0, 1], [1, 2]]}
    assert json.loads(lab.to_json("P(3)")) == {"graph": "P(3)", "labels": [3, 1, 2], "max": 3}


def test_prvalue_invariants():
    lab = Labeling([1, 2, 3])
    PrValue("exact", 3, "formula", lab)
    PrValue("lower-bound", 7, "independence-bound")
    with pytest.raises(ValueError):
        PrValue("exact", 4, "formula", lab)
    with pytest.raises(ValueError):
        PrValue("upper-bound", 3, "construction")
    with pytest.raises(ValueError):
        PrValue("exact", 3, "guess", lab)


def test_certify_and_consistency():
    g = graphs.complete(3)
    with pytest.raises(CertificationError):
        certify(g, PrValue("upper-bound", 4, "construction", Labeling([2, 4, 3])))
    low = PrValue("lower-bound", 9, "independence-bound")
    high = PrValue("upper-bound", 5, "construction", Labeling([1, 2, 5]))
    with pytest.raises(CertificationError):
        check_consistency([low, high])
    check_consistency([PrValue("lower-bound", 5, "independence-bound"), high])


def test_independence_bound_examples():
    g = graphs.join(graphs.path(7), graphs.path(7))
    assert lower_bound_independence(g, 4).value == 19
    assert lower_bound_independence(graphs.empty(6), 6).value == 6
    cc = graphs.join(graphs.cycle(9), graphs.cycle(3))
    assert lower_bound_independence(cc, 4).value == 15


def test_prime_multiple_bound():
    assert prime_multiple_index(10**4, 50) == (5000, "")
    assert nth_prime(100) ** 2 > nth_prime(10**4)
    assert prime_multiple_index(16, 4)[0] is None
    assert "sqrt" in prime_multiple_index(16, 4)[1]
    k = graphs.complete(30)
    val = lower_bound_prime_multiples(k, 1)
    assert val.value == nth_prime(math.floor(30 - math.sqrt(30)))
    assert val.value <= nth_prime(29)


def test_prime_multiples_form_independent_sets():
    for expr_g in [graphs.join(graphs.path(6), graphs.path(4)), graphs.corona(graphs.complete(5), graphs.empty(2))]:
        lab = min_coprime_number_exact(expr_g).value.witness
        for p in (2, 3, 5, 7):
            vs = [v for v in range(expr_g.n) if lab[v] % p == 0]
            assert not any(expr_g.has_edge(u, v) for u in vs for v in vs)


def test_monotonicity_examples():
    n, m = 5, 2
    full = graphs.corona(graphs.complete(n), graphs.empty(m))
    crown = graphs.corona(graphs.cycle(n), graphs.empty(m))
    pr_full = min_coprime_number_exact(full).value
    assert monotonicity_bound(crown, full, pr_full).value == pr_full.value
    assert monotonicity_bound(full, full, pr_full).value == pr_full.value
    k8 = PrValue("exact", 17, "formula", Labeling([1, 2, 3, 5, 7, 11, 13, 17]))
    g = graphs.gnp(8, 0.5, 4)
    assert monotonicity_bound(g, graphs.complete(8), k8).value == 17
    with pytest.raises(LabelingError):
        monotonicity_bound(graphs.complete(8), g, k8)


def test_bounds_below_exact():
    for seed in range(15):
        g = graphs.gnp(8, 0.6, seed)
        a = independence_number(g)
        exact = min_coprime_number_exact(g, alpha=a).value.value
        assert lower_bound_independence(g, a).value <= exact
        pm = lower_bound_prime_multiples(g, a)
        assert pm is None or pm.value <= exact
