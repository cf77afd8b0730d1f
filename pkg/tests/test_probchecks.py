import pytest

from cliquechroma import (
    GenParams,
    Graph,
    InputError,
    VertexSet,
    contains_maximal_clique,
    estimate_lemma1_probability,
    gen_random_graph,
    lemma1_event_holds,
    property_c_spot_check,
)


def test_lemma1_c5():
    v = lemma1_event_holds(Graph.cycle(5), {0, 1, 2}, k=2, threshold=1)
    assert v.min_nonneighbors_ok and v.dominating_clique == {0, 1} and not v.bad_event


def test_lemma1_k4():
    v = lemma1_event_holds(Graph.complete(4), {0, 1, 2}, k=2, threshold=1)
    assert not v.min_nonneighbors_ok and not v.bad_event


def test_lemma1_edgeless():
    v = lemma1_event_holds(Graph.empty(4), {0, 1}, k=2, threshold=1)
    assert v.min_nonneighbors_ok and v.dominating_clique is None and v.bad_event


def test_lemma1_rejects_empty_y():
    with pytest.raises(InputError):
        lemma1_event_holds(Graph.cycle(5), set(), k=2, threshold=1)


@pytest.mark.parametrize("seed", range(30))
def test_bad_event_consistent_with_clique_search(seed):
    # a dominating clique extends inside Y to a G-maximal clique, so a found one implies containment
    G = gen_random_graph(GenParams(14, 0.5, seed))
    Y = VertexSet.of(14, range(7))
    v = lemma1_event_holds(G, Y, k=2, threshold=1)
    assert v.bad_event == (v.min_nonneighbors_ok and v.dominating_clique is None)
    if v.dominating_clique is not None:
        assert contains_maximal_clique(G, Y) is not None


def test_estimator_threshold_above_y_gives_zero():
    est = estimate_lemma1_probability(20, 6, 2, threshold=6, trials=40, seed=3)
    assert est.fraction == 0 and est.bad == 0


def test_estimator_deterministic():
    a = estimate_lemma1_probability(20, 8, 2, threshold=1, trials=60, seed=5)
    b = estimate_lemma1_probability(20, 8, 2, threshold=1, trials=60, seed=5)
    assert a == b
    assert a.ci_low <= a.fraction <= a.ci_high


def test_estimator_censors_budget():
    est = estimate_lemma1_probability(40, 20, 6, threshold=1, trials=5, seed=0, node_budget=1)
    assert est.censored + est.completed == 5


def test_propc_complete_graph():
    rep = property_c_spot_check(Graph.complete(8), 0.1, j_max=3, samples=25, threshold=1)
    assert rep.condition1_failures == 25 and rep.skipped == 25


def test_propc_edgeless():
    rep = property_c_spot_check(Graph.empty(6), 0.1, j_max=1, samples=10, threshold=1)
    assert rep.condition1_failures == 0
    assert rep.condition2_checked == 10 and rep.condition2_failures == 10


def test_propc_default_j_max_guard():
    with pytest.raises(InputError):
        property_c_spot_check(Graph.cycle(10), 0.1)


def test_propc_g4096_condition1():
    G = gen_random_graph(GenParams(4096, 0.5, 42))
    rep = property_c_spot_check(G, 0.1, j_max=4, samples=200, seed=0, threshold=10**9)
    assert rep.condition1_failures == 0


def test_estimator_reruns_with_other_seed_agree():
    a = estimate_lemma1_probability(30, 12, 3, threshold=2, trials=10_000, seed=1)
    b = estimate_lemma1_probability(30, 12, 3, threshold=2, trials=10_000, seed=2)
    # different base seeds draw different graphs, yet the 95% intervals overlap
    assert a.bad != b.bad
    assert a.ci_low <= b.ci_high and b.ci_low <= a.ci_high
