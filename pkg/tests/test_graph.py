import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquechroma import GenParams, Graph, InputError, VertexSet, gen_random_graph
from cliquechroma.graph import (
    edge_threshold,
    induced_subgraph,
    non_neighbors,
    non_neighbors_in,
    splitmix64,
)

from conftest import graphs


def test_splitmix64_reference_stream():
    assert splitmix64(1234567, 5) == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821,
    ]
    assert splitmix64(0, 1) == [0xE220A8397B1DCDAF]


@pytest.mark.parametrize("n,p,seed", [(7, 0.5, 0), (13, 0.3, 99), (20, 0.75, 2**64 - 1)])
def test_compiled_sampler_matches_scalar_reference(n, p, seed):
    G = gen_random_graph(GenParams(n, p, seed))
    words = splitmix64(seed, n * (n - 1) // 2)
    thr = edge_threshold(p)
    expected = [(i, j) for (i, j), w in zip(
        ((i, j) for i in range(n) for j in range(i + 1, n)), words) if w < thr]
    assert list(G.edges()) == expected


def test_edge_threshold_is_exact_floor():
    assert edge_threshold(0.5) == 2**63
    assert edge_threshold(0.0) == 0
    assert edge_threshold(1.0) is None


def test_gen_p0_is_edgeless():
    G = gen_random_graph(GenParams(5, 0.0, 7))
    assert G.edge_count() == 0


def test_gen_p1_is_complete():
    G = gen_random_graph(GenParams(5, 1.0, 7))
    assert G == Graph.complete(5)
    assert G.edge_count() == 10


def test_gen_edge_count_band():
    G = gen_random_graph(GenParams(1000, 0.5, 42))
    pairs = 1000 * 999 // 2
    assert abs(G.edge_count() - pairs / 2) <= 3 * math.sqrt(pairs / 4)


def test_gen_is_deterministic():
    a = gen_random_graph(GenParams(300, 0.5, 11))
    b = gen_random_graph(GenParams(300, 0.5, 11))
    assert a.adj == b.adj
    assert a.adj != gen_random_graph(GenParams(300, 0.5, 12)).adj


@given(st.integers(1, 60), st.floats(0, 1), st.integers(0, 2**64 - 1))
def test_sampled_graphs_symmetric_loop_free(n, p, seed):
    G = gen_random_graph(GenParams(n, p, seed))
    m = G.matrix()
    assert (m == m.T).all()
    assert not m.diagonal().any()


@pytest.mark.parametrize("kw", [dict(n=0, p=0.5, seed=0), dict(n=3, p=1.5, seed=0),
                                dict(n=3, p=-0.1, seed=0), dict(n=3, p=0.5, seed=-1),
                                dict(n=3, p=0.5, seed=2**64)])
def test_genparams_rejects_bad_values(kw):
    with pytest.raises(InputError):
        GenParams(**kw)


def test_graph_rejects_asymmetry_and_loops():
    with pytest.raises(InputError):
        Graph(2, [0b10, 0])
    with pytest.raises(InputError):
        Graph(2, [0b01, 0])
    with pytest.raises(InputError):
        Graph.from_edges(3, [(1, 1)])


def test_non_neighbors_examples():
    K4, C5 = Graph.complete(4), Graph.cycle(5)
    assert non_neighbors(K4, [0]) == set()
    assert non_neighbors(C5, []) == set(range(5))
    assert non_neighbors(C5, [0, 1]) == {3}


def test_non_neighbors_rejects_bad_lists():
    C5 = Graph.cycle(5)
    with pytest.raises(InputError):
        non_neighbors(C5, [0, 0])
    with pytest.raises(InputError):
        non_neighbors(C5, [5])


def test_non_neighbors_in_examples():
    assert non_neighbors_in(Graph.complete(4), 0, {1, 2, 3}) == set()
    assert non_neighbors_in(Graph.empty(4), 0, {0, 1, 2}) == {1, 2}
    assert non_neighbors_in(Graph.cycle(5), 3, {0, 1, 2}) == {0, 1}


@given(graphs(), st.data())
def test_non_neighbors_in_counts(G, data):
    v = data.draw(st.integers(0, G.n - 1))
    U = data.draw(st.sets(st.integers(0, G.n - 1)))
    nn = non_neighbors_in(G, v, U)
    nbrs = G.neighbors(v) & VertexSet.of(G.n, U)
    assert len(nn) + len(nbrs) == len(U - {v})


@given(graphs(), st.data())
def test_non_neighbors_is_intersection(G, data):
    vs = data.draw(st.lists(st.integers(0, G.n - 1), unique=True, max_size=4))
    expect = VertexSet.full(G.n)
    for v in vs:
        expect = expect & non_neighbors(G, [v])
    assert non_neighbors(G, vs) == expect


def test_induced_subgraph_examples():
    H, labels = induced_subgraph(Graph.complete(4), {0, 1, 2})
    assert H == Graph.complete(3) and labels == [0, 1, 2]
    H, _ = induced_subgraph(Graph.cycle(5), {0, 1, 2})
    assert H == Graph.path(3)
    P = Graph.petersen()
    H, labels = induced_subgraph(P, range(10))
    assert H == P and labels == list(range(10))


def test_induced_subgraph_relabels_in_order():
    H, labels = induced_subgraph(Graph.cycle(6), {1, 3, 4})
    assert labels == [1, 3, 4]
    assert list(H.edges()) == [(1, 2)]


def test_petersen_shape():
    P = Graph.petersen()
    assert P.edge_count() == 15
    assert all(P.degree(v) == 3 for v in range(10))


def test_matrix_round_trip():
    G = gen_random_graph(GenParams(70, 0.4, 5))
    assert Graph.from_matrix(G.matrix()) == G
    assert G.matrix().dtype == np.bool_


def test_vertexset_ops():
    a, b = VertexSet.of(6, [0, 1, 2]), VertexSet.of(6, [2, 3])
    assert (a & b) == {2} and (a | b) == {0, 1, 2, 3} and (a - b) == {0, 1}
    assert (a ^ b) == {0, 1, 3}
    assert a.complement() == {3, 4, 5}
    assert VertexSet.of(6, [1]).issubset(a)
    assert 2 in a and 5 not in a and len(a) == 3
    with pytest.raises(InputError):
        VertexSet.of(3, [3])
    with pytest.raises(InputError):
        a & VertexSet.of(5, [0])
