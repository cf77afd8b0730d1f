import pytest
from hypothesis import given

from cliquechroma import Coloring, GenParams, Graph, ParseError, gen_random_graph
from cliquechroma.formats import read_coloring, read_graph, write_coloring, write_graph

from conftest import graphs


def test_read_k3():
    assert read_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == Graph.complete(3)


@given(graphs(max_n=12))
def test_graph_round_trip(G):
    assert read_graph(write_graph(G)) == G


def test_write_is_canonical_for_reordered_input():
    text = "c hand written\np edge 4 3\ne 3 4\ne 1 2\ne 1 3\n"
    out = write_graph(read_graph(text))
    assert out == "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n"
    assert write_graph(read_graph(out)) == out


def test_writer_sorts_edges():
    G = gen_random_graph(GenParams(9, 0.5, 3))
    lines = [tuple(map(int, l.split()[1:])) for l in write_graph(G).splitlines() if l[0] == "e"]
    assert lines == sorted(lines)
    assert all(u < v for u, v in lines)


@pytest.mark.parametrize("text,line", [
    ("p edge 2 1\ne 1 1\n", 2),
    ("e 1 1\n", 1),
    ("p edge 2 1\ne 1 3\n", 2),
    ("p edge 3 2\ne 1 2\ne 2 1\n", 3),
    ("p edge x 1\n", 1),
    ("p col 3 1\n", 1),
    ("p edge 3 0\np edge 3 0\n", 2),
    ("e 1 2\n", 1),
    ("p edge 3 1\nq 1 2\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        read_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_edge_count_mismatch():
    with pytest.raises(ParseError):
        read_graph("p edge 3 2\ne 1 2\n")
    with pytest.raises(ParseError):
        read_graph("c nothing\n")


def test_coloring_round_trip():
    c = Coloring([0, 2, 1, 2, 0])
    assert read_coloring(write_coloring(c)) == c


@pytest.mark.parametrize("text", [
    "colors 2 1\n1 0\n",
    "colors 2 2\n1 0\n2 0\n",
    "colors 2 1\n1 0\n1 0\n",
    "colors 2 1\n3 0\n",
    "1 0\n",
    "colors 1 1\n1 1\n",
])
def test_bad_colorings(text):
    with pytest.raises(ParseError):
        read_coloring(text)
