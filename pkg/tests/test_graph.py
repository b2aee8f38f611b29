from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from croissant.errors import InputError, ParseError
from croissant.generators import circulant, multi_star
from croissant.graph import (
    Graph,
    complement,
    complete_graph,
    degrees,
    edge_count,
    format_edge_list,
    link_density,
    link_density_exact,
    new_graph,
    null_graph,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)


@st.composite
def graphs(draw, min_n=1, max_n=25):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return Graph(n, np.array(bits, dtype=bool))


def test_null_graph_from_empty_edges():
    g = new_graph(4, [])
    assert edge_count(g) == 0
    assert g == null_graph(4)


def test_star_construction():
    g = new_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert degrees(g).tolist() == [3, 1, 1, 1]


def test_duplicate_pairs_are_idempotent():
    g = new_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert edge_count(g) == 1
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 4)], [(-1, 2)], [(1, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(InputError):
        new_graph(4, edges)


def test_n_must_be_positive():
    with pytest.raises(InputError):
        new_graph(0, [])


def test_complement_of_null_and_complete():
    assert complement(null_graph(5)) == complete_graph(5)
    assert complement(complete_graph(5)) == null_graph(5)


def test_complement_of_star_is_triangle_plus_isolate():
    star = new_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert complement(star).edges() == [(1, 2), (1, 3), (2, 3)]
    assert degrees(complement(star))[0] == 0


def test_edge_counts():
    assert edge_count(complete_graph(6)) == 15
    assert edge_count(null_graph(6)) == 0
    assert edge_count(multi_star(5, 2)) == 7


def test_degrees_examples():
    assert degrees(complete_graph(4)).tolist() == [3, 3, 3, 3]
    assert degrees(circulant(6, 2)).tolist() == [4] * 6


def test_link_density_examples():
    assert link_density(complete_graph(7)) == 1.0
    assert link_density(new_graph(4, [(0, 1), (0, 2), (0, 3)])) == 0.5
    assert link_density(circulant(100, 10)) == pytest.approx(20 / 99, abs=1e-12)
    assert link_density_exact(circulant(100, 10)) == Fraction(20, 99)


def test_link_density_needs_two_nodes():
    with pytest.raises(InputError):
        link_density(null_graph(1))


def test_has_edge_agrees_with_adjacency():
    g = circulant(9, 2)
    adj = g.adjacency()
    assert all(g.has_edge(i, j) == adj[i, j] for i in range(9) for j in range(9))


def test_graph_is_immutable():
    g = circulant(6, 1)
    with pytest.raises(ValueError):
        g.bits[0] = False


def test_from_adjacency_validates():
    with pytest.raises(InputError):
        Graph.from_adjacency(np.array([[0, 1], [0, 0]]))
    with pytest.raises(InputError):
        Graph.from_adjacency(np.eye(3))


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2))
def test_density_of_graph_and_complement_sum_to_one(g):
    assert link_density_exact(g) + link_density_exact(complement(g)) == 1
    assert link_density(g) + link_density(complement(g)) == 1.0


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_handshake(g):
    assert int(degrees(g).sum()) == 2 * edge_count(g)


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_comments_and_file_io(tmp_path):
    text = "# a star\nn 4\n0 1  # hub edge\n\n0 2\n0 3\n"
    g = parse_edge_list(text)
    assert degrees(g).tolist() == [3, 1, 1, 1]
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert read_edge_list(path) == g


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("n 4\na b\n", 2),
        ("n 4\n0 1\n0 9\n", 3),
        ("n 4\n2 2\n", 2),
        ("0 1\n", 1),
        ("n four\n", 1),
        ("n 4\n0 1 2\n", 2),
    ],
)
def test_edge_list_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno


def test_edge_list_missing_header():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")
