import numpy as np
import pytest

from turan_kp3.errors import GraphSizeError, InvalidVertexError
from turan_kp3.graph import (
    Graph,
    disjoint_copies,
    disjoint_union,
    induced_subgraph,
    iter_bits,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_matching,
    make_path,
    make_star,
    relabel,
    remove_vertices,
)


def test_iter_bits_ascending():
    assert list(iter_bits(0b101101)) == [0, 2, 3, 5]
    assert list(iter_bits(0)) == []


def test_from_edges_merges_repeats():
    g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 3)])
    assert g.edge_count == 2
    assert g.edges() == ((0, 1), (2, 3))
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)


@pytest.mark.parametrize("edges", [[(0, 4)], [(-1, 2)], [(2, 2)]])
def test_from_edges_rejects_bad_edges(edges):
    with pytest.raises(InvalidVertexError):
        Graph.from_edges(4, edges)


def test_constructor_validates_rows():
    with pytest.raises(InvalidVertexError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(InvalidVertexError):
        Graph(2, [0b01, 0])  # loop
    with pytest.raises(InvalidVertexError):
        Graph(2, [0b100, 0])  # out of range
    assert Graph(2, [0b10, 0b01]).edge_count == 1


@pytest.mark.parametrize("n", [-1, 513])
def test_order_cap(n):
    with pytest.raises(GraphSizeError):
        make_empty(n)


def test_vertex_queries_check_range():
    g = make_path(3)
    with pytest.raises(InvalidVertexError):
        g.degree(3)
    with pytest.raises(InvalidVertexError):
        g.has_edge(0, 5)


def test_building_blocks():
    assert make_complete(5).edge_count == 10
    assert make_matching(5).edges() == ((0, 1), (2, 3))
    assert make_matching(5).degree(4) == 0
    assert make_path(4).edges() == ((0, 1), (1, 2), (2, 3))
    assert make_cycle(5).degree_sequence() == (2,) * 5
    assert make_star(4).neighbors(0) == (1, 2, 3, 4)
    with pytest.raises(GraphSizeError):
        make_cycle(2)


def test_union_and_join_shift_second_graph():
    u = disjoint_union(make_complete(3), make_matching(2))
    assert u.n == 5
    assert u.edges() == ((0, 1), (0, 2), (1, 2), (3, 4))

    j = join(make_complete(1), make_matching(4))
    # K_1 + M_4: hub 0 sees everything, plus the matching
    assert j.neighbors(0) == (1, 2, 3, 4)
    assert j.edge_count == 4 + 2
    assert j.degree_sequence() == (2, 2, 2, 2, 4)


def test_join_with_empty_side_is_identity():
    assert join(make_empty(0), make_matching(4)) == make_matching(4)


def test_union_over_cap():
    with pytest.raises(GraphSizeError):
        disjoint_union(make_empty(300), make_empty(300))


def test_disjoint_copies():
    g = disjoint_copies(make_path(3), 3)
    assert g.n == 9
    assert g.edge_count == 6
    assert disjoint_copies(make_path(3), 0).n == 0


def test_edge_updates_do_not_mutate():
    g = make_path(3)
    h = g.with_edge(0, 2)
    assert h.edge_count == 3
    assert g.edge_count == 2
    assert h.without_edge(0, 2) == g
    assert g.non_edges() == ((0, 2),)


def test_edge_counting_over_masks():
    g = make_complete(4)
    assert g.edges_within(0b0111) == 3
    assert g.edges_between(0b0011, 0b1100) == 4


def test_induced_and_remove():
    g = make_cycle(5)
    sub = induced_subgraph(g, [4, 0, 1])
    # 4-0-1 is a path; relabeled to 0..2 in ascending order of {0, 1, 4}
    assert sub.edges() == ((0, 1), (0, 2))
    assert remove_vertices(g, [0]) == make_path(4)


def test_relabel():
    g = make_path(3)
    h = relabel(g, [1, 0, 2])
    assert h.edges() == ((0, 1), (0, 2))
    with pytest.raises(InvalidVertexError):
        relabel(g, [0, 0, 1])


def test_adjacency_matrix_is_symmetric():
    m = make_star(3).adjacency_matrix()
    assert m.dtype == np.uint8
    assert (m == m.T).all()
    assert m.sum() == 6


def test_equality_and_hash():
    a = Graph.from_edges(3, [(0, 1)])
    b = make_empty(3).with_edge(1, 0)
    assert a == b
    assert len({a, b}) == 1
    assert "graph6=" in repr(a)


def test_join_edge_count_identity():
    g = join(make_complete(2), make_matching(6))
    assert g.edge_count == 1 + 6 * 2 + 3


def test_matching_restricted_to_non_partners():
    assert induced_subgraph(make_matching(4), [0, 2]).edge_count == 0
