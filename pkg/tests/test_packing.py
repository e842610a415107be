import pytest

from oracles import brute_max_packing, random_graph
from turan_kp3.enumeration import enumerate_free_graphs
from turan_kp3.errors import InvalidVertexError
from turan_kp3.graph import (
    Graph,
    disjoint_copies,
    disjoint_union,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_matching,
    make_path,
    make_star,
)
from turan_kp3.packing import (
    Packing,
    PathTriple,
    contains_k_p3,
    greedy_packing,
    is_saturated,
    max_p3_packing,
    normalized,
    p3_triples,
    unsaturated_edge,
    verify_packing,
)

K5_M4 = disjoint_union(make_complete(5), make_matching(4))
K1_M8 = join(make_complete(1), make_matching(8))


@pytest.mark.parametrize(
    "g, size",
    [
        (make_empty(6), 0),
        (make_path(9), 3),
        (make_cycle(6), 2),
        (make_star(5), 1),
        (make_complete(8), 2),
        (K5_M4, 1),
        (K1_M8, 1),
        (disjoint_copies(make_path(3), 4), 4),
    ],
)
def test_max_packing(g, size):
    count, witness = max_p3_packing(g)
    assert count == size == len(witness)
    assert verify_packing(g, witness)
    assert list(witness) == sorted(witness)


def test_agrees_with_brute_force_random(rng):
    for _ in range(150):
        n = int(rng.integers(3, 11))
        g = random_graph(rng, n, float(rng.random()))
        assert max_p3_packing(g)[0] == brute_max_packing(g)


def test_agrees_with_brute_force_all_order_six():
    for g in enumerate_free_graphs(6, 99):
        assert max_p3_packing(g)[0] == brute_max_packing(g)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_agrees_with_brute_force_all_graphs(n):
    for g in enumerate_free_graphs(n, 99):
        assert max_p3_packing(g)[0] == brute_max_packing(g)


def test_extremal_graphs_are_free():
    assert contains_k_p3(K5_M4, 2) == (False, None)
    assert contains_k_p3(K1_M8, 2) == (False, None)


def test_contains_witness_has_exactly_k_triples():
    found, witness = contains_k_p3(make_complete(9), 2)
    assert found
    assert len(witness) == 2
    assert verify_packing(make_complete(9), witness)


def test_contains_edge_cases():
    assert contains_k_p3(make_empty(3), 0) == (True, Packing(()))
    assert contains_k_p3(make_complete(5), 2) == (False, None)


def test_containment_is_monotone(rng):
    for _ in range(100):
        g = random_graph(rng, 9, 0.3)
        h = g
        for u, v in g.non_edges()[::3]:
            h = h.with_edge(u, v)
        for k in (1, 2, 3):
            if contains_k_p3(g, k)[0]:
                assert contains_k_p3(h, k)[0]


def test_verify_packing():
    g = make_path(6)
    assert verify_packing(g, Packing.of([(0, 1, 2), (3, 4, 5)]))
    assert not verify_packing(g, Packing.of([(0, 1, 2), (2, 3, 4)]))  # shares vertex 2
    assert not verify_packing(g, Packing.of([(0, 2, 4)]))  # not a path
    assert not verify_packing(g, Packing.of([(1, 1, 2)]))
    with pytest.raises(InvalidVertexError):
        verify_packing(g, Packing.of([(4, 5, 6)]))


def test_p3_triples_of_triangle():
    assert p3_triples(make_complete(3)) == [(0, 1, 2), (0, 2, 1), (1, 0, 2)]
    assert normalized(5, 1, 2) == PathTriple(2, 1, 5)


def test_greedy_on_path():
    assert list(greedy_packing(make_path(9))) == [(0, 1, 2), (3, 4, 5), (6, 7, 8)]


def test_packing_vertices():
    p = Packing.of([(4, 0, 2)])
    assert p.vertices() == (0, 2, 4)
    assert p.vertex_mask == 0b10101


def test_saturation():
    assert is_saturated(K5_M4, 2)
    assert is_saturated(K1_M8, 2)
    assert not is_saturated(make_empty(9), 2)
    assert not is_saturated(make_complete(9), 2)
    assert not is_saturated(Graph.from_edges(9, [(0, 1)]), 2)


@pytest.mark.parametrize("g, size", [(make_path(6), 2), (make_matching(8), 0), (make_complete(4), 1)])
def test_greedy_sizes(g, size):
    assert len(greedy_packing(g)) == size


def test_odd_cycle_and_matchings():
    assert max_p3_packing(make_cycle(5))[0] == 1
    for n in range(3, 20):
        assert contains_k_p3(make_matching(n), 1) == (False, None)


def test_packing_number_never_drops_when_adding_an_edge(rng):
    for _ in range(60):
        g = random_graph(rng, 9, 0.25)
        size = max_p3_packing(g)[0]
        for u, v in g.non_edges():
            h = g.with_edge(u, v)
            grown = max_p3_packing(h)[0]
            assert grown >= size
            g, size = h, grown


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_hub_construction_packs_one_path_per_hub(k):
    for m in range(2 * (k - 1), 13):
        assert max_p3_packing(join(make_complete(k - 1), make_matching(m)))[0] == k - 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_clique_construction_packs_k_minus_one(k):
    for m in range(0, 13):
        assert max_p3_packing(disjoint_union(make_complete(3 * k - 1), make_matching(m)))[0] == k - 1


def test_unsaturated_edge():
    assert unsaturated_edge(K5_M4, 2) is None
    assert unsaturated_edge(Graph.from_edges(9, [(0, 1)]), 2) == (0, 2)
    g = make_empty(9)
    assert unsaturated_edge(g, 2) == (0, 1)
