import pytest

from oracles import brute_canonical_key, random_graph
from turan_kp3.canonical import canonical_form, canonical_labeling, is_isomorphic, refine
from turan_kp3.graph import (
    disjoint_copies,
    disjoint_union,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_matching,
    make_path,
    make_star,
    relabel,
)


def _assert_permutation_invariant(rng, count):
    for _ in range(count):
        n = int(rng.integers(1, 13))
        g = random_graph(rng, n, float(rng.random()))
        perm = rng.permutation(n).tolist()
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_permutation_invariance(rng):
    _assert_permutation_invariant(rng, 300)


@pytest.mark.slow
def test_permutation_invariance_ten_thousand(rng):
    _assert_permutation_invariant(rng, 10_000)


def test_form_agrees_with_brute_force_classes(rng):
    graphs = [random_graph(rng, 6, p) for p in (0.2, 0.4, 0.5, 0.6, 0.8) for _ in range(12)]
    keys = [brute_canonical_key(g) for g in graphs]
    forms = [canonical_form(g) for g in graphs]
    for i in range(len(graphs)):
        for j in range(len(graphs)):
            assert (forms[i] == forms[j]) is (keys[i] == keys[j])


def test_regular_non_isomorphic_pair():
    # same degree sequence, different structure
    c6 = make_cycle(6)
    two_triangles = disjoint_copies(make_complete(3), 2)
    assert not is_isomorphic(c6, two_triangles)
    assert canonical_form(c6) != canonical_form(two_triangles)


@pytest.mark.parametrize(
    "g",
    [make_empty(0), make_empty(1), make_empty(7), make_complete(8), make_matching(9), make_star(6)],
)
def test_highly_symmetric_graphs(g):
    form, order = canonical_labeling(g)
    assert sorted(order) == list(range(g.n))
    assert form.to_graph().edge_count == g.edge_count
    assert canonical_form(form.to_graph()) == form


def test_labeling_maps_graph_onto_form():
    g = make_path(5)
    form, order = canonical_labeling(g)
    perm = [0] * g.n
    for label, v in enumerate(order):
        perm[v] = label
    assert relabel(g, perm) == form.to_graph()


def test_boundary_pair_is_not_isomorphic():
    clique_side = disjoint_union(make_complete(5), make_matching(4))
    hub_side = join(make_complete(1), make_matching(8))
    assert clique_side.edge_count == hub_side.edge_count == 12
    assert not is_isomorphic(clique_side, hub_side)


def test_m4_has_two_descriptions():
    assert is_isomorphic(disjoint_union(make_complete(2), make_matching(2)), join(make_empty(0), make_matching(4)))


def test_refine_splits_by_degree():
    g = make_star(3)
    cells = refine(g.rows, [list(range(4))])
    assert cells == [[1, 2, 3], [0]]


def test_form_prints_as_graph6():
    form = canonical_form(make_complete(3))
    assert str(form) == form.graph6 == "Bw"
