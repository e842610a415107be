import pytest

from oracles import brute_canonical_key, brute_classes
from turan_kp3.canonical import canonical_form, canonical_labeling
from turan_kp3.enumeration import (
    ScanSummary,
    augmentation_prefixes,
    canonical_deletion_edge,
    count_graphs,
    enumerate_free_graphs,
    iter_free_graphs,
    scan_free_graphs,
    verify_lemmas,
    verify_turan,
)
from turan_kp3.errors import InstanceTooLargeError, PreconditionError
from turan_kp3.graph import disjoint_union, make_complete, make_empty, make_matching
from turan_kp3.packing import contains_k_p3
from turan_kp3.turan import TuranRegime

GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


@pytest.mark.parametrize("n, expected", sorted(GRAPH_COUNTS.items()))
def test_count_graphs(n, expected):
    assert count_graphs(n) == expected


@pytest.mark.slow
def test_count_graphs_order_seven():
    assert count_graphs(7) == 1044


@pytest.mark.parametrize("n", [3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_stream_matches_labeled_brute_force(n):
    keys = [brute_canonical_key(g) for g in enumerate_free_graphs(n, 99)]
    assert len(keys) == len(set(keys))
    assert set(keys) == brute_classes(n)


def test_no_duplicate_forms():
    forms = [form for _, form in iter_free_graphs(7, 2)]
    assert len(forms) == len(set(forms))
    assert all(canonical_form(g) == form for g, form in iter_free_graphs(6, 2))


@pytest.mark.parametrize("n, k, expected", [(6, 99, 156), (3, 1, 2), (4, 1, 3)])
def test_free_graph_counts(n, k, expected):
    assert sum(1 for _ in enumerate_free_graphs(n, k)) == expected


def test_pruned_stream_is_exactly_the_free_classes():
    free_forms = {canonical_form(g) for g in enumerate_free_graphs(6, 99) if not contains_k_p3(g, 2)[0]}
    assert {canonical_form(g) for g in enumerate_free_graphs(6, 2)} == free_forms


def test_limits():
    with pytest.raises(InstanceTooLargeError):
        next(enumerate_free_graphs(11, 2))
    with pytest.raises(InstanceTooLargeError):
        count_graphs(10)
    with pytest.raises(PreconditionError):
        next(enumerate_free_graphs(5, 0))


def test_canonical_deletion_edge():
    g = disjoint_union(make_complete(3), make_matching(2))
    _, order = canonical_labeling(g)
    u, v = canonical_deletion_edge(g, order)
    assert g.has_edge(u, v)
    with pytest.raises(ValueError):
        canonical_deletion_edge(make_empty(3), (0, 1, 2))


def test_prefixes_cover_the_tree():
    shallow, frontier = augmentation_prefixes(5, None, 2)
    assert [g.edge_count for g, _ in shallow] == [0, 1]
    assert sorted(g.edge_count for g, _ in frontier) == [2, 2]
    assert scan_free_graphs(5, None).count == 34


def test_scan_summary_merge():
    a = ScanSummary()
    a.add(make_matching(4), canonical_form(make_matching(4)))
    b = ScanSummary()
    b.add(make_empty(4), canonical_form(make_empty(4)))
    merged = a.merge(b)
    assert merged.count == 2
    assert merged.max_edges == 2
    assert merged.sorted_forms() == [canonical_form(make_matching(4)).graph6]
    assert b.merge(a).sorted_forms() == merged.sorted_forms()


def test_parallel_scan_matches_serial():
    serial = scan_free_graphs(7, 2, jobs=1)
    parallel = scan_free_graphs(7, 2, jobs=2, depth=2)
    assert parallel.count == serial.count
    assert parallel.max_edges == serial.max_edges
    assert parallel.sorted_forms() == serial.sorted_forms()


def test_verify_clique_instance():
    report = verify_turan(6, 2)
    assert report.agree
    assert report.regime is TuranRegime.CLIQUE
    assert report.observed_max == 10
    k5_k1 = disjoint_union(make_complete(5), make_empty(1))
    assert report.extremal_forms == [canonical_form(k5_k1).graph6]


def test_verify_k1_boundary():
    report = verify_turan(4, 1)
    assert report.agree
    assert report.observed_max == 2
    assert report.extremal_forms == [canonical_form(make_matching(4)).graph6]


def test_verify_json_shape():
    doc = verify_turan(5, 1).to_json_dict()
    assert set(doc) == {
        "n", "k", "regime", "formula_value", "observed_max",
        "extremal_graph6", "agree", "graphs_scanned", "elapsed_ms",
    }
    assert doc["regime"] == "hub"
    assert doc["extremal_graph6"] == sorted(doc["extremal_graph6"])


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 8))
def test_theorem_sweep(n, k):
    assert verify_turan(n, k).agree


@pytest.mark.slow
@pytest.mark.parametrize("n, k", [(8, 1), (8, 2), (8, 3), (9, 1), (9, 3), (10, 2)])
def test_theorem_sweep_large(n, k):
    assert verify_turan(n, k, jobs=2).agree


@pytest.mark.slow
def test_boundary_double_extremal():
    report = verify_turan(9, 2)
    assert report.agree
    assert report.observed_max == 12
    assert len(report.extremal_forms) == 2


def test_lemma_sweep_order_five_abstains():
    report = verify_lemmas(5, 2)
    edgeless = next(s for s in report.summaries if s.kind.value == "edgeless")
    assert edgeless.skipped > 0
    assert edgeless.applied == 0
    assert report.ok


def test_lemma_sweep_order_seven():
    report = verify_lemmas(7, 2)
    assert report.graphs_checked > 0
    assert report.violation_count == 0


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3])
def test_lemma_sweep_order_eight(k):
    assert verify_lemmas(8, k).violation_count == 0


def test_lemma_sweep_limits():
    with pytest.raises(PreconditionError):
        verify_lemmas(6, 4)
    with pytest.raises(InstanceTooLargeError):
        verify_lemmas(9, 2)
