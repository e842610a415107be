"""
Isomorphism-free enumeration of k·P3-free graphs and the exhaustive sweeps
built on it.

Graphs are grown one edge at a time from the empty graph. A child G+e of a
parent G is kept when
  - it has no k·P3 (containment is monotone under adding edges, so every
    free graph has a free canonical parent), and
  - removing its canonical deletion edge (the edge with the largest pair of
    canonical labels) gives a graph isomorphic to G, and
  - no isomorphic child of the same parent was kept already.
Every isomorphism class is then produced exactly once.

For parallel scans the tree is cut at a fixed augmentation depth; the
coordinator scans the shallow levels and each subtree below the cut is a work
item. Partial results merge by max / union / sum, so the merged report does
not depend on scheduling.
"""

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Set, Tuple

from pydantic import BaseModel, Field

from .canonical import CanonicalForm, canonical_form, canonical_labeling
from .config import (
    DEFAULT_PARTITION_DEPTH,
    LEMMA_SWEEP_K,
    MAX_COUNT_ORDER,
    MAX_ENUM_ORDER,
    MAX_LEMMA_ORDER,
)
from .decomposition import (
    LemmaKind,
    Violation,
    best_leftover_decomposition,
    check_applicable_lemma,
)
from .errors import InstanceTooLargeError, PreconditionError
from .graph import Edge, Graph, make_empty
from .graph6 import decode_graph6, encode_graph6
from .log import log
from .packing import contains_k_p3
from .turan import TuranRegime, ex_kp3, extremal_graphs, regime

Node = Tuple[Graph, CanonicalForm]


def canonical_deletion_edge(g: Graph, order: Tuple[int, ...]) -> Edge:
    """Edge whose canonical labels (larger, smaller) are lexicographically largest"""
    rows = g.rows
    for j in range(g.n - 1, 0, -1):
        v = order[j]
        below = 0
        for i in range(j):
            if (rows[v] >> order[i]) & 1:
                below = i + 1
        if below:
            u = order[below - 1]
            return (min(u, v), max(u, v))
    raise ValueError("graph has no edges")


def _children(g: Graph, form: CanonicalForm, k: Optional[int]) -> Iterator[Node]:
    accepted: Set[CanonicalForm] = set()
    rejected: Set[CanonicalForm] = set()
    for u, v in g.non_edges():
        child = g.with_edge(u, v)
        if k is not None and contains_k_p3(child, k)[0]:
            continue
        child_form, order = canonical_labeling(child)
        if child_form in accepted or child_form in rejected:
            continue
        last = canonical_deletion_edge(child, order)
        if last != (u, v) and canonical_form(child.without_edge(*last)) != form:
            rejected.add(child_form)
            continue
        accepted.add(child_form)
        yield child, child_form


def _descend(g: Graph, form: CanonicalForm, k: Optional[int]) -> Iterator[Node]:
    yield g, form
    for child, child_form in _children(g, form, k):
        yield from _descend(child, child_form, k)


def _check_enum_args(n: int, k: Optional[int], limit: int) -> None:
    if n < 0:
        raise PreconditionError(f"order must be >= 0 (got {n})")
    if n > limit:
        raise InstanceTooLargeError(f"exhaustive enumeration is limited to {limit} vertices (got {n})")
    if k is not None and k < 1:
        raise PreconditionError(f"k must be >= 1 (got {k})")


def _root(n: int) -> Node:
    g = make_empty(n)
    return g, canonical_form(g)


def iter_free_graphs(n: int, k: Optional[int]) -> Iterator[Node]:
    """(graph, canonical form) per isomorphism class; k=None disables pruning"""
    _check_enum_args(n, k, MAX_ENUM_ORDER)
    yield from _descend(*_root(n), k)


def enumerate_free_graphs(n: int, k: int) -> Iterator[Graph]:
    """One representative per isomorphism class of k·P3-free graphs of order n"""
    for g, _ in iter_free_graphs(n, k):
        yield g


def count_graphs(n: int) -> int:
    """Number of isomorphism classes of graphs on n vertices"""
    _check_enum_args(n, None, MAX_COUNT_ORDER)
    return sum(1 for _ in _descend(*_root(n), None))


# --- partitioned scans ---

def augmentation_prefixes(n: int, k: Optional[int], depth: int) -> Tuple[List[Node], List[Node]]:
    """Split the search tree: (nodes above the cut, subtree roots at the cut)"""
    _check_enum_args(n, k, MAX_ENUM_ORDER)
    shallow: List[Node] = []
    level = [_root(n)]
    for _ in range(depth):
        shallow.extend(level)
        level = [child for g, form in level for child in _children(g, form, k)]
    return shallow, level


@dataclass
class ScanSummary:
    max_edges: int = -1
    forms: Set[CanonicalForm] = field(default_factory=set)
    count: int = 0

    def add(self, g: Graph, form: CanonicalForm) -> None:
        self.count += 1
        if g.edge_count > self.max_edges:
            self.max_edges = g.edge_count
            self.forms = {form}
        elif g.edge_count == self.max_edges:
            self.forms.add(form)

    def merge(self, other: "ScanSummary") -> "ScanSummary":
        out = ScanSummary(count=self.count + other.count)
        out.max_edges = max(self.max_edges, other.max_edges)
        for part in (self, other):
            if part.max_edges == out.max_edges:
                out.forms |= part.forms
        return out

    def sorted_forms(self) -> List[str]:
        return sorted(f.graph6 for f in self.forms)


def _scan_subtree(payload: Tuple[bytes, Optional[int]]) -> Tuple[int, List[bytes], int]:
    # process-pool entry point; graphs travel as graph6
    data, k = payload
    g = decode_graph6(data)
    summary = ScanSummary()
    for node in _descend(g, canonical_form(g), k):
        summary.add(*node)
    return summary.max_edges, [f.data for f in summary.forms], summary.count


def scan_free_graphs(
    n: int,
    k: Optional[int],
    jobs: int = 1,
    depth: int = DEFAULT_PARTITION_DEPTH,
) -> ScanSummary:
    """Max edge count, attaining classes and class count over all k·P3-free graphs"""
    if jobs <= 1:
        summary = ScanSummary()
        for node in iter_free_graphs(n, k):
            summary.add(*node)
        return summary

    shallow, frontier = augmentation_prefixes(n, k, depth)
    summary = ScanSummary()
    for node in shallow:
        summary.add(*node)
    log("verify", f"n={n} k={k}: {len(frontier)} subtrees on {jobs} workers")

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(_scan_subtree, (encode_graph6(g), k)) for g, _ in frontier]
        for future in as_completed(futures):
            max_edges, forms, count = future.result()
            part = ScanSummary(max_edges=max_edges, forms={CanonicalForm(f) for f in forms}, count=count)
            summary = summary.merge(part)
    return summary


# --- theorem verification ---

class VerificationReport(BaseModel):
    n: int
    k: int
    regime: TuranRegime
    formula_value: int
    observed_max: int
    extremal_forms: List[str]
    expected_forms: List[str]
    agree: bool
    graphs_scanned: int
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "regime": self.regime.value,
            "formula_value": self.formula_value,
            "observed_max": self.observed_max,
            "extremal_graph6": sorted(self.extremal_forms),
            "agree": self.agree,
            "graphs_scanned": self.graphs_scanned,
            "elapsed_ms": self.elapsed_ms,
        }


def verify_turan(
    n: int,
    k: int,
    jobs: int = 1,
    depth: int = DEFAULT_PARTITION_DEPTH,
) -> VerificationReport:
    """Compare the exhaustive maximum and its extremal classes with the formula"""
    if n < 1:
        raise PreconditionError(f"order must be >= 1 (got {n})")
    _check_enum_args(n, k, MAX_ENUM_ORDER)
    started = time.perf_counter()

    summary = scan_free_graphs(n, k, jobs=jobs, depth=depth)
    value = ex_kp3(n, k)
    observed = summary.sorted_forms()
    expected = sorted(canonical_form(g).graph6 for g in extremal_graphs(n, k).graphs)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    log("verify", f"n={n} k={k}: scanned {summary.count} classes in {elapsed_ms} ms")

    return VerificationReport(
        n=n,
        k=k,
        regime=regime(n, k),
        formula_value=value,
        observed_max=summary.max_edges,
        extremal_forms=observed,
        expected_forms=expected,
        agree=summary.max_edges == value and observed == expected,
        graphs_scanned=summary.count,
        elapsed_ms=elapsed_ms,
    )


# --- lemma sweep ---

class LemmaViolationRecord(BaseModel):
    graph6: str
    violation: Violation


class LemmaSummary(BaseModel):
    kind: LemmaKind
    applied: int = 0
    skipped: int = 0
    violations: List[LemmaViolationRecord] = Field(default_factory=list)


class LemmaSweepReport(BaseModel):
    n: int
    k: int
    graphs_scanned: int
    graphs_checked: int
    summaries: List[LemmaSummary]
    # leftover components with three or more vertices (graph6 of the host)
    shape_failures: List[str] = Field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def violation_count(self) -> int:
        return sum(len(s.violations) for s in self.summaries) + len(self.shape_failures)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0


def verify_lemmas(n: int, k: int) -> LemmaSweepReport:
    """Run the applicable structural check on every graph with (k-1)·P3 and no k·P3"""
    if k not in LEMMA_SWEEP_K:
        raise PreconditionError(f"lemma sweep supports k in {LEMMA_SWEEP_K} (got {k})")
    if n > MAX_LEMMA_ORDER:
        raise InstanceTooLargeError(f"lemma sweep is limited to {MAX_LEMMA_ORDER} vertices (got {n})")
    started = time.perf_counter()

    summaries = {kind: LemmaSummary(kind=kind) for kind in LemmaKind}
    shape_failures: List[str] = []
    scanned = checked = 0
    for g in enumerate_free_graphs(n, k):
        scanned += 1
        if not contains_k_p3(g, k - 1)[0]:
            continue
        checked += 1
        witness = best_leftover_decomposition(g, k)
        code = encode_graph6(g).decode("ascii")
        if not witness.is_matching_shape:
            shape_failures.append(code)
            continue
        report = check_applicable_lemma(g, k, witness)
        summary = summaries[report.kind]
        if report.skipped:
            summary.skipped += 1
            continue
        summary.applied += 1
        summary.violations.extend(LemmaViolationRecord(graph6=code, violation=v) for v in report.violations)

    elapsed_ms = int((time.perf_counter() - started) * 1000)
    log("lemmas", f"n={n} k={k}: checked {checked} of {scanned} classes in {elapsed_ms} ms")
    return LemmaSweepReport(
        n=n,
        k=k,
        graphs_scanned=scanned,
        graphs_checked=checked,
        summaries=list(summaries.values()),
        shape_failures=shape_failures,
        elapsed_ms=elapsed_ms,
    )
