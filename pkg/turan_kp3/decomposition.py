"""
Best-leftover decompositions and the structural checks built on them.

For a graph G with (k-1)·P3 but no k·P3, choose H = (k-1)·P3 so that
G' = G - V(H) keeps as many edges as possible. G' is then a matching u_i v_i
(s edges) plus isolated vertices w_i (t of them), and the edges running from
G' into each path of H obey tight counting bounds. Each bound family has a
checker below that takes the decomposition explicitly and reports every
violated clause.

Checkers validate the shape they need (s and t, a valid packing of k-1
paths, a witness that actually describes g) and raise PreconditionError
otherwise. The no-k·P3 hypothesis is the caller's responsibility; the sweep
driver only feeds graphs that satisfy it.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from .config import MAX_DECOMPOSITION_ORDER
from .errors import InstanceTooLargeError, PreconditionError
from .graph import Edge, Graph, iter_bits
from .packing import Packing, PathTriple, p3_triples, verify_packing


@dataclass(frozen=True)
class DecompositionWitness:
    paths: Tuple[PathTriple, ...]
    leftover_edges: Tuple[Edge, ...]
    isolated: Tuple[int, ...]
    # components of G' with three or more vertices (empty when G has no k·P3)
    oversized_components: Tuple[Tuple[int, ...], ...] = ()

    @property
    def leftover_edge_count(self) -> int:
        return len(self.leftover_edges)

    @property
    def is_matching_shape(self) -> bool:
        return not self.oversized_components

    @property
    def path_mask(self) -> int:
        return Packing(self.paths).vertex_mask


def describe_leftover(g: Graph, paths: Sequence[PathTriple]) -> DecompositionWitness:
    """Decomposition record for H = paths (no optimality implied)"""
    rest = g.vertex_mask & ~Packing(tuple(paths)).vertex_mask
    rows = g.rows
    edges: List[Edge] = []
    isolated: List[int] = []
    for v in iter_bits(rest):
        inside = rows[v] & rest
        if not inside:
            isolated.append(v)
        for u in iter_bits(inside >> (v + 1)):
            edges.append((v, v + 1 + u))

    oversized: List[Tuple[int, ...]] = []
    seen = 0
    for v in iter_bits(rest):
        if (seen >> v) & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= rows[u]
            frontier = reach & rest & ~comp
            comp |= frontier
        seen |= comp
        if comp.bit_count() >= 3:
            oversized.append(tuple(iter_bits(comp)))

    return DecompositionWitness(
        paths=tuple(paths),
        leftover_edges=tuple(edges),
        isolated=tuple(isolated),
        oversized_components=tuple(oversized),
    )


def iter_packings(g: Graph, size: int) -> Iterator[Tuple[PathTriple, ...]]:
    """All packings of exactly `size` triples, in lexicographic order"""
    triples = p3_triples(g)
    chosen: List[PathTriple] = []

    def extend(start: int, used: int) -> Iterator[Tuple[PathTriple, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(triples)):
            t = triples[i]
            if t.mask & used:
                continue
            chosen.append(t)
            yield from extend(i + 1, used | t.mask)
            chosen.pop()

    yield from extend(0, 0)


def best_leftover_decomposition(g: Graph, k: int) -> Optional[DecompositionWitness]:
    """H = (k-1)·P3 maximizing e(G - V(H)); lexicographically least on ties.

    Returns None when g has no (k-1)·P3.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1 (got {k})")
    if g.n > MAX_DECOMPOSITION_ORDER:
        raise InstanceTooLargeError(
            f"exhaustive decomposition is limited to {MAX_DECOMPOSITION_ORDER} vertices (got {g.n})"
        )
    full = g.vertex_mask
    best: Optional[Tuple[PathTriple, ...]] = None
    best_s = -1
    for paths in iter_packings(g, k - 1):
        s = g.edges_within(full & ~Packing(paths).vertex_mask)
        if s > best_s:
            best, best_s = paths, s
    if best is None:
        return None
    return describe_leftover(g, best)


# --- checkers ---

class LemmaKind(str, Enum):
    EDGELESS = "edgeless"        # G' has no edge
    ONE_EDGE = "one-edge"        # G' has exactly one edge
    MANY_EDGES = "many-edges"    # G' has two or more edges


class Violation(BaseModel):
    clause: str
    triple_index: int
    vertices: List[int]
    observed: int
    allowed: int


class LemmaReport(BaseModel):
    kind: LemmaKind
    holds: bool
    skipped: bool = False
    violations: List[Violation] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


def _report(kind: LemmaKind, violations: List[Violation], notes: Optional[List[str]] = None) -> LemmaReport:
    return LemmaReport(kind=kind, holds=not violations, violations=violations, notes=notes or [])


def _check_witness(g: Graph, k: int, w: DecompositionWitness) -> None:
    if len(w.paths) != k - 1:
        raise PreconditionError(f"decomposition has {len(w.paths)} paths, expected {k - 1}")
    if not verify_packing(g, Packing(w.paths)):
        raise PreconditionError("decomposition paths are not a packing of the graph")
    actual = describe_leftover(g, w.paths)
    if (actual.leftover_edges, actual.isolated) != (tuple(w.leftover_edges), tuple(w.isolated)):
        raise PreconditionError("decomposition leftover does not match the graph")
    if not actual.is_matching_shape:
        raise PreconditionError("leftover has a component with three or more vertices")


def subset_bound_failure(degrees: Sequence[int]) -> Optional[int]:
    """Smallest p >= 3 such that some p vertices send more than p edges to the
    path, or None.

    Only the p largest degrees matter for each p, so prefix sums of the sorted
    degrees decide it.
    """
    total = 0
    for p, d in enumerate(sorted(degrees, reverse=True), start=1):
        total += d
        if p >= 3 and total > p:
            return p
    return None


def subset_bound_holds(degrees: Sequence[int]) -> bool:
    """Every subset of p >= 3 vertices sends at most p edges to the path"""
    return subset_bound_failure(degrees) is None


def check_lemma_edgeless(g: Graph, k: int, w: DecompositionWitness) -> LemmaReport:
    """G' edgeless with t >= 3: subsets of p leftover vertices send at most p
    edges to each path, and two leftover vertices touching the same path both
    touch its centre only."""
    _check_witness(g, k, w)
    if w.leftover_edge_count != 0:
        raise PreconditionError(f"needs an edgeless leftover, found {w.leftover_edge_count} edges")
    if len(w.isolated) < 3:
        return LemmaReport(
            kind=LemmaKind.EDGELESS, holds=True, skipped=True,
            notes=[f"abstained: {len(w.isolated)} leftover vertices, bound is stated for at least 3"],
        )

    rows = g.rows
    violations: List[Violation] = []
    for j, path in enumerate(w.paths):
        degrees = {v: (rows[v] & path.mask).bit_count() for v in w.isolated}
        ranked = sorted(w.isolated, key=lambda v: (-degrees[v], v))
        p = subset_bound_failure([degrees[v] for v in ranked])
        if p is not None:
            violations.append(Violation(
                clause="subset-bound", triple_index=j,
                vertices=sorted(ranked[:p]), observed=sum(degrees[v] for v in ranked[:p]), allowed=p,
            ))

        ends = (1 << path.x) | (1 << path.z)
        hitters = [v for v in w.isolated if degrees[v]]
        for a, b in combinations(hitters, 2):
            pair = (1 << a) | (1 << b)
            centre_only = all(rows[v] & path.mask == 1 << path.y for v in (a, b))
            if not centre_only:
                violations.append(Violation(
                    clause="shared-path-centre-only", triple_index=j,
                    vertices=[a, b], observed=g.edges_between(pair, ends), allowed=0,
                ))
    return _report(LemmaKind.EDGELESS, violations)


def check_lemma_one_edge(g: Graph, k: int, w: DecompositionWitness) -> LemmaReport:
    """G' is one edge u1v1 plus t >= 2 isolated vertices.

    Per path: at most 4 edges from {u1,v1} means at most 4 from {u1,v1,w,w'}
    for any two isolated w, w'; 5 or more means no isolated vertex touches it.
    """
    _check_witness(g, k, w)
    if w.leftover_edge_count != 1:
        raise PreconditionError(f"needs exactly one leftover edge, found {w.leftover_edge_count}")
    if len(w.isolated) < 2:
        return LemmaReport(
            kind=LemmaKind.ONE_EDGE, holds=True, skipped=True,
            notes=[f"abstained: {len(w.isolated)} isolated leftover vertices, need at least 2"],
        )

    u1, v1 = w.leftover_edges[0]
    edge = (1 << u1) | (1 << v1)
    violations: List[Violation] = []
    notes: List[str] = []
    for j, path in enumerate(w.paths):
        to_edge = g.edges_between(edge, path.mask)
        if to_edge <= 4:
            for a, b in combinations(w.isolated, 2):
                quad = edge | (1 << a) | (1 << b)
                observed = g.edges_between(quad, path.mask)
                if observed > 4:
                    violations.append(Violation(
                        clause="quad-bound-4", triple_index=j,
                        vertices=sorted((u1, v1, a, b)), observed=observed, allowed=4,
                    ))
        else:
            notes.append(f"path {j}: at most 6 edges from the leftover edge holds trivially")
            for v in w.isolated:
                observed = g.edges_between(1 << v, path.mask)
                if observed:
                    violations.append(Violation(
                        clause="isolated-misses-path", triple_index=j,
                        vertices=[v], observed=observed, allowed=0,
                    ))
    return _report(LemmaKind.ONE_EDGE, violations, notes)


def check_lemma_many_edges(g: Graph, k: int, w: DecompositionWitness) -> LemmaReport:
    """G' has s >= 2 edges. Take the (edge, path) pair with the most edges
    between them as (u1v1, path 1).

    Max <= 4: {u1,v1,ui,vi} sends at most 4 edges to every path.
    Max >= 5: at most 6 edges to every path, reaching 6 only when one of the
    two edges sends all 6 and the other none, and nothing else in G' touches
    path 1.
    """
    _check_witness(g, k, w)
    s = w.leftover_edge_count
    if s < 2:
        raise PreconditionError(f"needs at least two leftover edges, found {s}")
    if not w.paths:
        return _report(LemmaKind.MANY_EDGES, [])

    masks = [(1 << u) | (1 << v) for u, v in w.leftover_edges]
    counts = [[g.edges_between(m, path.mask) for path in w.paths] for m in masks]
    top, top_path = max(
        ((i, j) for i in range(s) for j in range(len(w.paths))),
        key=lambda ij: (counts[ij[0]][ij[1]], -ij[0], -ij[1]),
    )
    peak = counts[top][top_path]
    first = masks[top]

    violations: List[Violation] = []
    for i in range(s):
        if i == top:
            continue
        quad_vertices = sorted(w.leftover_edges[top] + w.leftover_edges[i])
        for j in range(len(w.paths)):
            c1, ci = counts[top][j], counts[i][j]
            observed = c1 + ci
            if peak <= 4:
                if observed > 4:
                    violations.append(Violation(
                        clause="quad-bound-4", triple_index=j,
                        vertices=quad_vertices, observed=observed, allowed=4,
                    ))
            elif observed > 6:
                violations.append(Violation(
                    clause="quad-bound-6", triple_index=j,
                    vertices=quad_vertices, observed=observed, allowed=6,
                ))
            elif observed == 6 and min(c1, ci) != 0:
                violations.append(Violation(
                    clause="six-from-one-edge", triple_index=j,
                    vertices=quad_vertices, observed=min(c1, ci), allowed=0,
                ))

    if peak >= 5:
        others = g.vertex_mask & ~w.path_mask & ~first
        path = w.paths[top_path]
        for v in iter_bits(others):
            observed = g.edges_between(1 << v, path.mask)
            if observed:
                violations.append(Violation(
                    clause="others-miss-peak-path", triple_index=top_path,
                    vertices=[v], observed=observed, allowed=0,
                ))
    return _report(LemmaKind.MANY_EDGES, violations)


def check_applicable_lemma(g: Graph, k: int, w: DecompositionWitness) -> LemmaReport:
    """Dispatch on the number of leftover edges"""
    s = w.leftover_edge_count
    if s == 0:
        return check_lemma_edgeless(g, k, w)
    if s == 1:
        return check_lemma_one_edge(g, k, w)
    return check_lemma_many_edges(g, k, w)
