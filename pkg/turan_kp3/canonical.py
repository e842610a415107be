"""
Canonical forms and isomorphism testing.

The canonical labeling is the vertex order, among those reachable by
refinement and individualization, whose column-by-column upper-triangle
adjacency bit string is lexicographically least. Two graphs get the same
CanonicalForm iff they are isomorphic.

Search tree pruning:
  - twins (N(u) - {v} == N(v) - {u}) in the target cell are interchangeable,
    so only the first of them is individualized;
  - automorphisms found when two leaves produce the same bit string are kept,
    and a vertex in the orbit of an explored sibling (under the found
    automorphisms fixing the current path) is skipped.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Graph, relabel
from .graph6 import decode_graph6, encode_graph6

Cells = List[List[int]]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 bytes of the canonically relabeled graph; equal iff isomorphic"""

    data: bytes

    @property
    def graph6(self) -> str:
        return self.data.decode("ascii")

    def to_graph(self) -> Graph:
        return decode_graph6(self.data)

    def __str__(self) -> str:
        return self.graph6


def refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until stable.

    Sub-cells are ordered by their count vectors, so the result depends only
    on the structure of the graph and the input ordering, never on labels.
    """
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig: Dict[int, Tuple[int, ...]] = {
                v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell
            }
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        if not changed:
            return out
        cells = out


def _leaf_key(rows: Sequence[int], order: Sequence[int]) -> int:
    key = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            key = (key << 1) | ((row >> order[i]) & 1)
    return key


class _LabelingSearch:
    def __init__(self, g: Graph):
        self.n = g.n
        self.rows = g.rows
        self.best_key: Optional[int] = None
        self.best_order: Optional[List[int]] = None
        self.automorphisms: List[List[int]] = []

    def _twins(self, u: int, v: int) -> bool:
        return (self.rows[u] & ~(1 << v)) == (self.rows[v] & ~(1 << u))

    def _orbit_root(self, path: List[int]) -> List[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in path):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def _leaf(self, cells: Cells) -> None:
        order = [cell[0] for cell in cells]
        key = _leaf_key(self.rows, order)
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_order = order
        elif key == self.best_key:
            gamma = [0] * self.n
            for a, b in zip(self.best_order, order):
                gamma[a] = b
            if any(gamma[v] != v for v in range(self.n)):
                self.automorphisms.append(gamma)

    def search(self, cells: Cells, path: List[int]) -> None:
        cells = refine(self.rows, cells)
        if len(cells) == self.n:
            self._leaf(cells)
            return

        index = next(i for i, cell in enumerate(cells) if len(cell) > 1)
        target = cells[index]
        explored: List[int] = []
        seen_generators = -1
        roots: List[int] = []
        for w in target:
            if any(self._twins(w, e) for e in explored):
                continue
            if explored:
                if seen_generators != len(self.automorphisms):
                    roots = self._orbit_root(path)
                    seen_generators = len(self.automorphisms)
                if any(roots[w] == roots[e] for e in explored):
                    continue
            child = cells[:index] + [[w], [v for v in target if v != w]] + cells[index + 1:]
            self.search(child, path + [w])
            explored.append(w)


def canonical_labeling(g: Graph) -> Tuple[CanonicalForm, Tuple[int, ...]]:
    """Return (form, order) where order[i] is the vertex of g given canonical label i"""
    search = _LabelingSearch(g)
    search.search([list(range(g.n))] if g.n else [], [])
    order = tuple(search.best_order)
    perm = [0] * g.n
    for label, v in enumerate(order):
        perm[v] = label
    return CanonicalForm(encode_graph6(relabel(g, perm))), order


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
