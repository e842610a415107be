"""
Immutable simple graphs stored as per-vertex adjacency bit rows.

Row v is an int whose bit u is set iff u and v are adjacent. Vertices are
0..n-1 with n <= MAX_ORDER. Constructors for the building blocks used by the
extremal constructions (K_n, M_t, disjoint union, join) live here too.
"""

from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from .config import MAX_ORDER
from .errors import GraphSizeError, InvalidVertexError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_order(n: int) -> None:
    if not 0 <= n <= MAX_ORDER:
        raise GraphSizeError(f"vertex count {n} outside 0..{MAX_ORDER}")


class Graph:
    """Simple undirected graph. Never mutated after construction."""

    __slots__ = ("_n", "_rows", "_edge_count")

    def __init__(self, n: int, rows: Sequence[int] = ()):
        _check_order(n)
        rows = tuple(int(r) for r in rows) if rows else (0,) * n
        if len(rows) != n:
            raise InvalidVertexError(f"expected {n} adjacency rows, got {len(rows)}")

        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise InvalidVertexError(f"row {v} references a vertex outside 0..{n - 1}")
            if (row >> v) & 1:
                raise InvalidVertexError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not (rows[u] >> v) & 1:
                    raise InvalidVertexError(f"asymmetric adjacency between {u} and {v}")

        self._n = n
        self._rows = rows
        self._edge_count = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def _trusted(cls, n: int, rows: Tuple[int, ...]) -> "Graph":
        # Internal fast path: rows already symmetric, loop-free and in range
        g = object.__new__(cls)
        g._n = n
        g._rows = rows
        g._edge_count = sum(r.bit_count() for r in rows) // 2
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from (u, v) pairs; repeated edges are merged"""
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise InvalidVertexError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    # --- basic queries ---

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidVertexError(f"vertex {v} outside 0..{self._n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool((self._rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self._rows[v].bit_count()

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self.check_vertex(v)
        return tuple(iter_bits(self._rows[v]))

    def degree_sequence(self) -> Tuple[int, ...]:
        """Degrees sorted ascending (a relabeling invariant)"""
        return tuple(sorted(r.bit_count() for r in self._rows))

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self._rows), default=0)

    def edges(self) -> Tuple[Edge, ...]:
        """All edges (u, v) with u < v, in ascending order"""
        out: List[Edge] = []
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return tuple(out)

    def non_edges(self) -> Tuple[Edge, ...]:
        """All missing pairs (u, v) with u < v, in ascending order"""
        full = self.vertex_mask
        out: List[Edge] = []
        for u, row in enumerate(self._rows):
            missing = (full & ~row) >> (u + 1)
            for v in iter_bits(missing):
                out.append((u, u + 1 + v))
        return tuple(out)

    def with_edge(self, u: int, v: int) -> "Graph":
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise InvalidVertexError(f"loop at vertex {u}")
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self._n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        self.check_vertex(u)
        self.check_vertex(v)
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self._n, tuple(rows))

    def edges_within(self, mask: int) -> int:
        """Number of edges with both ends in the vertex set `mask`"""
        return sum((self._rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def edges_between(self, a: int, b: int) -> int:
        """Number of edges from vertex set `a` to the disjoint vertex set `b`"""
        return sum((self._rows[v] & b).bit_count() for v in iter_bits(a))

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self._n, self._n), dtype=np.uint8)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    # --- value semantics ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        from .graph6 import encode_graph6

        return f"Graph(n={self._n}, m={self._edge_count}, graph6={encode_graph6(self).decode('ascii')!r})"


# --- constructors ---

def make_empty(n: int) -> Graph:
    _check_order(n)
    return Graph._trusted(n, (0,) * n)


def make_complete(n: int) -> Graph:
    """K_n"""
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << v) for v in range(n)))


def make_matching(t: int) -> Graph:
    """M_t: floor(t/2) disjoint edges (0,1),(2,3),... plus vertex t-1 isolated when t is odd"""
    _check_order(t)
    rows = [0] * t
    for u in range(0, t - 1, 2):
        rows[u] = 1 << (u + 1)
        rows[u + 1] = 1 << u
    return Graph._trusted(t, tuple(rows))


def make_path(n: int) -> Graph:
    """P_n on vertices 0-1-...-(n-1)"""
    _check_order(n)
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphSizeError(f"a cycle needs at least 3 vertices, got {n}")
    _check_order(n)
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def make_star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0"""
    _check_order(leaves + 1)
    return Graph.from_edges(leaves + 1, ((0, v) for v in range(1, leaves + 1)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G ∪ H; vertices of h are shifted by n(g)"""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphSizeError(f"union has {n} vertices, cap is {MAX_ORDER}")
    shift = g.n
    return Graph._trusted(n, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """G + H: disjoint union plus every edge between the two sides"""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise GraphSizeError(f"join has {n} vertices, cap is {MAX_ORDER}")
    shift = g.n
    g_side = g.vertex_mask
    h_side = h.vertex_mask << shift
    rows = tuple(r | h_side for r in g.rows) + tuple((r << shift) | g_side for r in h.rows)
    return Graph._trusted(n, rows)


def disjoint_copies(g: Graph, k: int) -> Graph:
    """k·G"""
    if k < 0:
        raise GraphSizeError(f"negative copy count {k}")
    out = make_empty(0)
    for _ in range(k):
        out = disjoint_union(out, g)
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """G[S], relabeled 0..|S|-1 in ascending order of S"""
    keep = sorted(set(int(v) for v in s))
    for v in keep:
        g.check_vertex(v)
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.rows[v]):
            i = position.get(u)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return Graph._trusted(len(keep), tuple(rows))


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """G - S"""
    drop = set(int(v) for v in s)
    for v in drop:
        g.check_vertex(v)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex v to perm[v]; perm must be a permutation of 0..n-1"""
    n = g.n
    if sorted(perm) != list(range(n)):
        raise InvalidVertexError(f"not a permutation of 0..{n - 1}: {list(perm)}")
    rows = [0] * n
    for v, row in enumerate(g.rows):
        new_row = 0
        for u in iter_bits(row):
            new_row |= 1 << perm[u]
        rows[perm[v]] = new_row
    return Graph._trusted(n, tuple(rows))
