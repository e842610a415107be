"""
Vertex-disjoint P3 packings: certificate checking, a greedy seed and an exact
branch-and-bound.

Branching follows a fixed order so witnesses are reproducible: the lowest
vertex with a neighbour in the residual graph is either placed as a centre
(neighbour pairs ascending), placed as an endpoint (middle vertex ascending,
far endpoint ascending), or excluded. The bound at a node is, per connected
component C of the residual, min(floor(|C|/3), greedy 3-path vertex cover of C);
both terms are upper bounds on the number of disjoint P3 inside C.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .graph import Edge, Graph, iter_bits


class PathTriple(NamedTuple):
    """Path x-y-z with centre y"""

    x: int
    y: int
    z: int

    @property
    def mask(self) -> int:
        return (1 << self.x) | (1 << self.y) | (1 << self.z)


def normalized(x: int, y: int, z: int) -> PathTriple:
    """The same path with its endpoints in ascending order"""
    return PathTriple(x, y, z) if x < z else PathTriple(z, y, x)


@dataclass(frozen=True)
class Packing:
    triples: Tuple[PathTriple, ...] = ()

    @classmethod
    def of(cls, triples: Iterable[Tuple[int, int, int]]) -> "Packing":
        return cls(tuple(PathTriple(*t) for t in triples))

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[PathTriple]:
        return iter(self.triples)

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for t in self.triples:
            mask |= t.mask
        return mask

    def vertices(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.vertex_mask))


def verify_packing(g: Graph, p: Packing) -> bool:
    """True iff the triples are pairwise vertex-disjoint paths of g"""
    for t in p:
        for v in t:
            g.check_vertex(v)
    used = 0
    for x, y, z in p:
        if len({x, y, z}) < 3:
            return False
        mask = (1 << x) | (1 << y) | (1 << z)
        if used & mask:
            return False
        used |= mask
        if not ((g.rows[y] >> x) & 1 and (g.rows[y] >> z) & 1):
            return False
    return True


def p3_triples(g: Graph) -> List[PathTriple]:
    """Every P3 of g, endpoints ascending, sorted lexicographically"""
    out = [
        PathTriple(a, y, b)
        for y in range(g.n)
        for a, b in combinations(iter_bits(g.rows[y]), 2)
    ]
    out.sort()
    return out


def greedy_packing(g: Graph) -> Packing:
    """Maximal packing: repeatedly take the lowest centre with two free neighbours"""
    rows = g.rows
    avail = g.vertex_mask
    triples: List[PathTriple] = []
    while True:
        for y in iter_bits(avail):
            free = rows[y] & avail
            if free.bit_count() >= 2:
                it = iter_bits(free)
                a, b = next(it), next(it)
                triples.append(PathTriple(a, y, b))
                avail &= ~((1 << a) | (1 << b) | (1 << y))
                break
        else:
            return Packing(tuple(triples))


class _PackingSearch:
    def __init__(self, g: Graph, target: Optional[int]):
        self.rows = g.rows
        self.target = target
        self.best: List[PathTriple] = list(greedy_packing(g).triples)
        self.done = False

    def _component(self, start: int, avail: int) -> int:
        rows = self.rows
        comp = frontier = 1 << start
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= rows[u]
            frontier = reach & avail & ~comp
            comp |= frontier
        return comp

    def _cover_size(self, comp: int, cap: int) -> int:
        # greedy 3-path vertex cover: drop max-degree vertices until max degree <= 1
        rows = self.rows
        rem = comp
        count = 0
        while count < cap:
            pick, pick_deg = -1, 1
            for v in iter_bits(rem):
                d = (rows[v] & rem).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
            if pick < 0:
                break
            rem &= ~(1 << pick)
            count += 1
        return count

    def upper_bound(self, avail: int) -> int:
        total = 0
        remaining = avail
        while remaining:
            low = remaining & -remaining
            comp = self._component(low.bit_length() - 1, avail)
            remaining &= ~comp
            size = comp.bit_count()
            if size >= 3:
                total += self._cover_size(comp, size // 3)
        return total

    def _record(self, current: List[PathTriple]) -> None:
        if len(current) > len(self.best):
            self.best = list(current)
        if self.target is not None and len(self.best) >= self.target:
            self.done = True

    def search(self, avail: int, current: List[PathTriple]) -> None:
        self._record(current)
        if self.done:
            return

        bound = len(current) + self.upper_bound(avail)
        if self.target is not None:
            if bound < self.target:
                return
        elif bound <= len(self.best):
            return

        rows = self.rows
        v = next((u for u in iter_bits(avail) if rows[u] & avail), None)
        if v is None:
            return
        nbrs = rows[v] & avail
        v_bit = 1 << v

        for a, b in combinations(iter_bits(nbrs), 2):
            current.append(PathTriple(a, v, b))
            self.search(avail & ~(v_bit | (1 << a) | (1 << b)), current)
            current.pop()
            if self.done:
                return

        for u in iter_bits(nbrs):
            for w in iter_bits(rows[u] & avail & ~v_bit):
                current.append(normalized(v, u, w))
                self.search(avail & ~(v_bit | (1 << u) | (1 << w)), current)
                current.pop()
                if self.done:
                    return

        self.search(avail & ~v_bit, current)

    def run(self, avail: int) -> List[PathTriple]:
        if self.target is None and len(self.best) == self.upper_bound(avail):
            return self.best
        self.search(avail, [])
        return self.best


def max_p3_packing(g: Graph) -> Tuple[int, Packing]:
    """Maximum number of vertex-disjoint P3 in g, with a witness"""
    best = _PackingSearch(g, None).run(g.vertex_mask)
    return len(best), Packing(tuple(sorted(best)))


def contains_k_p3(g: Graph, k: int) -> Tuple[bool, Optional[Packing]]:
    """Whether g contains k disjoint P3; the witness has exactly k triples"""
    if k <= 0:
        return True, Packing(())
    if 3 * k > g.n:
        return False, None
    best = _PackingSearch(g, k).run(g.vertex_mask)
    if len(best) < k:
        return False, None
    return True, Packing(tuple(sorted(best[:k])))


def unsaturated_edge(g: Graph, k: int) -> Optional[Edge]:
    """First missing edge whose addition leaves g free of k·P3, or None"""
    for u, v in g.non_edges():
        if not contains_k_p3(g.with_edge(u, v), k)[0]:
            return (u, v)
    return None


def is_saturated(g: Graph, k: int) -> bool:
    """g has no k·P3, and adding any missing edge creates one"""
    if contains_k_p3(g, k)[0]:
        return False
    return unsaturated_edge(g, k) is None
