"""
Closed-form Turán numbers ex(n, k·P3) and the graphs attaining them.

Four regimes:
  dense     n < 3k              K_n
  clique    3k <= n < 5k-1      K_{3k-1} ∪ M_{n-3k+1}
  boundary  n = 5k-1            K_{3k-1} ∪ M_{2k}  and  K_{k-1} + M_{4k}
  hub       n > 5k-1            K_{k-1} + M_{n-k+1}

Values are exact Python ints and never allocate graphs; graphs are only built
by extremal_graphs() and only up to the vertex cap. The older bounds and
closed forms used as consistency oracles live here as well.
"""

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import List, NamedTuple, Tuple

from .canonical import is_isomorphic
from .config import MAX_ORDER
from .errors import FormulaDomainError, GraphSizeError
from .graph import Graph, disjoint_copies, disjoint_union, join, make_complete, make_matching


class TuranRegime(str, Enum):
    DENSE = "dense"
    CLIQUE = "clique"
    BOUNDARY = "boundary"
    HUB = "hub"


def _check_positive(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise FormulaDomainError(f"n and k must be >= 1 (got n={n}, k={k})")


def regime(n: int, k: int) -> TuranRegime:
    _check_positive(n, k)
    if n < 3 * k:
        return TuranRegime.DENSE
    if n < 5 * k - 1:
        return TuranRegime.CLIQUE
    if n == 5 * k - 1:
        return TuranRegime.BOUNDARY
    return TuranRegime.HUB


def clique_side_edges(n: int, k: int) -> int:
    """e(K_{3k-1} ∪ M_{n-3k+1}), defined for n >= 3k-1"""
    return comb(3 * k - 1, 2) + (n - 3 * k + 1) // 2


def hub_side_edges(n: int, k: int) -> int:
    """e(K_{k-1} + M_{n-k+1}), defined for n >= k-1"""
    return comb(k - 1, 2) + (k - 1) * (n - k + 1) + (n - k + 1) // 2


def ex_kp3(n: int, k: int) -> int:
    """ex(n, k·P3)"""
    r = regime(n, k)
    if r is TuranRegime.DENSE:
        return comb(n, 2)
    if r is TuranRegime.CLIQUE:
        return clique_side_edges(n, k)
    if r is TuranRegime.BOUNDARY:
        return comb(3 * k - 1, 2) + k
    return hub_side_edges(n, k)


# --- constructions ---

class ConstructionKind(str, Enum):
    COMPLETE = "complete"
    CLIQUE_UNION_MATCHING = "clique-union-matching"
    HUB_JOIN_MATCHING = "hub-join-matching"


@dataclass(frozen=True)
class Construction:
    """A symbolic extremal graph: K_a, K_a ∪ M_b or K_a + M_b"""

    kind: ConstructionKind
    clique: int
    matching: int = 0

    @property
    def order(self) -> int:
        return self.clique + self.matching

    @property
    def edge_count(self) -> int:
        a, b = self.clique, self.matching
        if self.kind is ConstructionKind.HUB_JOIN_MATCHING:
            return comb(a, 2) + a * b + b // 2
        return comb(a, 2) + b // 2

    @property
    def label(self) -> str:
        if self.kind is ConstructionKind.COMPLETE:
            return f"K_{self.clique}"
        op = "∪" if self.kind is ConstructionKind.CLIQUE_UNION_MATCHING else "+"
        return f"K_{self.clique} {op} M_{self.matching}"

    def build(self) -> Graph:
        if self.order > MAX_ORDER:
            raise GraphSizeError(f"{self.label} has {self.order} vertices, cap is {MAX_ORDER}")
        if self.kind is ConstructionKind.COMPLETE:
            return make_complete(self.clique)
        if self.kind is ConstructionKind.CLIQUE_UNION_MATCHING:
            return disjoint_union(make_complete(self.clique), make_matching(self.matching))
        return join(make_complete(self.clique), make_matching(self.matching))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ExtremalFamily:
    n: int
    k: int
    regime: TuranRegime
    value: int
    descriptors: Tuple[Construction, ...]
    graphs: Tuple[Graph, ...]

    @property
    def realized(self) -> bool:
        return len(self.graphs) == len(self.descriptors)


def extremal_descriptors(n: int, k: int) -> Tuple[Construction, ...]:
    """Symbolic extremal graphs, clique side first; any size"""
    r = regime(n, k)
    clique_side = Construction(ConstructionKind.CLIQUE_UNION_MATCHING, 3 * k - 1, n - 3 * k + 1)
    hub_side = Construction(ConstructionKind.HUB_JOIN_MATCHING, k - 1, n - k + 1)
    if r is TuranRegime.DENSE:
        return (Construction(ConstructionKind.COMPLETE, n),)
    if r is TuranRegime.CLIQUE:
        return (clique_side,)
    if r is TuranRegime.HUB:
        return (hub_side,)
    # K_2 ∪ M_2 and K_0 + M_4 are both M_4
    if k == 1:
        return (clique_side,)
    return (clique_side, hub_side)


def extremal_graphs(n: int, k: int) -> ExtremalFamily:
    """All extremal graphs for (n, k), deduplicated up to isomorphism.

    Above the vertex cap the family carries descriptors only (graphs is empty).
    """
    descriptors = extremal_descriptors(n, k)
    graphs: List[Graph] = []
    if n <= MAX_ORDER:
        # the boundary pair is built unconditionally so dedup is observable at k=1
        candidates = [d.build() for d in descriptors]
        if regime(n, k) is TuranRegime.BOUNDARY and k == 1:
            candidates.append(join(make_complete(0), make_matching(n)))
        for g in candidates:
            if not any(is_isomorphic(g, h) for h in graphs):
                graphs.append(g)
    return ExtremalFamily(
        n=n,
        k=k,
        regime=regime(n, k),
        value=ex_kp3(n, k),
        descriptors=descriptors,
        graphs=tuple(graphs),
    )


def is_unique_extremal(n: int, k: int) -> bool:
    return not (regime(n, k) is TuranRegime.BOUNDARY and k >= 2)


# --- historical bounds and closed forms ---

def erdos_gallai_bound(n: int, l: int) -> int:
    """Upper bound floor((l-2)n/2) on ex(n, P_l), valid for n >= l >= 2"""
    if l < 2 or n < l:
        raise FormulaDomainError(f"need n >= l >= 2 (got n={n}, l={l})")
    return (l - 2) * n // 2


def erdos_gallai_is_tight(n: int, l: int) -> bool:
    erdos_gallai_bound(n, l)
    return n % (l - 1) == 0


def erdos_gallai_extremal_graph(n: int, l: int) -> Graph:
    """(n/(l-1))·K_{l-1}, the graph attaining the bound when (l-1) divides n"""
    if not erdos_gallai_is_tight(n, l):
        raise FormulaDomainError(f"bound is not attained for n={n}, l={l}: {l - 1} does not divide {n}")
    return disjoint_copies(make_complete(l - 1), n // (l - 1))


class GorgolBounds(NamedTuple):
    clique_side: int
    hub_side: int

    @property
    def best(self) -> int:
        return max(self.clique_side, self.hub_side)

    @property
    def attained_by(self) -> str:
        if self.clique_side == self.hub_side:
            return "both"
        return "clique" if self.clique_side > self.hub_side else "hub"


def gorgol_lower_bounds(n: int, k: int) -> GorgolBounds:
    """Edge counts of the two lower-bound constructions, for n >= 3k"""
    _check_positive(n, k)
    if n < 3 * k:
        raise FormulaDomainError(f"lower-bound constructions need n >= 3k (got n={n}, k={k})")
    return GorgolBounds(clique_side_edges(n, k), hub_side_edges(n, k))


def two_copies_value(n: int) -> int:
    """ex(n, 2·P3) = floor((n-1)/2) + n - 1 for n >= 9"""
    if n < 9:
        raise FormulaDomainError(f"closed form for 2·P3 needs n >= 9 (got {n})")
    return (n - 1) // 2 + n - 1


def three_copies_value(n: int) -> int:
    """ex(n, 3·P3) = floor(n/2) + 2n - 4 for n >= 14"""
    if n < 14:
        raise FormulaDomainError(f"closed form for 3·P3 needs n >= 14 (got {n})")
    return n // 2 + 2 * n - 4


def large_order_value(n: int, k: int) -> int:
    """C(k-1,2) + (n-k+1)(k-1) + floor((n-k+1)/2), known to equal ex for n >= 7k"""
    _check_positive(n, k)
    if n < 7 * k:
        raise FormulaDomainError(f"large-order closed form needs n >= 7k (got n={n}, k={k})")
    return hub_side_edges(n, k)


def conjectured_value(n: int, k: int) -> int:
    """floor((n-k+1)/2) + (k-1)n - k(k-1)/2, the hub count written differently"""
    _check_positive(n, k)
    if n < k:
        raise FormulaDomainError(f"need n >= k (got n={n}, k={k})")
    return (n - k + 1) // 2 + (k - 1) * n - k * (k - 1) // 2
