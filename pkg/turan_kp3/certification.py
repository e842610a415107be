"""
Certification of the extremal family beyond exhaustive range.

Each graph from extremal_graphs(n, k) is checked three ways: it has exactly
ex(n, k·P3) edges, the packing solver finds no k·P3 in it, and every missing
edge creates one. This needs only one solver call per missing edge, so it
runs well past the orders where full enumeration is possible.
"""

import time
from typing import List, Optional

from pydantic import BaseModel

from .config import MAX_CERTIFY_ORDER
from .errors import InstanceTooLargeError
from .graph import Edge, Graph
from .graph6 import encode_graph6
from .log import log
from .packing import contains_k_p3, unsaturated_edge
from .turan import TuranRegime, extremal_graphs

class CertifiedGraph(BaseModel):
    label: str
    graph6: str
    edge_count: int
    edge_count_ok: bool
    k_p3_free: bool
    saturated: bool
    # first missing edge whose addition leaves the graph k·P3-free
    unsaturated_edge: Optional[Edge] = None

    @property
    def certified(self) -> bool:
        return self.edge_count_ok and self.k_p3_free and self.saturated

class CertificationReport(BaseModel):
    n: int
    k: int
    regime: TuranRegime
    value: int
    graphs: List[CertifiedGraph]
    elapsed_ms: int = 0

    @property
    def certified(self) -> bool:
        return bool(self.graphs) and all(g.certified for g in self.graphs)


def certify_graph(g: Graph, k: int, value: int, label: str = "") -> CertifiedGraph:
    free = not contains_k_p3(g, k)[0]
    # saturation is only meaningful for a free graph
    gap = unsaturated_edge(g, k) if free else None
    return CertifiedGraph(
        label=label,
        graph6=encode_graph6(g).decode("ascii"),
        edge_count=g.edge_count,
        edge_count_ok=g.edge_count == value,
        k_p3_free=free,
        saturated=free and gap is None,
        unsaturated_edge=gap,
    )

def certify_extremal_family(n: int, k: int) -> CertificationReport:
    """Check edge count, freeness and edge-maximality of every extremal graph"""
    if n > MAX_CERTIFY_ORDER:
        raise InstanceTooLargeError(f"certification is limited to {MAX_CERTIFY_ORDER} vertices (got {n})")
    started = time.perf_counter()
    family = extremal_graphs(n, k)

    graphs = [
        certify_graph(g, k, family.value, label=d.label)
        for d, g in zip(family.descriptors, family.graphs)
    ]
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    for entry in graphs:
        status = "certified" if entry.certified else "FAILED"
        log("certify", f"n={n} k={k} {entry.label}: {entry.edge_count} edges, {status}")

    return CertificationReport(
        n=n,
        k=k,
        regime=family.regime,
        value=family.value,
        graphs=graphs,
        elapsed_ms=elapsed_ms,
    )
