"""
kp3-turan: exact Turán numbers ex(n, k·P3), their extremal graphs, and the
exhaustive machinery (P3 packing, canonical enumeration, structural checks)
used to verify them at desk scale.
"""

from .canonical import CanonicalForm, canonical_form, canonical_labeling, is_isomorphic
from .certification import CertificationReport, certify_extremal_family
from .config import APP_VERSION as __version__
from .decomposition import (
    DecompositionWitness,
    LemmaKind,
    LemmaReport,
    best_leftover_decomposition,
    check_lemma_edgeless,
    check_lemma_many_edges,
    check_lemma_one_edge,
)
from .enumeration import (
    LemmaSweepReport,
    VerificationReport,
    count_graphs,
    enumerate_free_graphs,
    verify_lemmas,
    verify_turan,
)
from .errors import TuranError
from .graph import Graph, disjoint_union, induced_subgraph, join, make_complete, make_empty, make_matching
from .graph6 import decode_graph6, encode_graph6
from .packing import Packing, PathTriple, contains_k_p3, max_p3_packing, verify_packing
from .turan import TuranRegime, erdos_gallai_bound, ex_kp3, extremal_graphs, gorgol_lower_bounds, regime
