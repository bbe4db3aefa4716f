"""Two-fold isomorphisms, double covers and TF-cousins of graphs."""

from .canon import are_isomorphic, automorphism_group, canonical_form, certificate, find_isomorphism
from .census import (
    Catalog,
    ConjectureVerdict,
    CousinRecord,
    census_cousins,
    ingest,
    read_catalog,
    report,
    verify_conjecture,
    write_catalog,
)
from .constructions import (
    ClawParams,
    SeedState,
    add_entangled_edge,
    add_pin,
    add_split_image_edges,
    claw_companion,
    claw_graph,
    claw_tf_pair,
    named_graph,
    seed_pair,
    split_image_complement,
    substitute,
)
from .cover import AltCover, Cover, InstabilityReport, TrivialReason, adc, cdc, instability_report
from .errors import (
    CapacityError,
    CatalogError,
    CensusError,
    ConstructionError,
    Graph6Error,
    IngestError,
    InvalidGuideError,
    TfCousinsError,
    TfPairError,
)
from .graph6 import parse_graph6, write_graph6
from .graphs import Graph, MixedGraph
from .liftfold import (
    FoldClass,
    FoldResult,
    Guide,
    Lift,
    base_graph_census,
    enumerate_guides,
    fold,
    guides_conjugate,
    lift,
    lift_component_count,
    make_guide,
    trivial_guide,
)
from .perm import PermGroup, Permutation
from .spectrum import CharPoly, adjacency_matrix, char_poly
from .tfiso import (
    EntanglementReport,
    TfGroup,
    TfPair,
    are_tf_cousins,
    entanglement,
    exhaustive_tf_isomorphism,
    find_tf_isomorphism,
    is_unstable,
    tf_automorphism_group,
    verify_tf,
)

__version__ = "0.1.0"

__all__ = [
    "AltCover",
    "CapacityError",
    "Catalog",
    "CatalogError",
    "CensusError",
    "CharPoly",
    "ClawParams",
    "ConjectureVerdict",
    "ConstructionError",
    "CousinRecord",
    "Cover",
    "EntanglementReport",
    "FoldClass",
    "FoldResult",
    "Graph",
    "Graph6Error",
    "Guide",
    "IngestError",
    "InstabilityReport",
    "InvalidGuideError",
    "Lift",
    "MixedGraph",
    "PermGroup",
    "Permutation",
    "SeedState",
    "TfCousinsError",
    "TfGroup",
    "TfPair",
    "TfPairError",
    "TrivialReason",
    "adc",
    "add_entangled_edge",
    "add_pin",
    "add_split_image_edges",
    "adjacency_matrix",
    "are_isomorphic",
    "are_tf_cousins",
    "automorphism_group",
    "base_graph_census",
    "canonical_form",
    "cdc",
    "census_cousins",
    "certificate",
    "char_poly",
    "claw_companion",
    "claw_graph",
    "claw_tf_pair",
    "entanglement",
    "enumerate_guides",
    "exhaustive_tf_isomorphism",
    "find_isomorphism",
    "find_tf_isomorphism",
    "fold",
    "guides_conjugate",
    "ingest",
    "instability_report",
    "is_unstable",
    "lift",
    "lift_component_count",
    "make_guide",
    "named_graph",
    "parse_graph6",
    "read_catalog",
    "report",
    "seed_pair",
    "split_image_complement",
    "substitute",
    "tf_automorphism_group",
    "trivial_guide",
    "verify_conjecture",
    "verify_tf",
    "write_catalog",
    "write_graph6",
]
