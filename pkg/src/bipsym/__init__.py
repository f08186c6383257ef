"""Symmetries of complete bipartite graphs embedded in S^3.

Decide which automorphisms of K_{n,m} (n, m > 2) are induced by
orientation-preserving or orientation-reversing homeomorphisms of some
embedding of the graph in the 3-sphere, construct an explicit realizing
isometry with vertex coordinates, and verify the result numerically.
"""

from ._version import __version__
from .census import CensusReport, census
from .classifier import (
    CaseId,
    Orientation,
    RealizabilityVerdict,
    classify,
    classify_aut,
)
from .core import (
    BipartiteAutomorphism,
    BipartiteShape,
    CycleSignature,
    Part,
    SideAction,
    SubdividedGraph,
    VertexId,
    automorphism_count,
    compose,
    enumerate_automorphisms,
    identity_automorphism,
    interchange_parts,
    inverse,
    make_automorphism,
    parse_cycles,
    power,
    signature,
)
from .errors import (
    BipsymError,
    DuplicateVertex,
    MixedParts,
    NotBijective,
    NotRealizable,
    OrderMismatch,
    OutOfTheoremScope,
    ParseError,
    PlacementFailure,
    PreconditionError,
    ShapeMismatch,
    SwapOnUnequalParts,
    TooLarge,
)
from .geometry import (
    FixedSetDescriptor,
    FixedSetKind,
    Isometry4,
    IsometryOrientation,
    SpatialEmbedding,
    fixed_set,
    glide_isometry,
    improper_isometry,
    realize,
    reflection_isometry,
    rotation_isometry,
)
from .verifier import (
    CheckResult,
    RealizationCertificate,
    smith_check,
    two_circle_check,
    verify,
)

__all__ = [
    "__version__",
    "BipartiteAutomorphism",
    "BipartiteShape",
    "BipsymError",
    "CaseId",
    "CensusReport",
    "CheckResult",
    "CycleSignature",
    "DuplicateVertex",
    "FixedSetDescriptor",
    "FixedSetKind",
    "Isometry4",
    "IsometryOrientation",
    "MixedParts",
    "NotBijective",
    "NotRealizable",
    "OrderMismatch",
    "Orientation",
    "OutOfTheoremScope",
    "ParseError",
    "Part",
    "PlacementFailure",
    "PreconditionError",
    "RealizabilityVerdict",
    "RealizationCertificate",
    "ShapeMismatch",
    "SideAction",
    "SpatialEmbedding",
    "SubdividedGraph",
    "SwapOnUnequalParts",
    "TooLarge",
    "VertexId",
    "automorphism_count",
    "census",
    "classify",
    "classify_aut",
    "compose",
    "enumerate_automorphisms",
    "fixed_set",
    "glide_isometry",
    "identity_automorphism",
    "improper_isometry",
    "interchange_parts",
    "inverse",
    "make_automorphism",
    "parse_cycles",
    "power",
    "realize",
    "reflection_isometry",
    "rotation_isometry",
    "signature",
    "smith_check",
    "two_circle_check",
    "verify",
]
