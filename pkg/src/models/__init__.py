from .errors import (
    IncompatibleElementsError,
    InvalidParameterError,
    OracleDivergenceError,
    SizeLimitError,
    TGraphError,
)
from .group_models import GeneratorBounds, GroupElement, GroupFamily, NamedGroup
from .graph_models import (
    AnalysisReport,
    BipartiteResult,
    ComponentClassification,
    ComponentKind,
    InducedSubgraph,
    LaplacianMatrix,
    TGraph,
)
from .claim_models import (
    CSV_HEADER,
    ClaimInstance,
    ClaimStatus,
    ConjectureReport,
    Prediction,
    SweepSummary,
    TableFixture,
)

__all__ = [
    "TGraphError",
    "InvalidParameterError",
    "IncompatibleElementsError",
    "SizeLimitError",
    "OracleDivergenceError",
    "GeneratorBounds",
    "GroupElement",
    "GroupFamily",
    "NamedGroup",
    "TGraph",
    "InducedSubgraph",
    "LaplacianMatrix",
    "ComponentKind",
    "ComponentClassification",
    "BipartiteResult",
    "AnalysisReport",
    "Prediction",
    "ClaimInstance",
    "ClaimStatus",
    "SweepSummary",
    "TableFixture",
    "ConjectureReport",
    "CSV_HEADER",
]
