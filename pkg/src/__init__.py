__version__ = "0.1.0"

from .core.graph_analyzer import GraphAnalyzer
from .core.graph_builder import build_tgraph
from .core.harness import VerificationHarness
from .core.presentation import parse_group_spec
from .models.group_models import GeneratorBounds, GroupElement, NamedGroup
from .models.graph_models import AnalysisReport, TGraph

__all__ = [
    "GraphAnalyzer",
    "build_tgraph",
    "VerificationHarness",
    "parse_group_spec",
    "GeneratorBounds",
    "GroupElement",
    "NamedGroup",
    "AnalysisReport",
    "TGraph",
]
