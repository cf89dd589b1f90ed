import pytest

from src.config.settings import Settings, reset_settings
from src.core.graph_analyzer import GraphAnalyzer
from src.core.graph_builder import build_tgraph
from src.core.harness import VerificationHarness
from src.models.group_models import GeneratorBounds


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def analyzer(settings) -> GraphAnalyzer:
    return GraphAnalyzer(settings)


@pytest.fixture(scope="session")
def harness() -> VerificationHarness:
    """Shared across the session so observations are cached between tests."""
    return VerificationHarness(Settings(), workers=1)


@pytest.fixture
def make_graph(settings):
    def build(*bounds: int, t: int):
        return build_tgraph(GeneratorBounds(tuple(bounds)), t, settings)

    return build


@pytest.fixture
def fresh_settings():
    """Forget process-wide settings before and after the test."""
    reset_settings()
    yield
    reset_settings()
