import logging
import os
import tomllib
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from ..models.errors import InvalidParameterError

logger = logging.getLogger(__name__)

MAX_ELEMENTS_ENV = "TGRAPH_MAX_ELEMENTS"


def load_config_from_pyproject(config_path: Optional[Path] = None) -> Dict[str, Any]:
    """Load the [tool.tgraph] table from pyproject.toml."""
    if config_path is None:
        config_path = Path(__file__).parent.parent.parent / "pyproject.toml"

    if not config_path.exists():
        return {}

    try:
        with open(config_path, "rb") as f:
            config = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as load_err:
        logger.warning("Ignoring unreadable config %s: %s", config_path, load_err)
        return {}
    return config.get("tool", {}).get("tgraph", {})


@dataclass(frozen=True)
class SweepDefaults:
    """Default parameter ranges for claim sweeps and conjecture scans."""

    n_max: int = 50
    mn_max: int = 15
    cyclic_max: int = 64
    subgroup_max: int = 60
    lemma_max: int = 12
    oracle_m: Tuple[int, ...] = (2, 3, 4)
    oracle_n_max: int = 12
    conjecture1_m: Tuple[int, ...] = (2, 4, 6)
    conjecture1_n_max: int = 12
    conjecture3_n_max: int = 20
    conjecture4_max: int = 4


@dataclass(frozen=True)
class Settings:
    """
    Resource caps and sweep defaults.

    Attributes:
        max_elements (int): Largest accepted Π e_i.
        spectral_max_order (int): Largest graph order for which a Laplacian is built.
        exact_rank_max_order (int): Bareiss is used up to this order, modular rank above.
        chromatic_max_component (int): Vertex cap for exact colouring search.
        isomorphism_max_vertices (int): Vertex cap for the backtracking matcher.
        build_block_cells (int): Distance cells computed per block of the pairwise build.
        sweep (SweepDefaults): Default sweep ranges.
    """

    max_elements: int = 1_000_000
    spectral_max_order: int = 2048
    exact_rank_max_order: int = 512
    chromatic_max_component: int = 64
    isomorphism_max_vertices: int = 32
    build_block_cells: int = 4_000_000
    sweep: SweepDefaults = field(default_factory=SweepDefaults)

    def with_overrides(self, **changes: Any) -> "Settings":
        return replace(self, **changes)


def _tuple(value: Any, default: Tuple[int, ...]) -> Tuple[int, ...]:
    if value is None:
        return default
    return tuple(int(v) for v in value)


def build_settings(
    raw: Dict[str, Any], environ: Optional[Dict[str, str]] = None
) -> Settings:
    """
    Merge a raw [tool.tgraph] table with defaults and the environment.

    Args:
        raw (Dict): Parsed config table (may be empty).
        environ (Dict, optional): Environment mapping, os.environ by default.

    Returns:
        Settings: Frozen settings.
    """
    environ = os.environ if environ is None else environ
    base = Settings()
    sweep_raw = raw.get("sweep", {})
    sweep_base = base.sweep

    sweep = SweepDefaults(
        n_max=int(sweep_raw.get("n_max", sweep_base.n_max)),
        mn_max=int(sweep_raw.get("mn_max", sweep_base.mn_max)),
        cyclic_max=int(sweep_raw.get("cyclic_max", sweep_base.cyclic_max)),
        subgroup_max=int(sweep_raw.get("subgroup_max", sweep_base.subgroup_max)),
        lemma_max=int(sweep_raw.get("lemma_max", sweep_base.lemma_max)),
        oracle_m=_tuple(sweep_raw.get("oracle_m"), sweep_base.oracle_m),
        oracle_n_max=int(sweep_raw.get("oracle_n_max", sweep_base.oracle_n_max)),
        conjecture1_m=_tuple(sweep_raw.get("conjecture1_m"), sweep_base.conjecture1_m),
        conjecture1_n_max=int(
            sweep_raw.get("conjecture1_n_max", sweep_base.conjecture1_n_max)
        ),
        conjecture3_n_max=int(
            sweep_raw.get("conjecture3_n_max", sweep_base.conjecture3_n_max)
        ),
        conjecture4_max=int(
            sweep_raw.get("conjecture4_max", sweep_base.conjecture4_max)
        ),
    )

    max_elements = int(raw.get("max_elements", base.max_elements))
    env_value = environ.get(MAX_ELEMENTS_ENV)
    if env_value is not None:
        try:
            max_elements = int(env_value)
        except ValueError:
            raise InvalidParameterError(
                f"{MAX_ELEMENTS_ENV} must be an integer, got {env_value!r}"
            )
        if max_elements < 1:
            raise InvalidParameterError(f"{MAX_ELEMENTS_ENV} must be positive")

    return Settings(
        max_elements=max_elements,
        spectral_max_order=int(raw.get("spectral_max_order", base.spectral_max_order)),
        exact_rank_max_order=int(
            raw.get("exact_rank_max_order", base.exact_rank_max_order)
        ),
        chromatic_max_component=int(
            raw.get("chromatic_max_component", base.chromatic_max_component)
        ),
        isomorphism_max_vertices=int(
            raw.get("isomorphism_max_vertices", base.isomorphism_max_vertices)
        ),
        build_block_cells=int(raw.get("build_block_cells", base.build_block_cells)),
        sweep=sweep,
    )


# Load once
_CONFIG = load_config_from_pyproject()
_SETTINGS: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the process-wide settings, built lazily from pyproject and env."""
    global _SETTINGS
    if _SETTINGS is None:
        _SETTINGS = build_settings(_CONFIG)
    return _SETTINGS


def reset_settings() -> None:
    """Forget cached settings so the environment is read again."""
    global _SETTINGS
    _SETTINGS = None
