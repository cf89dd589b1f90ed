from typing import Optional

import numpy as np

from ..config.settings import Settings
from ..models.group_models import GeneratorBounds, GroupElement
from .presentation import exponent_array


def d1(x: GroupElement, y: GroupElement) -> int:
    """Taxicab distance Σ|ε_i − δ_i| between two elements of the same bounds."""
    x.require_same_bounds(y)
    return sum(abs(a - b) for a, b in zip(x.exponents, y.exponents))


def max_distance(bounds: GeneratorBounds) -> int:
    """Diameter Σ(e_i − 1); every t above it gives an edgeless t-graph."""
    return sum(e - 1 for e in bounds.bounds)


def distance_block(rows: np.ndarray, columns: np.ndarray) -> np.ndarray:
    """Pairwise d1 between two stacks of exponent vectors."""
    return np.abs(rows[:, None, :] - columns[None, :, :]).sum(axis=2)


def distance_matrix(
    bounds: GeneratorBounds, settings: Optional[Settings] = None
) -> np.ndarray:
    """Full (Π e_i)² matrix of d1 values in lexicographic vertex order."""
    coords = exponent_array(bounds, settings)
    return distance_block(coords, coords)
