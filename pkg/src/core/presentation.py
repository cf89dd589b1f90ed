"""
Normal-form group families.

A family is known only through its exponent bounds; elements are exponent
vectors enumerated in lexicographic order, which is the vertex numbering used
everywhere downstream.
"""

import logging
from itertools import product
from string import ascii_lowercase
from typing import Iterable, List, Optional, Tuple

import numpy as np

from ..config.settings import Settings, get_settings
from ..models.errors import InvalidParameterError, SizeLimitError
from ..models.group_models import GeneratorBounds, GroupElement, GroupFamily, NamedGroup

logger = logging.getLogger(__name__)

_FIXED_BOUNDS = {
    GroupFamily.QUATERNION8: (2, 4),
    GroupFamily.SYMMETRIC5: (2, 3, 4, 5),
}


def check_size(bounds: GeneratorBounds, settings: Optional[Settings] = None) -> int:
    """Return Π e_i, or raise SizeLimitError above the configured cap."""
    settings = settings or get_settings()
    order = bounds.order
    if order > settings.max_elements:
        raise SizeLimitError(
            f"Bounds {bounds.bounds} have {order} elements, "
            f"cap is {settings.max_elements}"
        )
    return order


def make_bounds(values: Iterable[int], settings: Optional[Settings] = None) -> GeneratorBounds:
    """Build GeneratorBounds and enforce the element cap."""
    bounds = GeneratorBounds(tuple(values))
    check_size(bounds, settings)
    return bounds


def bounds_of(group: NamedGroup) -> GeneratorBounds:
    """
    Exponent bounds of a named family.

    Args:
        group (NamedGroup): Cyclic(m), product of cyclics, Dihedral(n), Q8 or S5.

    Returns:
        GeneratorBounds: (m), the factor list, (2, n), (2, 4) or (2, 3, 4, 5).
    """
    if group.family is GroupFamily.CYCLIC:
        return GeneratorBounds(group.parameters)
    if group.family is GroupFamily.PRODUCT:
        return GeneratorBounds(group.parameters)
    if group.family is GroupFamily.DIHEDRAL:
        return GeneratorBounds((2, group.parameters[0]))
    return GeneratorBounds(_FIXED_BOUNDS[group.family])


def enumerate_elements(
    bounds: GeneratorBounds, settings: Optional[Settings] = None
) -> List[GroupElement]:
    """All Π e_i elements in lexicographic order of exponent vectors."""
    check_size(bounds, settings)
    return [
        GroupElement(bounds, exps)
        for exps in product(*(range(e) for e in bounds.bounds))
    ]


def exponent_array(bounds: GeneratorBounds, settings: Optional[Settings] = None) -> np.ndarray:
    """(Π e_i, k) integer array, row i holding the exponents of element i."""
    order = check_size(bounds, settings)
    grid = np.indices(bounds.bounds, dtype=np.int64)
    return grid.reshape(bounds.rank, order).T.copy()


def element_at(bounds: GeneratorBounds, index: int) -> GroupElement:
    """Inverse of index_of: mixed-radix decoding, last generator fastest."""
    if not 0 <= index < bounds.order:
        raise InvalidParameterError(
            f"Index {index} out of range for {bounds.order} elements"
        )
    exponents = []
    for radix in reversed(bounds.bounds):
        index, digit = divmod(index, radix)
        exponents.append(digit)
    return GroupElement(bounds, tuple(reversed(exponents)))


def index_of(element: GroupElement) -> int:
    index = 0
    for eps, radix in zip(element.exponents, element.bounds.bounds):
        index = index * radix + eps
    return index


def generator_names(rank: int) -> Tuple[str, ...]:
    if rank <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:rank])
    return tuple(f"g{i + 1}" for i in range(rank))


def element_word(element: GroupElement, compact: bool = False) -> str:
    """
    Normal-form word of an element.

    compact=False gives DOT labels such as "a^1 b^3"; compact=True gives the
    printed form "ab^3". The identity is "1" in both.
    """
    names = generator_names(element.bounds.rank)
    parts = []
    for name, eps in zip(names, element.exponents):
        if eps == 0:
            continue
        if compact:
            parts.append(name if eps == 1 else f"{name}^{eps}")
        else:
            parts.append(f"{name}^{eps}")
    if not parts:
        return "1"
    return "".join(parts) if compact else " ".join(parts)


def _parse_ints(text: str, spec: str) -> Tuple[int, ...]:
    if not text.strip():
        raise InvalidParameterError(f"Empty parameter list in group spec {spec!r}")
    fields = text.split(",")
    if any(not v.strip() for v in fields):
        raise InvalidParameterError(f"Empty entry in group spec {spec!r}")
    try:
        return tuple(int(v) for v in fields)
    except ValueError:
        raise InvalidParameterError(f"Bad integer list in group spec {spec!r}")


def named_group_from_tag(tag: str) -> NamedGroup:
    """Parse the tagged-string form, e.g. "dihedral:7" or "q8"."""
    name, _, params = tag.strip().lower().partition(":")
    try:
        family = GroupFamily(name)
    except ValueError:
        raise InvalidParameterError(f"Unknown group family {name!r} in {tag!r}")
    values = _parse_ints(params, tag) if params else ()
    return NamedGroup(family, values)


def parse_group_spec(
    spec: str, settings: Optional[Settings] = None
) -> Tuple[Optional[NamedGroup], GeneratorBounds]:
    """
    Parse the CLI group grammar.

    "bounds:<csv>" gives explicit bounds with no named group; any other spec is
    a NamedGroup tag.
    """
    text = spec.strip().lower()
    if text.startswith("bounds:"):
        values = _parse_ints(text[len("bounds:"):], spec)
        return None, make_bounds(values, settings)
    group = named_group_from_tag(text)
    bounds = bounds_of(group)
    check_size(bounds, settings)
    return group, bounds
