from dataclasses import dataclass
from enum import Enum
from math import prod
from typing import Iterable, Tuple

from .errors import IncompatibleElementsError, InvalidParameterError


@dataclass(frozen=True)
class GeneratorBounds:
    """
    Exponent ranges (e_1, ..., e_k) of a normal-form family.

    The t-graph depends on nothing else: two groups whose elements are written
    with the same bounds share every t-graph.
    """

    bounds: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.bounds)
        object.__setattr__(self, "bounds", values)
        if not values:
            raise InvalidParameterError("At least one generator bound is required")
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParameterError(f"Bound {value!r} is not an integer")
            if value < 2:
                raise InvalidParameterError(
                    f"Every bound must be >= 2, got {list(values)}"
                )

    @classmethod
    def of(cls, *values: int) -> "GeneratorBounds":
        return cls(tuple(values))

    @property
    def rank(self) -> int:
        """Number of generators k."""
        return len(self.bounds)

    @property
    def order(self) -> int:
        """Element count Π e_i."""
        return prod(self.bounds)

    def label(self) -> str:
        return "x".join(str(b) for b in self.bounds)

    def to_list(self) -> list:
        return list(self.bounds)


@dataclass(frozen=True)
class GroupElement:
    """An exponent vector ε with 0 <= ε_i < e_i."""

    bounds: GeneratorBounds
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(self.exponents)
        object.__setattr__(self, "exponents", exponents)
        if len(exponents) != self.bounds.rank:
            raise InvalidParameterError(
                f"Element {exponents} has {len(exponents)} exponents, "
                f"bounds {self.bounds.bounds} need {self.bounds.rank}"
            )
        for eps, limit in zip(exponents, self.bounds.bounds):
            if not 0 <= eps < limit:
                raise InvalidParameterError(
                    f"Exponent {eps} out of range [0, {limit}) in {exponents}"
                )

    def require_same_bounds(self, other: "GroupElement") -> None:
        if self.bounds != other.bounds:
            raise IncompatibleElementsError(
                f"Elements come from different bounds: "
                f"{self.bounds.bounds} vs {other.bounds.bounds}"
            )


class GroupFamily(str, Enum):
    CYCLIC = "cyclic"
    PRODUCT = "product"
    DIHEDRAL = "dihedral"
    QUATERNION8 = "q8"
    SYMMETRIC5 = "s5"


@dataclass(frozen=True)
class NamedGroup:
    """
    One of the named families with a fixed normal form.

    Tagged-string form: "cyclic:12", "product:2,4", "dihedral:7", "q8", "s5".
    """

    family: GroupFamily
    parameters: Tuple[int, ...] = ()

    def __post_init__(self):
        params = tuple(self.parameters)
        object.__setattr__(self, "parameters", params)
        expected = {
            GroupFamily.CYCLIC: 1,
            GroupFamily.DIHEDRAL: 1,
            GroupFamily.QUATERNION8: 0,
            GroupFamily.SYMMETRIC5: 0,
        }.get(self.family)
        if expected is not None and len(params) != expected:
            raise InvalidParameterError(
                f"{self.family.value} takes {expected} parameter(s), got {len(params)}"
            )
        if self.family is GroupFamily.PRODUCT and not params:
            raise InvalidParameterError("product needs at least one cyclic factor")
        for value in params:
            if value < 2:
                raise InvalidParameterError(
                    f"{self.family.value} parameter must be >= 2, got {value}"
                )

    @classmethod
    def cyclic(cls, m: int) -> "NamedGroup":
        return cls(GroupFamily.CYCLIC, (m,))

    @classmethod
    def direct_product(cls, orders: Iterable[int]) -> "NamedGroup":
        return cls(GroupFamily.PRODUCT, tuple(orders))

    @classmethod
    def dihedral(cls, n: int) -> "NamedGroup":
        return cls(GroupFamily.DIHEDRAL, (n,))

    @classmethod
    def quaternion8(cls) -> "NamedGroup":
        return cls(GroupFamily.QUATERNION8)

    @classmethod
    def symmetric5(cls) -> "NamedGroup":
        return cls(GroupFamily.SYMMETRIC5)

    def to_tag(self) -> str:
        if not self.parameters:
            return self.family.value
        return f"{self.family.value}:{','.join(str(p) for p in self.parameters)}"
