import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from .errors import InvalidParameterError

Structure = Tuple[Tuple[str, int], ...]

_PREDICTED_FIELDS = (
    "k",
    "edges",
    "chi",
    "structure",
    "isolated",
    "isolated_free",
    "isomorphic",
    "bipartite",
)


class ClaimStatus(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class Prediction:
    """
    A closed-form claim evaluated at concrete parameters.

    Predictions are data: the harness compares them to brute force, nothing
    here asserts them.
    """

    claim_id: str
    parameters: Tuple[Tuple[str, int], ...]
    applicable: bool = True
    reason: str = ""
    k: Optional[int] = None
    edges: Optional[int] = None
    chi: Optional[int] = None
    structure: Optional[Structure] = None
    isolated: Optional[int] = None
    isolated_free: Optional[bool] = None
    isomorphic: Optional[bool] = None
    bipartite: Optional[bool] = None
    extra: Tuple[Tuple[str, Any], ...] = ()

    def __post_init__(self):
        if not self.applicable and self.predicted_fields():
            raise InvalidParameterError(
                f"Non-applicable prediction {self.claim_id} carries predicted values"
            )

    @classmethod
    def not_applicable(cls, claim_id: str, reason: str, **parameters: int) -> "Prediction":
        return cls(
            claim_id=claim_id,
            parameters=tuple(parameters.items()),
            applicable=False,
            reason=reason,
        )

    @property
    def params(self) -> Dict[str, int]:
        return dict(self.parameters)

    def predicted_fields(self) -> Dict[str, Any]:
        """Non-empty predicted values keyed by field name."""
        values = {}
        for name in _PREDICTED_FIELDS:
            value = getattr(self, name)
            if value is not None:
                values[name] = [list(d) for d in value] if name == "structure" else value
        values.update(dict(self.extra))
        return values

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "parameters": self.params,
            "applicable": self.applicable,
            "reason": self.reason,
            "predicted": self.predicted_fields(),
        }


@dataclass(frozen=True)
class ClaimInstance:
    """A prediction compared with a brute-force observation."""

    claim_id: str
    bounds: Tuple[int, ...]
    t: int
    predicted: Dict[str, Any]
    observed: Dict[str, Any]
    status: ClaimStatus
    reason: str = ""

    @classmethod
    def evaluate(
        cls,
        claim_id: str,
        bounds: Tuple[int, ...],
        t: int,
        prediction: Prediction,
        observed: Dict[str, Any],
    ) -> "ClaimInstance":
        predicted = prediction.predicted_fields()
        if not prediction.applicable:
            status = ClaimStatus.NOT_APPLICABLE
        elif all(observed.get(key) == value for key, value in predicted.items()):
            status = ClaimStatus.MATCH
        else:
            status = ClaimStatus.MISMATCH
        shown = {key: observed.get(key) for key in predicted} if predicted else dict(observed)
        return cls(
            claim_id=claim_id,
            bounds=tuple(bounds),
            t=t,
            predicted=predicted,
            observed=shown,
            status=status,
            reason=prediction.reason,
        )

    def sort_key(self) -> Tuple:
        return (len(self.bounds), self.bounds, self.t, self.claim_id, self.reason)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "bounds": list(self.bounds),
            "t": self.t,
            "predicted": self.predicted,
            "observed": self.observed,
            "status": self.status.value,
        }

    def to_csv_row(self) -> List[str]:
        m = str(self.bounds[0]) if len(self.bounds) >= 1 else ""
        n = str(self.bounds[1]) if len(self.bounds) >= 2 else ""
        return [
            self.claim_id,
            "x".join(str(b) for b in self.bounds),
            m,
            n,
            str(self.t),
            json.dumps(self.predicted, sort_keys=True, separators=(",", ":")),
            json.dumps(self.observed, sort_keys=True, separators=(",", ":")),
            self.status.value,
        ]


CSV_HEADER = ["claim_id", "bounds", "m", "n", "t", "predicted", "observed", "status"]


@dataclass
class SweepSummary:
    """All instances of one claim sweep plus their tallies."""

    claim_id: str
    pinned: bool
    ranges: Dict[str, Any]
    instances: List[ClaimInstance] = field(default_factory=list)

    def count(self, status: ClaimStatus) -> int:
        return sum(1 for inst in self.instances if inst.status is status)

    @property
    def mismatches(self) -> List[ClaimInstance]:
        return [i for i in self.instances if i.status is ClaimStatus.MISMATCH]

    @property
    def pinned_failure(self) -> bool:
        return self.pinned and bool(self.mismatches)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "pinned": self.pinned,
            "ranges": self.ranges,
            "instances": len(self.instances),
            "match": self.count(ClaimStatus.MATCH),
            "mismatch": self.count(ClaimStatus.MISMATCH),
            "not_applicable": self.count(ClaimStatus.NOT_APPLICABLE),
            "mismatches": [m.to_dict() for m in self.mismatches],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


@dataclass(frozen=True)
class TableFixture:
    """
    A published table with its erratum mask.

    Cells map (row label, column label) to the printed value; None marks a
    dash in the original.
    """

    table_id: str
    row_labels: Tuple[str, ...]
    column_labels: Tuple[str, ...]
    cells: Tuple[Tuple[Optional[int], ...], ...]
    erratum: FrozenSet[Tuple[str, str]] = frozenset()

    def value(self, row: str, column: str) -> Optional[int]:
        return self.cells[self.row_labels.index(row)][self.column_labels.index(column)]

    def defined_cells(self) -> List[Tuple[str, str, int]]:
        result = []
        for r, row in enumerate(self.row_labels):
            for c, column in enumerate(self.column_labels):
                value = self.cells[r][c]
                if value is not None:
                    result.append((row, column, value))
        return result


@dataclass
class ConjectureReport:
    """Outcome of one conjecture scan; exploratory scans carry data rows only."""

    conjecture_id: int
    parameter_range: Dict[str, Any]
    instances_checked: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    status: str = "supported"
    artifact_path: Optional[str] = None
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "conjecture": self.conjecture_id,
            "status": self.status,
            "range": self.parameter_range,
            "instances": self.instances_checked,
            "counterexamples": self.counterexamples,
            "artifact": self.artifact_path,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)
