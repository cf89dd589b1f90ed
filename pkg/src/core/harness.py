"""
Claim sweeps, table reproduction and conjecture scans.

Every graph observed here goes through the union-find / Laplacian nullity
cross-check; a divergence raises OracleDivergenceError and stops the run.
Everything else is reported as MATCH / MISMATCH / NOT_APPLICABLE.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..config.settings import Settings, get_settings
from ..models.claim_models import (
    CSV_HEADER,
    ClaimInstance,
    ClaimStatus,
    ConjectureReport,
    Prediction,
    SweepSummary,
    TableFixture,
)
from ..models.errors import InvalidParameterError, TGraphError
from ..models.graph_models import ComponentKind
from ..models.group_models import GeneratorBounds, NamedGroup
from ..utils.file_handler import FileHandler
from ..utils.fixture_loader import FixtureLoader
from . import formulas
from .component_chart import ComponentChart
from .graph_analyzer import GraphAnalyzer
from .graph_builder import build_tgraph
from .metric import d1
from .presentation import bounds_of, element_word, enumerate_elements, make_bounds

logger = logging.getLogger(__name__)

Bounds = Tuple[int, ...]
ObservationKey = Tuple[Bounds, int]

_COMPONENT_FIELDS = frozenset({"isolated", "isolated_free", "structure", "isomorphic"})
OBSERVABLE_FIELDS = _COMPONENT_FIELDS | {"bipartite", "chi", "subgroup_size"}


def observe_graph(
    bounds: Bounds, t: int, fields: FrozenSet[str], settings: Settings
) -> Dict[str, Any]:
    """
    Brute-force facts about one t-graph.

    k, nullity and edges are always present; the other fields are computed
    only when requested.
    """
    graph = build_tgraph(make_bounds(bounds, settings), t, settings)
    analyzer = GraphAnalyzer(settings)
    k, nullity, _ = analyzer.certified_component_count(graph)
    observed: Dict[str, Any] = {
        "k": k,
        "nullity": nullity,
        "edges": len(graph.edges),
        "nullity_matches_k": nullity == k,
    }

    if fields & _COMPONENT_FIELDS:
        components = analyzer.classify_components(graph)
        nontrivial = [c for c in components if c.kind is not ComponentKind.ISOLATED]
        observed["isolated"] = len(components) - len(nontrivial)
        observed["isolated_free"] = len(nontrivial) == len(components)
        observed["structure"] = sorted(list(c.descriptor()) for c in nontrivial)
        if "isomorphic" in fields:
            observed["isomorphic"] = len(nontrivial) == 2 and analyzer.components_isomorphic(
                graph, nontrivial[0].vertices, nontrivial[1].vertices
            )
    if "bipartite" in fields:
        observed["bipartite"] = analyzer.is_bipartite(graph).bipartite
    if "chi" in fields:
        observed["chi"] = analyzer.chromatic_number(graph)
    if "subgroup_size" in fields and len(bounds) == 1:
        multiples = set(range(0, bounds[0], t))
        block = next(b for b in analyzer.connected_components(graph) if 0 in b)
        observed["subgroup_size"] = len(block) if set(block) == multiples else 0
    return observed


def _observe_job(job: Tuple[Bounds, int, FrozenSet[str], Settings]) -> Dict[str, Any]:
    return observe_graph(*job)


@dataclass(frozen=True)
class SweepPoint:
    bounds: Bounds
    t: int
    prediction: Prediction
    groups: Tuple[NamedGroup, ...] = ()


@dataclass(frozen=True)
class ClaimDefinition:
    """A registered claim: how to enumerate its points and its default ranges."""

    claim_id: str
    pinned: bool
    description: str
    default_ranges: Callable[[Settings], Dict[str, Any]]
    points: Callable[[Dict[str, Any]], Iterable[SweepPoint]]


def _dihedral_points(predict: Callable[[int, int], Prediction]):
    def points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
        for n in range(2, ranges["n_max"] + 1):
            for t in range(1, n + 1):
                yield SweepPoint((2, n), t, predict(n, t))

    return points


def _oracle_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for m in ranges["m"]:
        for n in range(2, ranges["n_max"] + 1):
            bounds = GeneratorBounds.of(m, n)
            for t in range(1, m + n - 1):
                yield SweepPoint(bounds.bounds, t, formulas.predict_oracle(bounds, t))


def _two_generator_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for m in range(2, ranges["max"] + 1):
        for n in range(2, ranges["max"] + 1):
            for t in range(1, formulas.threshold_general(m, n) + 1):
                yield SweepPoint((m, n), t, formulas.predict_components_2gen(m, n, t))


def _bipartite_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for m in range(2, ranges["max"] + 1):
        for n in range(2, ranges["max"] + 1):
            for t in range(1, formulas.threshold_general(m, n) + 1, 2):
                yield SweepPoint((m, n), t, formulas.predict_bipartite(m, n, t))


def _cycle_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for n in range(5, ranges["n_max"] + 1, 2):
        t = (n + 1) // 2
        yield SweepPoint((2, n), t, formulas.predict_cycle_structure(n, t))


def _one_graph_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for n in range(2, ranges["n_max"] + 1):
        yield SweepPoint((2, n), 1, formulas.predict_one_graph_dihedral(n))


def _paths_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for n in range(2, ranges["n_max"] + 1, 2):
        t = n // 2 + 1
        yield SweepPoint((2, n), t, formulas.predict_isomorphic_paths(n, t))


def _ngraph_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for n in range(2, ranges["n_max"] + 1):
        yield SweepPoint((2, n), n, formulas.predict_ngraph(n, n))


def _cyclic_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for m in range(2, ranges["max"] + 1):
        for t in range(1, m + 2):
            yield SweepPoint((m,), t, formulas.predict_components_cyclic(m, t))


def _subgroup_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for m in range(2, ranges["max"] + 1):
        for t in range(1, m + 1):
            if m % t == 0:
                yield SweepPoint((m,), t, formulas.predict_cyclic_subgroup(m, t))


def _grid_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for rank in range(1, ranges["rank_max"] + 1):
        for values in product(range(2, ranges["max"] + 1), repeat=rank):
            yield SweepPoint(values, 1, formulas.predict_grid(GeneratorBounds(values)))


def _lemma_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for m in range(2, ranges["max"] + 1):
        for n in range(2, ranges["max"] + 1):
            for t in range(1, m + n - 1):
                yield SweepPoint((m, n), t, formulas.predict_isolated_free(m, n, t))


def _bounds_equality_points(ranges: Dict[str, Any]) -> Iterable[SweepPoint]:
    for n in range(2, ranges["n_max"] + 1):
        groups = [NamedGroup.dihedral(n), NamedGroup.direct_product((2, n))]
        if n == 4:
            groups.append(NamedGroup.quaternion8())
        for t in range(1, n + 2):
            yield SweepPoint(
                (2, n), t, formulas.predict_bounds_equality(groups, t), tuple(groups)
            )


CLAIMS: Dict[str, ClaimDefinition] = {
    definition.claim_id: definition
    for definition in (
        ClaimDefinition(
            "t1-oracle",
            True,
            "Laplacian nullity equals the component count",
            lambda s: {"m": list(s.sweep.oracle_m), "n_max": s.sweep.oracle_n_max},
            _oracle_points,
        ),
        ClaimDefinition(
            "t2",
            True,
            "parity rule up to ceil((m+n-2)/2)",
            lambda s: {"max": s.sweep.mn_max},
            _two_generator_points,
        ),
        ClaimDefinition(
            "t3",
            True,
            "edge counts on bounds (2, n)",
            lambda s: {"n_max": s.sweep.n_max},
            _dihedral_points(formulas.predict_edges_dihedral),
        ),
        ClaimDefinition(
            "t5",
            True,
            "component characterisation on bounds (2, n)",
            lambda s: {"n_max": s.sweep.n_max},
            _dihedral_points(formulas.predict_components_dihedral),
        ),
        ClaimDefinition(
            "t6",
            True,
            "odd t up to the threshold is bipartite",
            lambda s: {"max": s.sweep.lemma_max},
            _bipartite_points,
        ),
        ClaimDefinition(
            "t7",
            True,
            "cycles at t = (n+1)/2 for odd n",
            lambda s: {"n_max": s.sweep.n_max},
            _cycle_points,
        ),
        ClaimDefinition(
            "e2",
            True,
            "1-graph on bounds (2, n) is bipartite",
            lambda s: {"n_max": s.sweep.n_max},
            _one_graph_points,
        ),
        ClaimDefinition(
            "paths",
            True,
            "two isomorphic paths at t = n/2 + 1",
            lambda s: {"n_max": s.sweep.n_max},
            _paths_points,
        ),
        ClaimDefinition(
            "ngraph",
            True,
            "2(n-1) components at t = n",
            lambda s: {"n_max": s.sweep.n_max},
            _ngraph_points,
        ),
        ClaimDefinition(
            "2chromatic",
            True,
            "chromatic number 2 for odd t <= r and t > r",
            lambda s: {"n_max": s.sweep.n_max},
            _dihedral_points(formulas.predict_two_chromatic),
        ),
        ClaimDefinition(
            "cyclic",
            True,
            "k = min(t, m) on cyclic bounds",
            lambda s: {"max": s.sweep.cyclic_max},
            _cyclic_points,
        ),
        ClaimDefinition(
            "subgroup",
            True,
            "multiples of t form one component when t | m",
            lambda s: {"max": s.sweep.subgroup_max},
            _subgroup_points,
        ),
        ClaimDefinition(
            "grid",
            True,
            "1-graph is a connected bipartite grid",
            lambda s: {"max": 4, "rank_max": 3},
            _grid_points,
        ),
        ClaimDefinition(
            "bounds-equality",
            True,
            "groups sharing bounds share every t-graph",
            lambda s: {"n_max": 8},
            _bounds_equality_points,
        ),
        ClaimDefinition(
            "isolated-lemma",
            False,
            "no isolated vertices iff t <= ceil((m+n-2)/2)",
            lambda s: {"max": s.sweep.lemma_max},
            _lemma_points,
        ),
    )
}

TABLE1_ORDER = ("1", "a", "b", "b^2", "b^3", "ab", "ab^2", "ab^3")


class VerificationHarness:
    """
    Compares predictions with brute force.

    Attributes:
        settings (Settings): Caps and sweep defaults.
        workers (int): Process count for sweeps; 1 runs in-process.
    """

    def __init__(
        self,
        settings: Optional[Settings] = None,
        workers: int = 1,
        fixture_loader: Optional[FixtureLoader] = None,
    ):
        if workers < 1:
            raise InvalidParameterError(f"workers must be >= 1, got {workers}")
        self.settings = settings or get_settings()
        self.workers = workers
        self.fixture_loader = fixture_loader or FixtureLoader()
        self.file_handler = FileHandler()
        self.chart = ComponentChart()
        self._cache: Dict[ObservationKey, Dict[str, Any]] = {}

    def observe_many(
        self, requests: Sequence[Tuple[Bounds, int, Iterable[str]]]
    ) -> List[Dict[str, Any]]:
        """Observations for (bounds, t, fields) requests, served from the cache when possible."""
        wanted: Dict[ObservationKey, set] = {}
        for bounds, t, fields in requests:
            key = (tuple(bounds), t)
            wanted.setdefault(key, set()).update(OBSERVABLE_FIELDS.intersection(fields))

        jobs = []
        for key, fields in wanted.items():
            cached = self._cache.get(key)
            if cached is None or not fields.issubset(cached):
                jobs.append((key[0], key[1], frozenset(fields), self.settings))

        if self.workers > 1 and len(jobs) > 1:
            chunk = max(1, len(jobs) // (self.workers * 4))
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(_observe_job, jobs, chunksize=chunk))
        else:
            results = [_observe_job(job) for job in jobs]

        for job, observed in zip(jobs, results):
            self._cache.setdefault((job[0], job[1]), {}).update(observed)

        return [self._cache[(tuple(bounds), t)] for bounds, t, _ in requests]

    def observe(self, bounds: Bounds, t: int, fields: Iterable[str] = ()) -> Dict[str, Any]:
        return self.observe_many([(bounds, t, fields)])[0]

    @staticmethod
    def claim_ids() -> List[str]:
        return list(CLAIMS)

    def resolve_ranges(
        self, claim_id: str, overrides: Optional[Dict[str, Any]] = None
    ) -> Dict[str, Any]:
        """Claim defaults updated with the overrides the claim understands."""
        if claim_id not in CLAIMS:
            raise InvalidParameterError(
                f"Unknown claim {claim_id!r}; choose from {', '.join(CLAIMS)}"
            )
        ranges = CLAIMS[claim_id].default_ranges(self.settings)
        for key, value in (overrides or {}).items():
            if key in ranges and value is not None:
                ranges[key] = value
        return ranges

    def _identical(self, groups: Sequence[NamedGroup], t: int) -> bool:
        graphs = [build_tgraph(bounds_of(g), t, self.settings) for g in groups]
        return all(g.edges == graphs[0].edges for g in graphs[1:])

    def verify_claim_sweep(
        self, claim_id: str, ranges: Optional[Dict[str, Any]] = None
    ) -> SweepSummary:
        """
        Evaluate one registered claim over its parameter ranges.

        Args:
            claim_id (str): Registry id, e.g. "t5" or "isolated-lemma".
            ranges (Dict, optional): Overrides such as {"n_max": 20}.

        Returns:
            SweepSummary: Instances sorted by parameters.
        """
        ranges = self.resolve_ranges(claim_id, ranges)
        definition = CLAIMS[claim_id]
        points = list(definition.points(ranges))
        logger.info("Sweeping %s over %s: %d points", claim_id, ranges, len(points))

        observations = self.observe_many(
            [(p.bounds, p.t, p.prediction.predicted_fields().keys()) for p in points]
        )
        instances = []
        for point, observed in zip(points, observations):
            if point.groups:
                observed = {**observed, "identical": self._identical(point.groups, point.t)}
            instances.append(
                ClaimInstance.evaluate(
                    point.prediction.claim_id, point.bounds, point.t, point.prediction, observed
                )
            )
        instances.sort(key=ClaimInstance.sort_key)

        summary = SweepSummary(
            claim_id=claim_id, pinned=definition.pinned, ranges=ranges, instances=instances
        )
        logger.info(
            "Finished %s: %d match, %d mismatch, %d not applicable",
            claim_id,
            summary.count(ClaimStatus.MATCH),
            summary.count(ClaimStatus.MISMATCH),
            summary.count(ClaimStatus.NOT_APPLICABLE),
        )
        if summary.mismatches:
            logger.warning(
                "%s %s: %d mismatches, first at bounds=%s t=%d",
                "Pinned claim" if definition.pinned else "Claim",
                claim_id,
                len(summary.mismatches),
                summary.mismatches[0].bounds,
                summary.mismatches[0].t,
            )
        return summary

    def verify_all(self, overrides: Optional[Dict[str, Any]] = None) -> List[SweepSummary]:
        return [self.verify_claim_sweep(claim_id, overrides) for claim_id in CLAIMS]

    def reproduce_distance_table(self) -> List[ClaimInstance]:
        """
        Recompute the d1 table of bounds (2, 4) in the printed element order.

        Cells carry t = 0 and "row|column" as their reason.
        """
        fixture = self.fixture_loader.load_distance_table()
        bounds = make_bounds((2, 4), self.settings)
        by_word = {element_word(x, compact=True): x for x in enumerate_elements(bounds, self.settings)}
        missing = [label for label in fixture.row_labels + fixture.column_labels if label not in by_word]
        if missing:
            raise TGraphError(f"Distance table labels {missing} are not elements of bounds (2, 4)")

        instances = []
        for row, column, published in fixture.defined_cells():
            prediction = Prediction(
                "table1", (), reason=f"{row}|{column}", extra=(("distance", published),)
            )
            observed = {"distance": d1(by_word[row], by_word[column])}
            instance = ClaimInstance.evaluate("table1", bounds.bounds, 0, prediction, observed)
            if instance.status is ClaimStatus.MISMATCH:
                logger.warning(
                    "Distance table cell (%s, %s): published %d, computed %d%s",
                    row,
                    column,
                    published,
                    observed["distance"],
                    " (known erratum)" if (row, column) in fixture.erratum else "",
                )
            instances.append(instance)
        return instances

    def reproduce_component_table(self, m: int, n_max: int = 20) -> List[ClaimInstance]:
        """
        Recompute a published component table on bounds (m, n).

        Args:
            m (int): 2 or 3.
            n_max (int): Last row to compare.

        Returns:
            List[ClaimInstance]: One per published cell with 1 <= t <= m + n − 2.
        """
        if n_max < 2:
            raise InvalidParameterError(f"n_max must be >= 2, got {n_max}")
        fixture = self.fixture_loader.load_component_table(m)
        cells = []
        for n in range(2, n_max + 1):
            if str(n) not in fixture.row_labels:
                logger.warning("%s has no row n=%d; skipped", fixture.table_id, n)
                continue
            for t in range(1, m + n - 1):
                published = (
                    fixture.value(str(n), str(t)) if str(t) in fixture.column_labels else None
                )
                if published is None:
                    logger.warning("%s has no cell n=%d t=%d; skipped", fixture.table_id, n, t)
                    continue
                cells.append((n, t, published))

        logger.info("Reproducing %s: %d cells", fixture.table_id, len(cells))
        observations = self.observe_many([((m, n), t, ()) for n, t, _ in cells])
        table_claim = f"table{m}"
        instances = []
        for (n, t, published), observed in zip(cells, observations):
            prediction = Prediction(table_claim, (("m", m), ("n", n), ("t", t)), k=published)
            instances.append(ClaimInstance.evaluate(table_claim, (m, n), t, prediction, observed))
        for instance in instances:
            if instance.status is ClaimStatus.MISMATCH:
                logger.warning(
                    "%s cell n=%d t=%d: published %s, computed %s",
                    fixture.table_id,
                    instance.bounds[1],
                    instance.t,
                    instance.predicted["k"],
                    instance.observed["k"],
                )
        return instances

    @staticmethod
    def unexpected_table_cells(
        instances: Sequence[ClaimInstance], fixture: TableFixture
    ) -> List[ClaimInstance]:
        """Mismatches outside the erratum mask, and erratum cells that matched."""
        unexpected = []
        for instance in instances:
            if instance.claim_id == "table1":
                cell = tuple(instance.reason.split("|"))
            else:
                cell = (str(instance.bounds[1]), str(instance.t))
            in_mask = cell in fixture.erratum
            if (instance.status is ClaimStatus.MISMATCH) != in_mask:
                unexpected.append(instance)
        return unexpected

    def default_conjecture_ranges(self, conjecture_id: int) -> Dict[str, Any]:
        sweep = self.settings.sweep
        defaults = {
            1: {"m": list(sweep.conjecture1_m), "n_max": sweep.conjecture1_n_max},
            2: {"m": [2, 3], "n_max": sweep.oracle_n_max},
            3: {"n_max": sweep.conjecture3_n_max},
            4: {"max": sweep.conjecture4_max},
        }
        if conjecture_id not in defaults:
            raise InvalidParameterError(f"Conjecture id must be 1-4, got {conjecture_id}")
        return defaults[conjecture_id]

    def conjecture_scan(
        self,
        conjecture_id: int,
        ranges: Optional[Dict[str, Any]] = None,
        out_dir: Optional[str] = None,
        plot: bool = False,
    ) -> ConjectureReport:
        """
        Scan one conjecture.

        1: for even m and even t up to the threshold, the two components are
        isomorphic. 2: component counts past the threshold (exploratory, data
        only). 3: even t <= r on bounds (2, n) gives chromatic number 3.
        4: the parity rule on three generators with threshold ⌈Σ(e_i − 1)/2⌉
        (exploratory, counterexamples listed).
        """
        resolved = self.default_conjecture_ranges(conjecture_id)
        for key, value in (ranges or {}).items():
            if key in resolved and value is not None:
                resolved[key] = value
        logger.info("Scanning conjecture %d over %s", conjecture_id, resolved)

        scan = {
            1: self._scan_isomorphic_halves,
            2: self._scan_past_threshold,
            3: self._scan_three_chromatic,
            4: self._scan_three_generators,
        }[conjecture_id]
        report = scan(resolved)

        if out_dir and report.rows:
            path = Path(out_dir) / f"conjecture{conjecture_id}.csv"
            header = list(report.rows[0])
            self.file_handler.write_file(
                str(path),
                self.file_handler.csv_text(header, ([row[h] for h in header] for row in report.rows)),
            )
            report.artifact_path = str(path)
            if plot and conjecture_id == 2:
                fig = self.chart.generate_component_chart(
                    report.rows, save_path=str(Path(out_dir) / "conjecture2.png")
                )
                self.chart.close(fig)
        elif plot:
            logger.warning("--plot needs an output directory and data rows; no chart written")

        if report.counterexamples:
            logger.warning(
                "Conjecture %d: %d counterexamples", conjecture_id, len(report.counterexamples)
            )
        logger.info(
            "Conjecture %d: %d instances, status %s",
            conjecture_id,
            report.instances_checked,
            report.status,
        )
        return report

    def _scan_isomorphic_halves(self, ranges: Dict[str, Any]) -> ConjectureReport:
        requests = []
        for m in ranges["m"]:
            if m % 2:
                raise InvalidParameterError(f"Conjecture 1 concerns even m, got {m}")
            for n in range(2, ranges["n_max"] + 1):
                for t in range(2, formulas.threshold_general(m, n) + 1, 2):
                    requests.append(((m, n), t, ("isomorphic",)))
        observations = self.observe_many(requests)
        report = ConjectureReport(1, ranges, instances_checked=len(requests))
        for (bounds, t, _), observed in zip(requests, observations):
            record = {
                "m": bounds[0],
                "n": bounds[1],
                "t": t,
                "k": observed["k"],
                "isomorphic": observed["isomorphic"],
            }
            report.rows.append(record)
            if record["k"] != 2 or not record["isomorphic"]:
                report.counterexamples.append(dict(record))
        report.status = "refuted" if report.counterexamples else "supported"
        return report

    def _scan_past_threshold(self, ranges: Dict[str, Any]) -> ConjectureReport:
        requests = []
        for m in ranges["m"]:
            for n in range(2, ranges["n_max"] + 1):
                for t in range(formulas.threshold_general(m, n) + 1, m + n - 1):
                    requests.append(((m, n), t, ("isolated",)))
        observations = self.observe_many(requests)
        report = ConjectureReport(2, ranges, instances_checked=len(requests), status="exploratory")
        for (bounds, t, _), observed in zip(requests, observations):
            report.rows.append(
                {"m": bounds[0], "n": bounds[1], "t": t, "k": observed["k"], "isolated": observed["isolated"]}
            )
        return report

    def _scan_three_chromatic(self, ranges: Dict[str, Any]) -> ConjectureReport:
        requests = []
        for n in range(2, ranges["n_max"] + 1):
            for t in range(2, formulas.threshold_dihedral(n) + 1, 2):
                requests.append(((2, n), t, ("chi",)))
        observations = self.observe_many(requests)
        report = ConjectureReport(3, ranges, instances_checked=len(requests))
        for (bounds, t, _), observed in zip(requests, observations):
            report.rows.append({"n": bounds[1], "t": t, "chi": observed["chi"]})
            if observed["chi"] != 3:
                report.counterexamples.append({"n": bounds[1], "t": t, "chi": observed["chi"]})
        report.status = "refuted" if report.counterexamples else "supported"
        return report

    def _scan_three_generators(self, ranges: Dict[str, Any]) -> ConjectureReport:
        points = []
        for values in product(range(2, ranges["max"] + 1), repeat=3):
            bounds = GeneratorBounds(values)
            for t in range(1, formulas.threshold_ngen(bounds) + 1):
                points.append((values, t, formulas.predict_components_ngen(bounds, t)))
        observations = self.observe_many([(b, t, ()) for b, t, _ in points])
        report = ConjectureReport(4, ranges, instances_checked=len(points), status="exploratory")
        for (values, t, prediction), observed in zip(points, observations):
            report.rows.append(
                {"bounds": "x".join(map(str, values)), "t": t, "predicted": prediction.k, "k": observed["k"]}
            )
            if observed["k"] != prediction.k:
                report.counterexamples.append(
                    {"bounds": list(values), "t": t, "predicted": prediction.k, "k": observed["k"]}
                )
        return report

    def instances_csv(self, instances: Sequence[ClaimInstance]) -> str:
        return self.file_handler.csv_text(CSV_HEADER, (i.to_csv_row() for i in instances))

    def write_instances_csv(self, instances: Sequence[ClaimInstance], path: str) -> None:
        self.file_handler.write_file(path, self.instances_csv(instances))

    def write_summary_json(self, summary: SweepSummary, path: str) -> None:
        self.file_handler.write_file(path, summary.to_json() + "\n")


def default_workers() -> int:
    return os.cpu_count() or 1
