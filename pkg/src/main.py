"""
tgraph-lab builds t-graphs of finite groups in normal form and checks
closed-form claims about them against brute force.

The main module provides the facade class and the command-line interface.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple

from .config.settings import Settings, get_settings
from .core import formulas
from .core.graph_analyzer import GraphAnalyzer
from .core.graph_builder import build_tgraph, to_dot, to_json
from .core.harness import CLAIMS, VerificationHarness, default_workers
from .core.presentation import parse_group_spec
from .models.claim_models import (
    ClaimInstance,
    ClaimStatus,
    ConjectureReport,
    Prediction,
    SweepSummary,
    TableFixture,
)
from .models.errors import (
    InvalidParameterError,
    OracleDivergenceError,
    SizeLimitError,
    TGraphError,
)
from .models.graph_models import AnalysisReport, TGraph
from .models.group_models import GeneratorBounds, NamedGroup
from .utils.file_handler import FileHandler

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SIZE_LIMIT = 3

GROUP_GRAMMAR = {
    "bounds:<e1,...,ek>": "explicit exponent bounds, e.g. bounds:2,4",
    "cyclic:<m>": "Z_m, bounds (m)",
    "product:<m1,...,mk>": "Z_m1 x ... x Z_mk, bounds (m1, ..., mk)",
    "dihedral:<n>": "D_n = <a, b | a^2, b^n, (ab)^2>, bounds (2, n)",
    "q8": "quaternion group, bounds (2, 4)",
    "s5": "symmetric group of degree 5, bounds (2, 3, 4, 5)",
}


class TGraphLab:
    """
    The main class of the application.

    Coordinates group parsing, graph construction, analysis, predictions and
    the verification harness.

    Attributes:
        settings (Settings): Caps and sweep defaults.
        analyzer (GraphAnalyzer): Ground-truth analysis.
        harness (VerificationHarness): Sweeps, tables and conjecture scans.
        file_handler (FileHandler): File handler.
    """

    def __init__(self, settings: Optional[Settings] = None, workers: int = 1):
        self.settings = settings or get_settings()
        self.analyzer = GraphAnalyzer(self.settings)
        self.harness = VerificationHarness(self.settings, workers=workers)
        self.file_handler = FileHandler()

    def build(self, spec: str, t: int) -> Tuple[Optional[NamedGroup], TGraph]:
        group, bounds = parse_group_spec(spec, self.settings)
        return group, build_tgraph(bounds, t, self.settings)

    def render(self, spec: str, t: int, output_format: str = "dot") -> str:
        """
        Build a t-graph and render it.

        Args:
            spec (str): Group spec such as "dihedral:4" or "bounds:2,4".
            t (int): Distance.
            output_format (str): "dot" or "json".

        Returns:
            str: DOT or JSON text.
        """
        _, graph = self.build(spec, t)
        if output_format == "dot":
            return to_dot(graph)
        if output_format == "json":
            return to_json(graph, indent=2) + "\n"
        raise InvalidParameterError(f"Unknown output format {output_format!r}")

    def analyze(self, spec: str, t: int) -> AnalysisReport:
        _, graph = self.build(spec, t)
        return self.analyzer.analyze(graph)

    def predict(self, spec: str, t: int) -> Dict[str, Any]:
        """Every closed-form prediction that speaks about these bounds and t."""
        group, bounds = parse_group_spec(spec, self.settings)
        predictions = predictions_for(bounds, t)
        return {
            "group": group.to_tag() if group else None,
            "bounds": bounds.to_list(),
            "t": t,
            "predictions": [p.to_dict() for p in predictions],
        }

    def verify(self, claim: str, ranges: Dict[str, Any]) -> List[SweepSummary]:
        if claim == "all":
            return self.harness.verify_all(ranges)
        return [self.harness.verify_claim_sweep(claim, ranges)]

    def tables(
        self, m: Optional[int], n_max: int
    ) -> List[Tuple[TableFixture, List[ClaimInstance]]]:
        """Reproduce the distance table (m=1) or a component table (m=2, 3); all when m is None."""
        loader = self.harness.fixture_loader
        results = []
        if m in (None, 1):
            results.append((loader.load_distance_table(), self.harness.reproduce_distance_table()))
        for table_m in (2, 3):
            if m in (None, table_m):
                results.append(
                    (
                        loader.load_component_table(table_m),
                        self.harness.reproduce_component_table(table_m, n_max),
                    )
                )
        return results

    def conjecture(
        self,
        conjecture_id: int,
        ranges: Dict[str, Any],
        out_dir: Optional[str] = None,
        plot: bool = False,
    ) -> ConjectureReport:
        return self.harness.conjecture_scan(conjecture_id, ranges, out_dir=out_dir, plot=plot)


def predictions_for(bounds: GeneratorBounds, t: int) -> List[Prediction]:
    """Predictions whose parameters fit the given bounds."""
    predictions: List[Prediction] = []
    values = bounds.bounds
    if bounds.rank == 1:
        m = values[0]
        predictions.append(formulas.predict_components_cyclic(m, t))
        predictions.append(formulas.predict_cyclic_subgroup(m, t))
    elif bounds.rank == 2:
        m, n = values
        predictions.append(formulas.predict_components_2gen(m, n, t))
        predictions.append(formulas.predict_bipartite(m, n, t))
        predictions.append(formulas.predict_isolated_free(m, n, t))
        if m == 2:
            predictions.append(formulas.predict_components_dihedral(n, t))
            predictions.append(formulas.predict_edges_dihedral(n, t))
            predictions.extend(formulas.predict_structure_corollaries(n, t))
    else:
        predictions.append(formulas.predict_components_ngen(bounds, t))
    if t == 1:
        predictions.append(formulas.predict_grid(bounds))
    return predictions


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        FileHandler.write_file(out, text)
        logger.info("Written to %s", out)
    else:
        sys.stdout.write(text)


def _ranges(args: argparse.Namespace) -> Dict[str, Any]:
    ranges: Dict[str, Any] = {}
    if getattr(args, "n_max", None) is not None:
        ranges["n_max"] = args.n_max
    if getattr(args, "m", None) is not None:
        ranges["m"] = args.m
    if getattr(args, "max", None) is not None:
        ranges["max"] = args.max
    return ranges


def create_parser() -> argparse.ArgumentParser:
    """Create command line argument parser."""
    grammar = "\n".join(f"  {spec:<22} {desc}" for spec, desc in GROUP_GRAMMAR.items())
    parser = argparse.ArgumentParser(
        prog="tgraph",
        description="tgraph-lab: t-graphs of finite groups and their closed-form claims",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Group specs:
{grammar}

Examples:
  %(prog)s build dihedral:4 --t 2 --format dot
  %(prog)s analyze dihedral:5 --t 3
  %(prog)s verify t5 --n-max 50
  %(prog)s tables --m 2
  %(prog)s conjecture 2 --out reports --plot

Exit codes: 0 ok, 1 pinned mismatch or oracle divergence, 2 usage error, 3 size cap.
        """,
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only")

    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_command(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("spec", help="Group spec, see 'groups'")
        cmd.add_argument("--t", type=int, required=True, help="Distance t >= 1")
        cmd.add_argument("--out", type=str, help="Write output to this path")
        return cmd

    build = add_graph_command("build", "Build a t-graph and print DOT or JSON")
    build.add_argument("--format", choices=["dot", "json"], default="dot")
    add_graph_command("analyze", "Full analysis report as JSON")
    add_graph_command("predict", "Closed-form predictions as JSON")

    verify = sub.add_parser("verify", help="Sweep a claim against brute force")
    verify.add_argument("claim", choices=list(CLAIMS) + ["all"])
    verify.add_argument("--n-max", dest="n_max", type=int)
    verify.add_argument("--m", type=int, nargs="+", help="m values (t1-oracle)")
    verify.add_argument("--max", type=int, help="Upper bound for m, n or cyclic order")
    verify.add_argument("--workers", type=int, default=default_workers())
    verify.add_argument("--out", type=str, help="JSON summary, or CSV instances for *.csv")

    tables = sub.add_parser("tables", help="Reproduce the published tables")
    tables.add_argument("--m", type=int, choices=[1, 2, 3], help="1 = distances; all if omitted")
    tables.add_argument("--n-max", dest="n_max", type=int, default=20)
    tables.add_argument("--workers", type=int, default=default_workers())
    tables.add_argument("--out", type=str, help="JSON report, or CSV cells for *.csv")

    conjecture = sub.add_parser("conjecture", help="Scan a conjecture")
    conjecture.add_argument("id", type=int, choices=[1, 2, 3, 4])
    conjecture.add_argument("--n-max", dest="n_max", type=int)
    conjecture.add_argument("--m", type=int, nargs="+")
    conjecture.add_argument("--max", type=int)
    conjecture.add_argument("--workers", type=int, default=default_workers())
    conjecture.add_argument("--out", type=str, help="Directory for the report and data files")
    conjecture.add_argument("--plot", action="store_true", help="Chart for conjecture 2")

    sub.add_parser("groups", help="List the group spec grammar")
    return parser


def _run(args: argparse.Namespace) -> int:
    if args.command == "groups":
        for spec, desc in GROUP_GRAMMAR.items():
            print(f"  • {spec}: {desc}")
        return EXIT_OK

    lab = TGraphLab(workers=getattr(args, "workers", 1))

    if args.command == "build":
        _emit(lab.render(args.spec, args.t, args.format), args.out)
        return EXIT_OK

    if args.command == "analyze":
        _emit(lab.analyze(args.spec, args.t).to_json() + "\n", args.out)
        return EXIT_OK

    if args.command == "predict":
        _emit(json.dumps(lab.predict(args.spec, args.t), indent=2) + "\n", args.out)
        return EXIT_OK

    if args.command == "verify":
        summaries = lab.verify(args.claim, _ranges(args))
        if args.out and args.out.lower().endswith(".csv"):
            instances = [i for s in summaries for i in s.instances]
            _emit(lab.harness.instances_csv(instances), args.out)
        else:
            payload = [s.to_dict() for s in summaries]
            body = payload[0] if len(payload) == 1 else payload
            _emit(json.dumps(body, indent=2, sort_keys=True) + "\n", args.out)
        failed = [s.claim_id for s in summaries if s.pinned_failure]
        if failed:
            logger.error("Pinned claims with mismatches: %s", ", ".join(failed))
            return EXIT_MISMATCH
        return EXIT_OK

    if args.command == "tables":
        results = lab.tables(args.m, args.n_max)
        unexpected: List[ClaimInstance] = []
        reports = []
        for fixture, instances in results:
            bad = lab.harness.unexpected_table_cells(instances, fixture)
            unexpected.extend(bad)
            reports.append(
                {
                    "table": fixture.table_id,
                    "cells": len(instances),
                    "mismatch": [i.to_dict() for i in instances if i.status is ClaimStatus.MISMATCH],
                    "erratum": sorted(list(cell) for cell in fixture.erratum),
                    "unexpected": [i.to_dict() for i in bad],
                }
            )
        if args.out and args.out.lower().endswith(".csv"):
            _emit(lab.harness.instances_csv([i for _, inst in results for i in inst]), args.out)
        else:
            _emit(json.dumps(reports, indent=2, sort_keys=True) + "\n", args.out)
        return EXIT_MISMATCH if unexpected else EXIT_OK

    if args.command == "conjecture":
        report = lab.conjecture(args.id, _ranges(args), out_dir=args.out, plot=args.plot)
        text = report.to_json() + "\n"
        if args.out:
            _emit(text, f"{args.out.rstrip('/')}/conjecture{args.id}.json")
        else:
            _emit(text, None)
        return EXIT_OK

    raise InvalidParameterError(f"Unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for CLI."""
    parser = create_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        return _run(args)
    except InvalidParameterError as usage_err:
        print(f"Error: {usage_err}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as cap_err:
        print(f"Size limit: {cap_err}", file=sys.stderr)
        return EXIT_SIZE_LIMIT
    except OracleDivergenceError as oracle_err:
        print(f"Oracle divergence: {oracle_err}", file=sys.stderr)
        return EXIT_MISMATCH
    except TGraphError as main_err:
        print(f"Error: {main_err}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
