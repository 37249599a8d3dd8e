"""
CLI Interface for MorseLab

Provides the morselab command with subcommands for:
- Heights, forest collapses and blow-ups of basepointed graphs
- Down-links, up-links and descending links
- Partition complexes and exact homology
- Graph enumeration and lemma verification
"""

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Any

from ..config import CONFIG_PATH_ENV, COMPAT_MODES, HEIGHT_ORDERS, OUTPUT_FORMATS, SBU_MODES
from ..config import ConfigManager, RunConfig
from ..exceptions import (
    CLIUsageError,
    ComplexFormatError,
    ConfigurationError,
    GraphFormatError,
    MorseLabError,
    SpecFormatError,
    UnknownLemmaError,
)
from ..graph import (
    GraphBlowUp,
    blow_up,
    catalog_graph,
    collapse_forest,
    compare_heights,
    height,
    instance_key,
    is_descending_blow_up,
    is_descending_forest,
    load_graph,
    save_graph,
)
from ..graph.basepointed_graph import BasepointedGraph
from ..harness import (
    UP_LINK_VARIANTS,
    UpLinkCaps,
    VerificationRunner,
    descending_link_profile,
    down_link,
    enumerate_graphs,
    format_table,
    has_failures,
    to_json_lines,
    up_link_complex,
    up_link_model,
)
from ..logging import LoggerManager
from ..partitions import PartitionComplexSpec, TwoBlockPartition, parse_spec, sigma
from ..topology import (
    SimplicialComplex,
    free_face_collapse,
    homology_report,
    load_complex,
    reduced_homology,
    save_complex,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

UP_LINK_CHOICES = ("model", *UP_LINK_VARIANTS)

# Errors in what the user typed or pointed at; other domain errors exit 1.
USAGE_ERRORS = (
    CLIUsageError,
    ConfigurationError,
    GraphFormatError,
    SpecFormatError,
    ComplexFormatError,
    UnknownLemmaError,
)


class CLI:
    """
    Command-line interface for MorseLab.

    Each command method writes its result to standard output in the configured
    format and returns the process exit code.
    """

    def __init__(self, config_file: str | None = None, overrides: dict[str, Any] | None = None):
        """
        Initialize the CLI.

        @brief Load configuration, set up logging and build the run configuration.
        @param config_file Path to configuration file
        @param overrides RunConfig fields given on the command line
        """
        self.config_file = config_file
        self.config_manager = ConfigManager(config_file)
        self.logger_manager = LoggerManager("morselab", self.config_manager.get_logging_config())
        self.run_config = RunConfig.from_config(self.config_manager).with_overrides(
            **(overrides or {})
        )
        self.logger = self.logger_manager.get_logger("cli")

    def _emit(self, payload: dict[str, Any]) -> None:
        """
        Write one result document.

        @brief JSON with sorted keys, or "key: value" lines for table output.
        """
        if self.run_config.output_format == "json":
            sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
            return
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            sys.stdout.write(f"{key}: {value}\n")

    def _graph(self, ref: str) -> BasepointedGraph:
        """Catalogue name or path to a graph JSON file."""
        if ref.endswith(".json") or Path(ref).is_file():
            return load_graph(ref, self.run_config.min_basepoint_degree)
        return catalog_graph(ref)

    def _complex_payload(
        self,
        operation: str,
        instance: str,
        x: SimplicialComplex,
        with_homology: bool,
        export: str | None,
    ) -> dict[str, Any]:
        """
        Describe a complex and compute its homology when asked.

        @brief Shared payload of the complex commands; homology runs are logged with timing.
        """
        payload: dict[str, Any] = {
            "vertices": x.vertex_count,
            "dimension": x.dimension,
            "f_vector": list(x.f_vector()),
        }
        profile = None
        if with_homology or export:
            started = time.perf_counter()
            profile = reduced_homology(x)
            self.logger_manager.log_computation(
                operation,
                instance=instance,
                size=len(x.simplices),
                duration=time.perf_counter() - started,
            )
        if with_homology:
            payload["homology"] = homology_report(profile)
        if export:
            save_complex(x, export, profile)
            payload["export"] = export
        return payload

    def height(self, graph: str) -> int:
        g = self._graph(graph)
        h = height(g)
        self._emit({"graph": instance_key(g), "height": str(h)})
        return EXIT_OK

    def collapse(self, graph: str, forest: list[int], export: str | None = None) -> int:
        """
        Blow down a forest and compare heights.

        @brief collapse subcommand.
        """
        g = self._graph(graph)
        quotient = collapse_forest(g, forest)
        ordering = compare_heights(height(quotient), height(g), self.run_config.height_order)
        if export:
            save_graph(quotient, export)
        self._emit(
            {
                "graph": instance_key(g),
                "forest": sorted(forest),
                "descending": is_descending_forest(g, forest),
                "quotient": quotient.to_dict(),
                "height": str(height(quotient)),
                "comparison": ordering.name,
            }
        )
        return EXIT_OK

    def blowup(self, graph: str, at: list[str], export: str | None = None) -> int:
        """
        Realize a blow-up given as "vertex:block|block" entries.

        @brief blowup subcommand.
        """
        g = self._graph(graph)
        per_vertex: dict[int, list[TwoBlockPartition]] = {}
        for entry in at:
            vertex_text, sep, partition_text = entry.partition(":")
            if not sep or not vertex_text.strip().isdigit():
                raise CLIUsageError("--at expects VERTEX:BLOCK|BLOCK", {"value": entry})
            vertex = int(vertex_text)
            if not 0 <= vertex < g.vertex_count:
                raise CLIUsageError("--at vertex out of range", {"vertex": vertex})
            partition = TwoBlockPartition.parse(partition_text, g.degree(vertex))
            per_vertex.setdefault(vertex, []).append(partition)
        b = GraphBlowUp.of(per_vertex)
        result = blow_up(g, b)
        ordering = compare_heights(height(result), height(g), self.run_config.height_order)
        if export:
            save_graph(result, export)
        self._emit(
            {
                "graph": instance_key(g),
                "blowup": str(b),
                "descending": is_descending_blow_up(g, b),
                "result": result.to_dict(),
                "height": str(height(result)),
                "comparison": ordering.name,
            }
        )
        return EXIT_OK

    def downlink(self, graph: str, with_homology: bool, export: str | None = None) -> int:
        g = self._graph(graph)
        payload = {"graph": instance_key(g)}
        payload.update(
            self._complex_payload("downlink", instance_key(g), down_link(g), with_homology, export)
        )
        self._emit(payload)
        return EXIT_OK

    def uplink(
        self, graph: str, variant: str, with_homology: bool, export: str | None = None
    ) -> int:
        """
        Up-link model, or one of the explicit up-link posets.

        @brief uplink subcommand.
        """
        g = self._graph(graph)
        config = self.run_config
        if variant == "model":
            x = up_link_model(g, config.compat)
        else:
            caps = UpLinkCaps.from_run_config(config)
            x = up_link_complex(g, variant, config.compat, caps, config.height_order)
        payload = {"graph": instance_key(g), "variant": variant}
        payload.update(
            self._complex_payload(f"uplink-{variant}", instance_key(g), x, with_homology, export)
        )
        self._emit(payload)
        return EXIT_OK

    def desclink(self, graph: str) -> int:
        g = self._graph(graph)
        profile, explicit = descending_link_profile(
            g, self.run_config.compat, self.run_config.max_join_simplices
        )
        self._emit(
            {
                "graph": instance_key(g),
                "homology": homology_report(profile),
                "method": "explicit join" if explicit else "join formula",
            }
        )
        return EXIT_OK

    def sigma(self, spec: PartitionComplexSpec, with_homology: bool, export: str | None) -> int:
        """
        Build a partition complex.

        @brief sigma subcommand.
        """
        x = sigma(spec, self.run_config.compat)
        payload = {"spec": spec.to_spec_string(), "name": str(spec)}
        payload.update(
            self._complex_payload("sigma", spec.to_spec_string(), x, with_homology, export)
        )
        self._emit(payload)
        return EXIT_OK

    def homology(self, path: str, with_collapse: bool) -> int:
        """
        Homology of a complex read from a simplicial JSON file.

        @brief homology subcommand.
        """
        x = load_complex(path)
        payload: dict[str, Any] = {"complex": path}
        payload.update(self._complex_payload("homology", path, x, True, None))
        if with_collapse:
            core = free_face_collapse(x)
            payload["collapse"] = {"remaining": len(core), "collapsible": len(core) == 1}
        self._emit(payload)
        return EXIT_OK

    def enumerate(self, rank: int, max_vertices: int | None) -> int:
        bound = max_vertices or self.run_config.max_vertices
        graphs = list(enumerate_graphs(rank, bound, self.run_config.min_basepoint_degree))
        self._emit(
            {
                "rank": rank,
                "max_vertices": bound,
                "count": len(graphs),
                "graphs": [instance_key(g) for g in graphs],
            }
        )
        return EXIT_OK

    def verify(self, lemma: str, timing: bool = False) -> int:
        """
        Run lemma checks and print one report per instance.

        @brief verify subcommand; exit 1 on any FAIL.
        """
        reports = VerificationRunner(self.run_config, self.logger_manager).run(lemma)
        if self.run_config.output_format == "json":
            sys.stdout.write(to_json_lines(reports, timing))
        else:
            sys.stdout.write(format_table(reports))
        return EXIT_FAIL if has_failures(reports) else EXIT_OK


def _forest(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid edge list '{text}'") from None


def create_parser() -> argparse.ArgumentParser:
    """
    Create command-line argument parser.

    @brief Create argument parser for CLI commands.
    @return Configured ArgumentParser instance
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        "-c",
        default=os.environ.get(CONFIG_PATH_ENV),
        help=f"Configuration file path (default: ${CONFIG_PATH_ENV})",
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format")
    common.add_argument("--compat", choices=COMPAT_MODES, help="Partition compatibility mode")
    common.add_argument("--sbu-mode", choices=SBU_MODES, help="Separating blow-up variant")
    common.add_argument("--height-order", choices=HEIGHT_ORDERS, help="Height comparison order")
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Set logging level",
    )
    common.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")

    graph_args = argparse.ArgumentParser(add_help=False)
    graph_args.add_argument("--graph", "-g", required=True, help="Catalogue name or graph JSON")

    export_args = argparse.ArgumentParser(add_help=False)
    export_args.add_argument("--export", help="Write the result to this JSON file")
    export_args.add_argument("--homology", action="store_true", help="Compute reduced homology")

    parser = argparse.ArgumentParser(prog="morselab", description="MorseLab CLI")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    subparsers.add_parser("height", parents=[common, graph_args], help="Height of a graph")

    collapse_parser = subparsers.add_parser(
        "collapse", parents=[common, graph_args], help="Blow down a forest"
    )
    collapse_parser.add_argument("--forest", "-f", type=_forest, required=True, help="e.g. 0,2")
    collapse_parser.add_argument("--export", help="Write the quotient graph to this JSON file")

    blowup_parser = subparsers.add_parser(
        "blowup", parents=[common, graph_args], help="Blow up vertices"
    )
    blowup_parser.add_argument(
        "--at",
        action="append",
        required=True,
        help="VERTEX:BLOCK|BLOCK, e.g. 1:1,2|3,4 (repeatable)",
    )
    blowup_parser.add_argument("--export", help="Write the blown-up graph to this JSON file")

    subparsers.add_parser(
        "downlink", parents=[common, graph_args, export_args], help="Down-link complex"
    )

    uplink_parser = subparsers.add_parser(
        "uplink", parents=[common, graph_args, export_args], help="Up-link model or poset"
    )
    uplink_parser.add_argument("--variant", choices=UP_LINK_CHOICES, default="model")

    subparsers.add_parser(
        "desclink", parents=[common, graph_args], help="Descending link homology"
    )

    sigma_parser = subparsers.add_parser(
        "sigma", parents=[common, export_args], help="Partition complex"
    )
    sigma_parser.add_argument("--n", type=int, help="Ground set size")
    sigma_parser.add_argument("--k", type=int, help="Split the labels 1..k")
    sigma_parser.add_argument("--m", type=int, help="Size bound for the last layer")
    sigma_parser.add_argument("--spec", help="sigma:n=N[,k=K][,m=M]")

    homology_parser = subparsers.add_parser(
        "homology", parents=[common], help="Homology of a complex file"
    )
    homology_parser.add_argument("--complex", required=True, help="Simplicial JSON file")
    homology_parser.add_argument("--collapse", action="store_true", help="Try greedy collapse")

    enumerate_parser = subparsers.add_parser(
        "enumerate", parents=[common], help="Enumerate graphs"
    )
    enumerate_parser.add_argument("--rank", type=int, required=True, help="Graph rank")
    enumerate_parser.add_argument("--max-vertices", type=int, help="Vertex bound")

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Verify lemmas")
    verify_parser.add_argument("--lemma", required=True, help="Lemma id or 'all'")
    verify_parser.add_argument("--rank", type=int, help="Check this rank only")
    verify_parser.add_argument("--max-rank", type=int, help="Largest rank")
    verify_parser.add_argument("--max-vertices", type=int, help="Vertex bound")
    verify_parser.add_argument("--sigma-max-n", type=int, help="Largest partition complex n")
    verify_parser.add_argument("--workers", type=int, help="Worker processes")
    verify_parser.add_argument("--timing", action="store_true", help="Include durations")

    return parser


def _overrides(args: argparse.Namespace) -> dict[str, Any]:
    overrides = {
        "output_format": args.format,
        "compat": args.compat,
        "sbu_mode": args.sbu_mode,
        "height_order": args.height_order,
    }
    if args.command == "verify":
        overrides.update(
            max_rank=args.rank or args.max_rank,
            min_rank=args.rank,
            max_vertices=args.max_vertices,
            sigma_max_n=args.sigma_max_n,
            workers=args.workers,
        )
    return overrides


def _sigma_spec(args: argparse.Namespace) -> PartitionComplexSpec:
    if args.spec:
        return parse_spec(args.spec)
    if args.n is None:
        raise CLIUsageError("sigma needs --n or --spec")
    return PartitionComplexSpec(args.n, args.k, args.m)


def main(argv: list[str] | None = None) -> int:
    """
    Main CLI entry point.

    @brief Parse arguments, run one command and return its exit code.
    @param argv Arguments without the program name (None to use sys.argv)
    @return 0 on success, 1 on a failed verification or domain error, 2 on usage errors
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        cli = CLI(args.config, _overrides(args))
        if args.log_level:
            cli.logger_manager.set_level(args.log_level)
        if args.verbose:
            cli.logger_manager.set_level("DEBUG")

        if args.command == "height":
            return cli.height(args.graph)
        elif args.command == "collapse":
            return cli.collapse(args.graph, args.forest, args.export)
        elif args.command == "blowup":
            return cli.blowup(args.graph, args.at, args.export)
        elif args.command == "downlink":
            return cli.downlink(args.graph, args.homology, args.export)
        elif args.command == "uplink":
            return cli.uplink(args.graph, args.variant, args.homology, args.export)
        elif args.command == "desclink":
            return cli.desclink(args.graph)
        elif args.command == "sigma":
            return cli.sigma(_sigma_spec(args), args.homology, args.export)
        elif args.command == "homology":
            return cli.homology(args.complex, args.collapse)
        elif args.command == "enumerate":
            return cli.enumerate(args.rank, args.max_vertices)
        elif args.command == "verify":
            return cli.verify(args.lemma, args.timing)
        return EXIT_USAGE

    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return EXIT_FAIL
    except MorseLabError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE if isinstance(e, USAGE_ERRORS) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
