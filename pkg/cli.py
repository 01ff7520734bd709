"""
🖥️ Command-line front end

    aecl color <graph> --kappa K [--mode exact|heuristic] [--seed S] [--budget B]
    aecl verify <graph> <coloring>
    aecl index <graph> [--budget B]
    aecl mad <graph>
    aecl minimal <graph> --kappa K
    aecl audit <graph> --kappa K [--assume-minimal | --certify]
    aecl discharge <graph> --kappa K
    aecl hunt --max-n N --rule delta+2 --class mad4 [--jobs J] [--corpus FILE]

A graph argument of "-" reads stdin. Logs go to stderr; stdout carries only
results so that --records output can be diffed.
"""

import argparse
import json
import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import List, Optional

from config.config import Config
from config.config_loader import ConfigLoader
from config.schema import Fallback, GraphClass, KappaRule, ProfileSchema
from core.coloring import verify_acyclic
from core.coloring_io import parse_coloring, write_coloring
from core.errors import (
    ColoringParseError,
    EnumerationCapError,
    GraphError,
    GraphParseError,
    NotApplicableError,
    PartialColoringError,
)
from core.graph import Graph
from core.graph_io import GraphFormat, detect_format, iter_graph6, parse_graph
from core.models import SolveStatus
from lab.discharging import discharge, rules_for
from lab.hunt import hunt_counterexamples
from lab.lemma_audit import LemmaStatus, lemma_audit
from lab.mad import mad_witness
from solver.exact_solver import acyclic_chromatic_index, decide_colorable, is_deletion_minimal
from solver.heuristic_colorer import color_with_restarts
from version import __version__

logger = logging.getLogger("aecl")


class ExitCode(IntEnum):
    OK = 0
    NEGATIVE = 1
    UNKNOWN = 2
    USAGE = 64
    DATA = 65


class UsageError(Exception):
    """Bad command-line usage detected after argparse"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


# ==================== INPUT ====================

def _load_graph(source: str, fmt: Optional[str]) -> Graph:
    if source == "-":
        return parse_graph(sys.stdin.buffer.read(), fmt or GraphFormat.EDGE_LIST)
    path = Path(source)
    if not path.exists():
        raise UsageError(f"graph file not found: {source}")
    return parse_graph(path.read_bytes(), fmt or detect_format(path))


def _load_profile(args) -> ProfileSchema:
    name = args.profile or Config.PROFILE
    if not name:
        return ProfileSchema(profile_name="command-line")
    try:
        return ConfigLoader.resolve(name)
    except (FileNotFoundError, ValueError) as e:
        raise UsageError(f"profile {name!r}: {e}")


def _solver_config(args, kappa: int):
    overrides = {}
    if getattr(args, "budget", None) is not None:
        overrides["node_budget"] = args.budget
    elif Config.NODE_BUDGET:
        overrides["node_budget"] = Config.NODE_BUDGET
    return _load_profile(args).solver_config(kappa, **overrides)


def _emit(args, human: str, record) -> None:
    if args.records:
        sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(human.rstrip("\n") + "\n")


# ==================== COMMANDS ====================

def cmd_color(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.mode == "heuristic":
        if args.records and args.seed is None:
            raise UsageError("--records with --mode heuristic needs an explicit --seed")
        overrides = {"seed": args.seed if args.seed is not None else Config.DEFAULT_SEED}
        if args.restarts is not None:
            overrides["restarts"] = args.restarts
        if args.fallback is not None:
            overrides["fallback"] = args.fallback
        if args.budget is not None:
            overrides["node_budget"] = args.budget
        cfg = _load_profile(args).heuristic_config(args.kappa, **overrides)
        result = color_with_restarts(g, cfg)
    else:
        result = decide_colorable(g, _solver_config(args, args.kappa))

    code = {
        SolveStatus.COLORABLE: ExitCode.OK,
        SolveStatus.NOT_COLORABLE: ExitCode.NEGATIVE,
    }.get(result.status, ExitCode.UNKNOWN)

    if args.records:
        _emit(args, "", {**result.to_dict(), "kappa": args.kappa})
    elif result.colorable:
        sys.stdout.write(write_coloring(result.coloring, g).decode("ascii"))
    else:
        print(f"{result.status.value} at kappa={args.kappa} ({result.method}, {result.nodes} nodes)")
    return code


def cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    path = Path(args.coloring)
    if not path.exists():
        raise UsageError(f"coloring file not found: {args.coloring}")
    c = parse_coloring(path.read_bytes(), g)
    report = verify_acyclic(c, g)
    _emit(
        args,
        "acyclic" if report else report.describe(),
        {
            "acyclic": report.acyclic,
            "improper_at": report.improper_at,
            "cycle": list(report.cycle) if report.cycle else None,
            "cycle_colors": list(report.cycle_colors) if report.cycle_colors else None,
        },
    )
    return ExitCode.OK if report else ExitCode.NEGATIVE


def cmd_index(args) -> int:
    g = _load_graph(args.graph, args.format)
    if g.m == 0:
        raise UsageError("the acyclic chromatic index needs a graph with at least one edge")
    result = acyclic_chromatic_index(g, _solver_config(args, 1))
    _emit(args, result.bracket(), result.to_dict())
    return ExitCode.OK if result.known else ExitCode.UNKNOWN


def cmd_mad(args) -> int:
    g = _load_graph(args.graph, args.format)
    value, members = mad_witness(g)
    text = f"{value.numerator}/{value.denominator}"
    _emit(args, text, {"mad": text, "subset": list(members)})
    return ExitCode.OK


def cmd_minimal(args) -> int:
    g = _load_graph(args.graph, args.format)
    cert = is_deletion_minimal(g, args.kappa, _solver_config(args, args.kappa))
    verdict = {True: "minimal", False: "not minimal", None: "unknown"}[cert.minimal]
    _emit(args, f"{verdict}: {cert.reason}", cert.to_dict())
    if cert.minimal is None:
        return ExitCode.UNKNOWN
    return ExitCode.OK if cert.minimal else ExitCode.NEGATIVE


def cmd_audit(args) -> int:
    if args.records and args.seed is None:
        raise UsageError("--records with audit needs an explicit --seed for the sampled checks")
    g = _load_graph(args.graph, args.format)
    assume = args.assume_minimal
    if args.certify:
        cert = is_deletion_minimal(g, args.kappa, _solver_config(args, args.kappa))
        assume = bool(cert.minimal)
        logger.info(f"🔍 Minimality check: {cert.reason}")
    report = lemma_audit(g, args.kappa, assume_minimal=assume, seed=args.seed, node_budget=args.budget)

    if args.records:
        for entry in report.to_records():
            _emit(args, "", entry)
    else:
        mode = "certified minimal" if assume else "informational"
        print(f"kappa={report.kappa} Delta={report.max_degree} ({mode})")
        for e in report.entries:
            line = f"  {e.lemma_id:<18} {e.status.value}"
            if e.status == LemmaStatus.VIOLATED:
                line += f"  witness={e.witness}"
            if e.note and e.status != LemmaStatus.HOLDS:
                line += f"  {e.note}"
            print(line)
        print(f"{len(report.violations())} violation(s)")
    return ExitCode.NEGATIVE if report.violations() else ExitCode.OK


def cmd_discharge(args) -> int:
    g = _load_graph(args.graph, args.format)
    try:
        rules = rules_for(g, args.kappa)
    except NotApplicableError as e:
        raise UsageError(str(e))
    ledger = discharge(g, args.kappa, rules)
    frame = ledger.to_frame()
    if args.records:
        for row in frame.to_dict(orient="records"):
            _emit(args, "", {k: (int(v) if k in ("vertex", "degree") else v) for k, v in row.items()})
    else:
        print(f"rules={ledger.rules} kappa={ledger.kappa}")
        print(frame.to_string(index=False))
        print(f"total initial {ledger.total_initial}, total final {ledger.total_final}, "
              f"negative vertices {ledger.negative_vertices()}")
    return ExitCode.OK


def cmd_hunt(args) -> int:
    overrides = {
        "n_min": args.min_n,
        "rule": args.rule,
        "graph_class": args.graph_class,
        "allow_large": args.allow_large,
    }
    # flags > profile > environment
    if not (args.profile or Config.PROFILE):
        overrides.update(node_budget=Config.NODE_BUDGET, jobs=Config.JOBS)
    if args.budget is not None:
        overrides["node_budget"] = args.budget
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    if args.include_disconnected:
        overrides["connected_only"] = False
    profile = _load_profile(args)
    try:
        cfg = profile.hunt_config(args.max_n, **overrides)
    except ValueError as e:
        raise UsageError(str(e))

    corpus = None
    if args.corpus:
        path = Path(args.corpus)
        if not path.exists():
            raise UsageError(f"corpus file not found: {args.corpus}")
        corpus = list(iter_graph6(path.read_bytes()))

    try:
        report = hunt_counterexamples(cfg, corpus=corpus, progress=not args.records)
    except EnumerationCapError as e:
        raise UsageError(str(e))

    if args.records:
        sys.stdout.write(report.to_json_lines())
    else:
        print(report.summary().to_string(index=False))
        for record in report.violations():
            print(f"  violator {record.graph6}: index {record.index} > {record.kappa}, minimal={record.minimal}")
        print(f"{len(report.violations())} violations, {len(report.unknowns())} unknown, {report.scanned} scanned")
    return report.exit_code()


# ==================== PARSER ====================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in GraphFormat], default=None,
                        help="Graph format (default: by extension, .g6 means graph6)")
    common.add_argument("--records", action="store_true", help="Line-delimited JSON output")
    common.add_argument("--profile", default=None, help="Profile template name or YAML path")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging on stderr")

    parser = _Parser(prog="aecl", description="Acyclic edge coloring lab")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("color", parents=[common], help="Find an acyclic kappa-edge-coloring")
    p.add_argument("graph")
    p.add_argument("--kappa", type=_positive, required=True)
    p.add_argument("--mode", choices=["exact", "heuristic"], default="exact")
    p.add_argument("--seed", type=_non_negative, default=None)
    p.add_argument("--budget", type=_non_negative, default=None, help="Node budget (0 = unlimited)")
    p.add_argument("--restarts", type=_positive, default=None)
    p.add_argument("--fallback", choices=[f.value for f in Fallback], default=None)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="Check a coloring file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("index", parents=[common], help="Exact acyclic chromatic index")
    p.add_argument("graph")
    p.add_argument("--budget", type=_non_negative, default=None)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("mad", parents=[common], help="Maximum average degree")
    p.add_argument("graph")
    p.set_defaults(func=cmd_mad)

    p = sub.add_parser("minimal", parents=[common], help="kappa-deletion-minimality")
    p.add_argument("graph")
    p.add_argument("--kappa", type=_positive, required=True)
    p.add_argument("--budget", type=_non_negative, default=None)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("audit", parents=[common], help="Structural lemma audit")
    p.add_argument("graph")
    p.add_argument("--kappa", type=_positive, required=True)
    p.add_argument("--budget", type=_non_negative, default=None,
                   help="Node budget for --certify and the Good-3-vertex (a) enumeration")
    p.add_argument("--seed", type=_non_negative, default=None, help="Fact 2 sampling seed (required with --records)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--assume-minimal", action="store_true")
    group.add_argument("--certify", action="store_true", help="Run the minimality check first")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("discharge", parents=[common], help="Vertex discharging ledger")
    p.add_argument("graph")
    p.add_argument("--kappa", type=_positive, required=True)
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("hunt", parents=[common], help="Search small graphs for counterexamples")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--min-n", type=_positive, default=1)
    p.add_argument("--rule", choices=[r.value for r in KappaRule], default=KappaRule.DELTA_PLUS_2.value)
    p.add_argument("--class", dest="graph_class", choices=[c.value for c in GraphClass],
                   default=GraphClass.ALL.value)
    p.add_argument("--jobs", type=_positive, default=None)
    p.add_argument("--budget", type=_non_negative, default=None)
    p.add_argument("--corpus", default=None, help="graph6 file, one graph per line")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--include-disconnected", action="store_true")
    p.set_defaults(func=cmd_hunt)
    return parser


def _setup_logging(verbose: int) -> None:
    level = {0: Config.LOG_LEVEL, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format='[%(asctime)s] %(message)s',
        datefmt='%H:%M:%S',
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.verbose)

    try:
        return int(args.func(args))
    except UsageError as e:
        print(f"aecl {args.command}: {e}", file=sys.stderr)
        return ExitCode.USAGE
    except (GraphParseError, ColoringParseError, PartialColoringError) as e:
        print(f"aecl {args.command}: {e}", file=sys.stderr)
        return ExitCode.DATA
    except GraphError as e:
        print(f"aecl {args.command}: {e}", file=sys.stderr)
        return ExitCode.USAGE


if __name__ == "__main__":
    sys.exit(main())
