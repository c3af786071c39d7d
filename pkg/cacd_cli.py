#!/usr/bin/env python3
"""
CACD Toolkit - command-line interface
Recognition with certificates, realization, verification, sweeps and arc diagrams
"""

import argparse
import logging
import sys

from analysis.oracles import derive_forbidden_catalog
from analysis.oriented_cacd import classify, hamiltonian_path, recognize_oriented_proper_cacd
from analysis.proper_cacd import recognize_proper_cacd
from analysis.recognition import is_cacd, recognize_cacd, recognize_tournament_cacd
from analysis.sweeps import (
    CHECKS,
    RANDOM_CHECKS,
    cbar8_orientation_sweep,
    complement_cycle_orientation_sweep,
    random_representation_sweep,
    sweep_digraphs,
)
from config.settings import CATALOG_DIR, CATALOG_SCHEMA, RANDOM_SEED, RESULTS_DIR, TOURNAMENT_MAX_N
from core.digraph import Digraph
from core.errors import (
    CacdError,
    CharacterizationMismatch,
    InputFormatError,
    LemmaViolation,
    NotATournamentError,
    NotOrientedError,
    PreconditionError,
    SizeBoundError,
    UnknownCheckError,
)
from core.report_generator import ReportGenerator
from core.representation import CatchRepresentation, edge_diff, is_proper, realize
from utils.helpers import configure_logging, dump_json, load_json, print_report_summary
from visualizations.arc_diagram import ArcDiagramGenerator

logger = logging.getLogger(__name__)

EXIT_ACCEPTED = 0
EXIT_REJECTED = 1
EXIT_INPUT_ERROR = 2

RECOGNITION_CLASSES = ("cacd", "proper", "oriented-proper", "tournament")
ORIENTATION_SWEEPS = ("complement-cycle-orientations", "cbar8-orientations")

# Most specific first
ERROR_LABELS = (
    (InputFormatError, "invalid input"),
    (SizeBoundError, "size bound exceeded"),
    (NotATournamentError, "not a tournament"),
    (NotOrientedError, "not an oriented digraph"),
    (PreconditionError, "precondition failed"),
    (UnknownCheckError, "sweep"),
    (LemmaViolation, "structural check failed"),
    (CharacterizationMismatch, "deciders disagree"),
    (CacdError, "error"),
    (OSError, "file error"),
    (ValueError, "invalid input"),
)


def status(ok, message):
    print(f"{'✅' if ok else '❌'} {message}", file=sys.stderr)


def emit(data):
    print(dump_json(data))


def load_digraph(path):
    return Digraph.from_json_dict(load_json(path))


def load_representation(path):
    return CatchRepresentation.from_json_dict(load_json(path))


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------

def recognize(g, kind, trace=False):
    """
    Run the recognizer for one class.

    Parameters:
    g (Digraph): Input digraph
    kind (str): One of RECOGNITION_CLASSES
    trace (bool): Attach the proper-pipeline trace

    Returns:
    Verdict: The recognizer's verdict
    """
    if kind == "cacd":
        return recognize_cacd(g)
    if kind == "proper":
        return recognize_proper_cacd(g, trace=trace)
    if kind == "oriented-proper":
        return recognize_oriented_proper_cacd(g)
    return recognize_tournament_cacd(g)


def cmd_recognize(args):
    g = load_digraph(args.digraph)
    verdict = recognize(g, args.kind, trace=args.trace)
    emit(verdict.to_dict())
    status(verdict.accepted, f"{args.kind}: {'accepted' if verdict.accepted else 'rejected'} ({g.n} vertices)")
    return EXIT_ACCEPTED if verdict.accepted else EXIT_REJECTED


def cmd_realize(args):
    rep = load_representation(args.representation)
    g = realize(rep)
    emit(g.to_json_dict())
    status(True, f"realized {g.n} vertices, {g.edge_count()} edges")
    return EXIT_ACCEPTED


def cmd_verify(args):
    rep = load_representation(args.representation)
    g = load_digraph(args.digraph)
    missing, extra = edge_diff(rep, g)
    result = {
        "verified": not missing and not extra,
        "missing": [list(e) for e in missing],
        "extra": [list(e) for e in extra],
    }
    if args.proper:
        result["proper"] = is_proper(rep)
        result["verified"] = result["verified"] and result["proper"]
    emit(result)
    status(result["verified"], f"verify: {len(missing)} missing, {len(extra)} extra edge(s)")
    return EXIT_ACCEPTED if result["verified"] else EXIT_REJECTED


def cmd_hampath(args):
    g = load_digraph(args.digraph)
    if not is_cacd(g):
        raise PreconditionError("hampath", "digraph is not a CACD")
    path = hamiltonian_path(g)
    emit({"path": path})
    status(True, f"Hamiltonian path on {g.n} vertices")
    return EXIT_ACCEPTED


def cmd_forbidden_derive(args):
    catalog = derive_forbidden_catalog(args.max_n)
    generator = ReportGenerator()
    paths = generator.write_catalog(catalog, args.out)
    report = catalog.deviation_report()
    emit({"schema": CATALOG_SCHEMA, "files": len(paths), **generator.catalog_summary(catalog)})
    if report:
        for line in report:
            status(False, line)
        return EXIT_REJECTED
    status(True, f"catalog: {len(catalog.members)} member(s) written to {args.out}")
    return EXIT_ACCEPTED


def run_sweep(name, n=None, workers=None, count=None, seed=RANDOM_SEED):
    """Dispatch a sweep by name to the matching driver."""
    if name in CHECKS:
        if n is None:
            raise PreconditionError("sweep", f"{name} needs --n")
        return sweep_digraphs(n, name, workers)
    if name == "cbar8-orientations":
        return cbar8_orientation_sweep(workers)
    if name == "complement-cycle-orientations":
        if n is None:
            raise PreconditionError("sweep", f"{name} needs --n")
        return complement_cycle_orientation_sweep(n, workers)
    if name in RANDOM_CHECKS:
        return random_representation_sweep(name, count=count, max_n=n, seed=seed)
    raise UnknownCheckError(name)


def cmd_sweep(args):
    report = run_sweep(args.check, args.n, args.workers, args.count, args.seed)
    emit(report.to_dict())
    print_report_summary(report.to_frame(), name=report.check)
    if args.out:
        path = ReportGenerator(args.out).write_sweep_report(report)
        status(True, f"report written to {path}")
    status(report.passed, f"{report.check}: {len(report.counterexamples)} counterexample(s) "
                          f"in {report.instances} instances")
    return EXIT_ACCEPTED if report.passed else EXIT_REJECTED


def cmd_render(args):
    if not args.svg and not args.html:
        raise PreconditionError("render", "give --svg and/or --html")
    rep = load_representation(args.representation)
    diagrams = ArcDiagramGenerator()
    if args.svg:
        diagrams.save_svg(rep, args.svg)
        status(True, f"SVG written to {args.svg}")
    if args.html:
        fig = diagrams.create_interactive_figure(rep)
        ReportGenerator().write_html(
            {"Arc diagram": fig}, "Catch representation", args.html,
            caption=f"{rep.n} arcs on a circle of circumference {rep.circumference}",
        )
        status(True, f"HTML written to {args.html}")
    return EXIT_ACCEPTED


def cmd_classify(args):
    g = load_digraph(args.digraph)
    emit(classify(g).to_dict())
    return EXIT_ACCEPTED


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="cacd",
        description="Circular-arc catch digraph recognition and certificates",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="INFO logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("recognize", help="decide class membership with a certificate")
    p.add_argument("digraph", help="digraph JSON file")
    p.add_argument("--class", dest="kind", choices=RECOGNITION_CLASSES, default="cacd")
    p.add_argument("--trace", action="store_true", help="include the proper construction trace")
    p.set_defaults(handler=cmd_recognize)

    p = commands.add_parser("realize", help="digraph of a representation")
    p.add_argument("representation", help="representation JSON file")
    p.set_defaults(handler=cmd_realize)

    p = commands.add_parser("verify", help="check a representation against a digraph")
    p.add_argument("representation")
    p.add_argument("digraph")
    p.add_argument("--proper", action="store_true", help="also require a proper arc family")
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("hampath", help="Hamiltonian path of a unilateral oriented CACD")
    p.add_argument("digraph")
    p.set_defaults(handler=cmd_hampath)

    p = commands.add_parser("forbidden", help="forbidden tournament catalog")
    actions = p.add_subparsers(dest="action", required=True)
    derive = actions.add_parser("derive", help="derive minimal non-CACD tournaments")
    derive.add_argument("--max-n", type=int, default=TOURNAMENT_MAX_N)
    derive.add_argument("--out", default=CATALOG_DIR, help="catalog directory")
    derive.set_defaults(handler=cmd_forbidden_derive)

    p = commands.add_parser("sweep", help="run a named property sweep")
    p.add_argument("check", help=", ".join([*CHECKS, *ORIENTATION_SWEEPS, *RANDOM_CHECKS]))
    p.add_argument("--n", type=int, help="vertex count (largest count for random sweeps)")
    p.add_argument("--workers", type=int, help="worker processes (default: CACD_WORKERS or CPU count)")
    p.add_argument("--count", type=int, help="instances for random sweeps")
    p.add_argument("--seed", type=int, default=RANDOM_SEED, help="seed for random sweeps")
    p.add_argument("--out", nargs="?", const=RESULTS_DIR, help="write the report JSON into this directory")
    p.set_defaults(handler=cmd_sweep)

    p = commands.add_parser("render", help="draw a representation")
    p.add_argument("representation")
    p.add_argument("--svg", help="SVG output file")
    p.add_argument("--html", help="interactive HTML output file")
    p.set_defaults(handler=cmd_render)

    p = commands.add_parser("classify", help="membership in every supported class")
    p.add_argument("digraph")
    p.set_defaults(handler=cmd_classify)

    return parser


def error_label(error):
    return next(label for kind, label in ERROR_LABELS if isinstance(error, kind))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (CacdError, OSError, ValueError) as e:
        logger.debug("command failed", exc_info=True)
        status(False, f"{error_label(e)}: {e}")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
