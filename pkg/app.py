"""
Signed Projective Cubes Toolkit - Main Application
Command-line front end: construct graphs, analyze, decide homomorphisms,
circular colourings, packings and lifts, and run named verification suites.
"""

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional

# Add the application directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from models import Homomorphism, Report, SignedGraph, format_length
from services.circular_service import CircularService
from services.construction_service import ConstructionService
from services.export_service import ExportService
from services.gallery_service import GalleryService
from services.homomorphism_service import HomomorphismService
from services.lift_service import LiftService
from services.packing_service import PackingService
from services.signed_graph_service import SignedGraphService
from services.verification_service import VerificationService
from utils.config_manager import get_config
from utils.errors import BudgetExceeded, SGraphParseError, SignedGraphError
from utils.file_manager import FileManager, digest, write_dot, write_sgraph

logger = logging.getLogger('spc_toolkit')

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

LIFT_FIXTURE_COMMENT = "planar bipartite, negative girth 4"


# ============================================================================
# Helpers
# ============================================================================

def configure_logging(level: Optional[str]):
    """Logs go to stderr; stdout carries graphs and reports only."""
    level = (level or get_config().get('log_level', 'WARNING')).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr
    )


def load_graphs(paths: List[str]) -> List[SignedGraph]:
    file_manager = FileManager(export_dir='.')
    return [file_manager.read_graph(path) for path in paths]


def emit_graph(graph: SignedGraph, fmt: str):
    sys.stdout.write(write_dot(graph) if fmt == 'dot' else write_sgraph(graph))


def emit_report(report: Report):
    indent = get_config().get('report_indent', 2)
    sys.stdout.write(json.dumps(report.to_dict(), indent=indent, ensure_ascii=False) + '\n')


def solver_options(args) -> Dict:
    seed = None if args.deterministic else args.seed
    return {'budget': args.budget, 'threads': args.threads, 'seed': seed}


# ============================================================================
# Commands
# ============================================================================

def cmd_construct(args) -> int:
    """Build a graph and write it to stdout."""
    construction = ConstructionService()
    if args.kind == 'spc':
        graph = construction.spc(args.dim, args.method)
    elif args.kind == 'spc-loop':
        graph = construction.spc_loop(args.dim)
    elif args.kind == 'gallery':
        graph = GalleryService().build(args.name)
    elif args.kind == 'edc':
        graph = construction.edc(*load_graphs([args.input]))
    elif args.kind == 'power':
        graph = construction.power_graph(*load_graphs([args.input]))
    else:
        graph = construction.common_product(*load_graphs([args.a, args.b]))
    emit_graph(graph, args.format)
    return EXIT_OK


def cmd_analyze(args) -> Report:
    (graph,) = load_graphs([args.file])
    service = SignedGraphService()
    profile = service.girth_profile(graph)
    results = {
        'n': graph.n,
        'edges': graph.edge_count,
        'girth_profile': profile.to_dict(),
        'negative_girth': format_length(service.negative_girth(graph)),
        'classification': service.classify(graph).to_dict(),
        'components': len(service.connected_components(graph)),
    }
    if args.sp:
        results['in_sp'] = {str(k): service.in_sp_k(graph, k) for k in args.sp}
    return Report('analyze', digest(graph), results)


def cmd_hom(args) -> Report:
    source, target = load_graphs([args.source, args.target])
    service = HomomorphismService()
    if args.witness:
        data = json.loads(Path(args.witness).read_text(encoding='utf-8'))
        hom = Homomorphism.from_dict(data.get('results', {}).get('homomorphism', data))
        valid, diagnostic = service.verify_homomorphism(source, target, hom)
        return Report('hom', digest(source, target), {'valid': valid, 'diagnostic': diagnostic})

    result = service.search(source, target, allow_switching=not args.no_switching, **solver_options(args))
    return Report('hom', digest(source, target), result.to_dict())


def cmd_chic(args) -> Report:
    (graph,) = load_graphs([args.file])
    result = CircularService().circular_chromatic_number(graph, max_numerator=args.max_p, **solver_options(args))
    return Report('chic', digest(graph), result.to_dict())


def cmd_pack(args) -> Report:
    (graph,) = load_graphs([args.file])
    service = PackingService()
    results = {'negative_girth': format_length(SignedGraphService().negative_girth(graph))}
    if args.oracle:
        value, packing = service.packing_number_oracle(graph)
        results['packing_number'] = format_length(value)
        results['packing'] = packing.to_dict()
    else:
        results['packing_number'] = format_length(service.packing_number(graph, **solver_options(args)))
    return Report('pack', digest(graph), results)


def cmd_lift(args) -> Report:
    (graph,) = load_graphs([args.file])
    instance, hom = LiftService().lift_pipeline(graph, k=args.k, **solver_options(args))
    return Report('lift', digest(graph), {
        'instance': instance.to_dict(),
        'homomorphism': hom.to_dict(),
        'target': f"EDC(SPC({args.k - 1}))"
    })


def cmd_verify(args) -> Report:
    options = {key: value for key, value in (
        ('max_k', args.max_k), ('instances', args.instances), ('trials', args.trials), ('seed', args.seed)
    ) if value is not None}
    run = VerificationService().run(args.suite, **options)
    if args.export:
        export_run(run, args.export)
    return Report('verify', '', run.to_dict())


def export_run(run, path: str):
    exporter = ExportService()
    writers: Dict[str, Callable] = {
        '.xlsx': exporter.export_to_excel,
        '.csv': exporter.export_to_csv,
        '.json': exporter.export_to_json,
    }
    target = Path(path)
    if target.is_dir():
        target = FileManager(export_dir=str(target)).get_export_path(run.suite, '.xlsx')
    writer = writers.get(target.suffix.lower())
    if writer is None:
        raise SignedGraphError(f"Unknown export format {target.suffix!r}; use .xlsx, .csv or .json")
    writer(run, str(target))
    logger.info("exported %s to %s", run.suite, target)


def cmd_fixtures(args) -> int:
    """Regenerate the lift suite fixtures under DIR/lift."""
    seed = args.seed if args.seed is not None else 0
    suite = ConstructionService().planar_quadrangulation_suite(args.max_n, args.count, seed)
    file_manager = FileManager(export_dir=args.out)
    for position, graph in enumerate(suite):
        path = Path(args.out) / 'lift' / f"quadrangulation_{position:02d}.sg"
        file_manager.write_graph(graph, str(path), [LIFT_FIXTURE_COMMENT, f"seed {seed}"])
        logger.info("wrote %s", path)
    sys.stdout.write(f"{len(suite)} fixtures written to {Path(args.out) / 'lift'}\n")
    return EXIT_OK


# ============================================================================
# Argument Parsing
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    parser = argparse.ArgumentParser(prog='spc', description='Signed projective cubes toolkit')
    parser.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR')
    parser.add_argument('--budget', type=int, default=None, help='Search node budget')
    parser.add_argument('--threads', type=int, default=config.get('threads', 1))
    parser.add_argument('--seed', type=int, default=None, help='Shuffle search order with this seed')
    parser.add_argument('--deterministic', action='store_true', help='Ignore --seed; ascending search order')
    commands = parser.add_subparsers(dest='command', required=True)

    construct = commands.add_parser('construct', help='Write a graph in sgraph or DOT format')
    construct.add_argument('kind', choices=['spc', 'spc-loop', 'gallery', 'edc', 'product', 'power'])
    construct.add_argument('--dim', type=int)
    construct.add_argument('--method', default='cayley', help="Construction method, e.g. poset or product:2+3")
    construct.add_argument('--name', help="Gallery name, e.g. gg16 or kneser:5,2")
    construct.add_argument('--in', dest='input')
    construct.add_argument('--a')
    construct.add_argument('--b')
    construct.add_argument('--format', choices=['sgraph', 'dot'], default='sgraph')
    construct.set_defaults(handler=cmd_construct)

    analyze = commands.add_parser('analyze', help='Girth profile and class flags')
    analyze.add_argument('file')
    analyze.add_argument('--sp', type=int, nargs='*', help='Also test membership in SP_k for these k')
    analyze.set_defaults(handler=cmd_analyze)

    hom = commands.add_parser('hom', help='Find or check a homomorphism SOURCE -> TARGET')
    hom.add_argument('source')
    hom.add_argument('target')
    hom.add_argument('--no-switching', action='store_true', help='Sign-preserving maps only')
    hom.add_argument('--witness', help='Verify this JSON witness instead of searching')
    hom.set_defaults(handler=cmd_hom)

    chic = commands.add_parser('chic', help='Circular chromatic number')
    chic.add_argument('file')
    chic.add_argument('--max-p', type=int, default=None, help='Only try circumferences p/q with p <= MAX_P')
    chic.set_defaults(handler=cmd_chic)

    pack = commands.add_parser('pack', help='Signature packing number')
    pack.add_argument('file')
    pack.add_argument('--oracle', action='store_true', help='Exhaustive search with a packing witness')
    pack.set_defaults(handler=cmd_pack)

    lift = commands.add_parser('lift', help='Contract, bound and lift to EDC')
    lift.add_argument('file')
    lift.add_argument('--k', type=int, default=3)
    lift.set_defaults(handler=cmd_lift)

    verify = commands.add_parser('verify', help='Run a named verification suite')
    verify.add_argument('suite', choices=VerificationService.SUITES)
    verify.add_argument('--export', help='Write the checks to a .xlsx, .csv or .json file')
    verify.add_argument('--max-k', type=int)
    verify.add_argument('--instances', type=int)
    verify.add_argument('--trials', type=int)
    verify.set_defaults(handler=cmd_verify)

    fixtures = commands.add_parser('fixtures', help='Regenerate the lift fixture suite')
    fixtures.add_argument('--out', required=True)
    fixtures.add_argument('--max-n', type=int, default=8)
    fixtures.add_argument('--count', type=int, default=12)
    fixtures.set_defaults(handler=cmd_fixtures)

    return parser


def validate(parser: argparse.ArgumentParser, args):
    if args.command != 'construct':
        return
    required = {'spc': ['dim'], 'spc-loop': ['dim'], 'gallery': ['name'], 'edc': ['input'],
                'power': ['input'], 'product': ['a', 'b']}[args.kind]
    missing = [name for name in required if getattr(args, name) is None]
    if missing:
        parser.error(f"construct {args.kind} needs " + ', '.join(
            '--in' if name == 'input' else f'--{name}' for name in missing))


# ============================================================================
# Main Entry Point
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    validate(parser, args)
    configure_logging(args.log_level)
    if args.budget is not None:
        get_config().override({'hom_budget': args.budget})

    started = time.perf_counter()
    try:
        outcome = args.handler(args)
    except SGraphParseError as e:
        logger.error("parse error: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"budget exceeded after {e.nodes} nodes: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except SignedGraphError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE

    if isinstance(outcome, Report):
        outcome.elapsed = time.perf_counter() - started
        emit_report(outcome)
        if args.command == 'verify' and not outcome.results.get('passed', False):
            return EXIT_VERIFY_FAILED
        return EXIT_OK
    return outcome


if __name__ == '__main__':
    sys.exit(main())
