"""
Command-Line Interface
generate, localize, demn-check, benchmark and report subcommands
"""

from typing import List, Optional
import argparse
import json
import logging
import sys
from pathlib import Path

from .exceptions import LocalizationError
from .config.config_manager import ConfigManager
from .estimation.cross_domain import CrossDomainCase, UpperBoundModel
from .estimation.expected_distance import expected_distance, region_areas
from .estimation.monte_carlo import monte_carlo_expected_distance, monte_carlo_region_areas
from .evaluation.experiment_runner import run_experiment
from .evaluation.methods import GeneticLocalizer, available_methods, create_localizer
from .evaluation.metrics import ales
from .network.hops import hop_matrix
from .network.network_io import load_network, save_network
from .network.topology import ShapeKind, TopologyShape, generate_network
from .objectives.losses import ObjectiveEvaluator, distance_table
from .optimization.solver import GaConfig
from .utils.export_utils import (
    create_report, export_summary, load_results_csv, render_report, write_results_csv
)
from .utils.result_aggregator import ResultAggregator

logger = logging.getLogger(__name__)

SHAPES = [kind.value for kind in ShapeKind]


def _banner(title: str):
    print("\n" + "=" * 70)
    print(title)
    print("=" * 70)


def cmd_generate(args: argparse.Namespace) -> int:
    shape = TopologyShape.named(args.shape)
    network = generate_network(shape, args.n, args.anchors, args.radius,
                               area=tuple(args.area), seed=args.seed)
    save_network(network, args.out)
    print(f"✓ {network.n_nodes} nodes ({network.n_anchors} anchors), shape '{shape.name}', "
          f"R = {network.radius:g} m -> {args.out}")
    return 0


def _ga_config(args: argparse.Namespace) -> GaConfig:
    changes = {}
    for arg, name in (('iters', 'max_iter'), ('pop', 'population_size'),
                      ('pc', 'pc'), ('pm', 'pm'), ('seed', 'seed')):
        value = getattr(args, arg, None)
        if value is not None:
            changes[name] = value
    if getattr(args, 'warm_start', False):
        changes['warm_start'] = True
    return GaConfig().replace(**changes)


def cmd_localize(args: argparse.Namespace) -> int:
    network = load_network(args.network)
    hops = hop_matrix(network)
    localizer = create_localizer(args.method, _ga_config(args))

    _banner(f"LOCALIZE: {args.method}")
    result = localizer.localize(network, hops)
    score = ales(result.placement, network.unknown_positions, network.radius)
    table = distance_table(network, hops, use_demn=isinstance(localizer, GeneticLocalizer) and localizer.use_demn)
    objectives = ObjectiveEvaluator(network, hops, table).evaluate(result.placement)
    print(f"Network: {args.network} ({network.n_nodes} nodes, {network.n_anchors} anchors)")
    print(f"ALEs: {score:.2f}%")
    print(f"f1 = {objectives.f1:.4f}  f2 = {objectives.f2:.0f}")
    if 'generations' in result.metadata:
        print(f"Generations: {result.metadata['generations']}")

    if args.out:
        output = result.to_dict()
        output['ales_percent'] = score
        output['objectives'] = objectives.to_dict()
        Path(args.out).write_text(json.dumps(output, indent=2))
        print(f"✓ Placement written to {args.out}")
    return 0


def cmd_demn_check(args: argparse.Namespace) -> int:
    ub = args.ub if args.ub is not None else UpperBoundModel()(args.m, args.radius)
    case = CrossDomainCase(d=args.d, radius=args.radius, m=args.m, ub=ub)

    analytic = expected_distance(case)
    sampled = monte_carlo_expected_distance(case, samples=args.samples, seed=args.seed)
    areas = region_areas(case)
    sampled_areas = monte_carlo_region_areas(case, samples=args.samples, seed=args.seed)

    _banner("DEMN EXPECTED DISTANCE CHECK")
    print(f"d = {case.d:g}, R = {case.radius:g}, m = {case.m}, ub = {case.ub:g}")
    print(f"analytic    E = {analytic:.6f}")
    print(f"monte carlo E = {sampled:.6f}  (rel. diff {abs(analytic - sampled) / sampled:.3%})")
    print(f"{'region':<8}{'analytic':>14}{'monte carlo':>14}")
    for name, value in areas.to_dict().items():
        print(f"{name:<8}{value:>14.4f}{sampled_areas.to_dict()[name]:>14.4f}")
    return 0


def cmd_benchmark(args: argparse.Namespace) -> int:
    manager = ConfigManager(args.config)
    config = manager.get_experiment_config()
    changes = {}
    if args.methods:
        changes['methods'] = tuple(args.methods)
    if args.shape:
        changes['shape'] = args.shape
    if args.anchors:
        changes['anchor_counts'] = tuple(args.anchors)
    if args.radii:
        changes['radii'] = tuple(args.radii)
    if args.repeats is not None:
        changes['repeats'] = args.repeats
    if args.seed_base is not None:
        changes['seed_base'] = args.seed_base
    if args.workers is not None:
        changes['max_workers'] = args.workers
    if args.no_timing:
        changes['record_timing'] = False
    if args.iters is not None:
        changes['ga'] = config.ga.replace(max_iter=args.iters)
    if changes:
        config = config.replace(**changes)

    _banner("DEMN LOCALIZATION BENCHMARK")
    print(f"Shape: {config.shape}  Methods: {', '.join(config.methods)}")
    print(f"Anchors: {list(config.anchor_counts)}  Radii: {list(config.radii)}  Repeats: {config.repeats}")

    report = run_experiment(config)
    write_results_csv(report.results, args.out)
    print(f"\n✓ {len(report.results)} repeats written to {args.out}")
    if report.failed():
        print(f"✗ {len(report.failed())} repeats failed (see the error column)")
    if args.summary:
        export_summary(report.summary, args.summary)
        print(f"✓ Summary written to {args.summary}")
    if args.report:
        create_report(report.summary, args.report)
        print(f"✓ Report written to {args.report}")
    print()
    print(render_report(report.summary))
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    aggregator = ResultAggregator(alpha=args.alpha)
    aggregator.add_results(load_results_csv(args.results))
    summary = aggregator.create_summary()
    if args.summary:
        export_summary(summary, args.summary)
    if args.out:
        create_report(summary, args.out)
    print(render_report(summary))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='demn-localization',
        description="Range-free WSN localization with DEMN distances and hop loss"
    )
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Logging level')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('generate', help='Generate a seeded network file')
    gen.add_argument('--shape', choices=SHAPES, default='random')
    gen.add_argument('--n', type=int, default=100, help='Total node count')
    gen.add_argument('--anchors', type=int, default=20, help='Anchor count')
    gen.add_argument('--radius', type=float, default=25.0, help='Communication radius in meters')
    gen.add_argument('--area', type=float, nargs=2, default=[100.0, 100.0], metavar=('W', 'H'))
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--out', required=True, help='Network JSON output path')
    gen.set_defaults(func=cmd_generate)

    loc = sub.add_parser('localize', help='Localize the unknown nodes of a network file')
    loc.add_argument('--network', required=True, help='Network JSON file')
    loc.add_argument('--method', choices=available_methods(), default='demn-hop')
    loc.add_argument('--iters', type=int, help='GA iteration budget')
    loc.add_argument('--pop', type=int, help='GA population size')
    loc.add_argument('--pc', type=float, help='Crossover probability')
    loc.add_argument('--pm', type=float, help='Per-gene mutation probability')
    loc.add_argument('--seed', type=int, help='GA seed')
    loc.add_argument('--warm-start', action='store_true', help='Seed one individual with least squares')
    loc.add_argument('--out', help='Placement JSON output path')
    loc.set_defaults(func=cmd_localize)

    chk = sub.add_parser('demn-check', help='Compare DEMN quadrature against Monte Carlo')
    chk.add_argument('--d', type=float, required=True, help='Anchor separation in meters')
    chk.add_argument('--radius', type=float, required=True)
    chk.add_argument('--m', type=int, choices=[1, 2], default=1, help='Hop count to the unknown node')
    chk.add_argument('--ub', type=float, help='Upper bound (default m * R)')
    chk.add_argument('--mc-samples', '--samples', dest='samples', type=int, default=1_000_000)
    chk.add_argument('--seed', type=int, default=0)
    chk.set_defaults(func=cmd_demn_check)

    bench = sub.add_parser('benchmark', help='Run the benchmark grid')
    bench.add_argument('--config', help='Experiment JSON file')
    bench.add_argument('--out', default='results.csv', help='Results CSV path')
    bench.add_argument('--summary', help='Summary JSON path')
    bench.add_argument('--report', help='Text report path')
    bench.add_argument('--methods', nargs='+', choices=available_methods())
    bench.add_argument('--shape', choices=SHAPES)
    bench.add_argument('--anchors', type=int, nargs='+')
    bench.add_argument('--radii', type=float, nargs='+')
    bench.add_argument('--repeats', type=int)
    bench.add_argument('--iters', type=int, help='GA iteration budget')
    bench.add_argument('--seed-base', type=int)
    bench.add_argument('--workers', type=int)
    bench.add_argument('--no-timing', action='store_true', help='Leave the seconds column empty')
    bench.set_defaults(func=cmd_benchmark)

    rep = sub.add_parser('report', help='Summarize a results CSV')
    rep.add_argument('--results', required=True, help='Results CSV path')
    rep.add_argument('--alpha', type=float, default=0.05)
    rep.add_argument('--summary', help='Summary JSON path')
    rep.add_argument('--out', help='Text report path')
    rep.set_defaults(func=cmd_report)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except LocalizationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
