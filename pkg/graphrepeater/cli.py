"""Command-line front end: `graphrepeater {optimize-line,analyze-network,simulate,lc-check}`."""
from typing import Any, Dict, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field
import argparse
import logging
import math
import os
import sys
import numpy as np

from graphrepeater import __version__
from graphrepeater.codes.registry import get_code, get_codes
from graphrepeater.graph.NetworkGraph import NetworkGraph
from graphrepeater.noise.HardwareParams import HardwareParams
from graphrepeater.optimizer.link import (
    SWEEP_FIELDS,
    ComparisonRow,
    crossover_distance,
    default_w_range,
    evaluate_link,
    optimize_link
)
from graphrepeater.optimizer.network import REPORT_FIELDS, assign_repeaters, evaluate_network
from graphrepeater.oracle.lc_search import DEFAULT_MAX_STATES, check_lu_equivalence
from graphrepeater.oracle.montecarlo import DEFAULT_BLOCK_SIZE, MC_FIELDS, monte_carlo_node_error
from graphrepeater.oracle.protocol import run_protocol
from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import GraphRepeaterError, InfeasibleLinkError
from graphrepeater.utilities.io import write_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

DEFAULT_GATE_ERROR = 1e-4


def parse_grid(text:str) -> List[float]:
    """Comma-separated distances; an item `start:stop:step` expands to an inclusive range"""
    values: List[float] = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        parts = item.split(':')
        if len(parts) == 1:
            values.append(float(parts[0]))
        elif len(parts) == 3:
            start, stop, step = (float(p) for p in parts)
            if not step > 0:
                raise ValueError(f'range step must be positive, got {item!r}')
            values.extend(float(x) for x in np.arange(start, stop + step / 2, step))
        else:
            raise ValueError(f'cannot read distance {item!r}, expected a number or start:stop:step')
    if not values:
        raise ValueError('distance grid is empty')
    for L in values:
        if not L > 0:
            raise ValueError(f'distances must be positive, got {L}')
    return values

def parse_pairs(text:Optional[str]) -> List[Tuple[str, str]]:
    """`A-B,C-D` into node pairs"""
    pairs = []
    for item in (text or '').split(','):
        item = item.strip()
        if not item:
            continue
        a, sep, b = item.partition('-')
        if not sep or not a or not b:
            raise ValueError(f'cannot read node pair {item!r}, expected <a>-<b>')
        pairs.append((a, b))
    return pairs


@dataclass
class RunConfig:
    """
    Run Configuration
    ----------
    Everything a subcommand reads, validated before any computation and echoed into the output header.
    """
    command: str
    params_path: Optional[str] = field(default=None)
    network_path: Optional[str] = field(default=None)
    code: str = field(default='none')
    L_grid: List[float] = field(default_factory=list)
    w_max: int = field(default=2000)
    trials: int = field(default=1_000_000)
    seed: int = field(default=0)
    block_size: int = field(default=DEFAULT_BLOCK_SIZE)
    convention: constraints.Convention = field(default=constraints.Convention.A)
    quality: constraints.QualityFactor = field(default=constraints.QualityFactor.R)
    policy: constraints.RepeaterPolicy = field(default=constraints.RepeaterPolicy.FIXED)
    pairs: List[Tuple[str, str]] = field(default_factory=list)
    sigmas: float = field(default=3.0)
    all_w: bool = field(default=False)
    trace: Optional[str] = field(default=None)
    out: str = field(default='-')

    def __post_init__(self):
        for path in (self.params_path, self.network_path):
            if path is not None and not os.path.isfile(path):
                raise FileNotFoundError(f'no such file: {path}')
        constraints.validate_repeater_count(self.w_max)
        if self.trials < 1:
            raise ValueError(f'trials must be positive, got {self.trials}')

    @classmethod
    def from_args(cls, args:argparse.Namespace) -> 'RunConfig':
        values = {k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__ and v is not None}
        if 'L_grid' in values:
            values['L_grid'] = parse_grid(values['L_grid'])
        if 'pairs' in values:
            values['pairs'] = parse_pairs(values['pairs'])
        for key, enum in (('convention', constraints.Convention),
                          ('quality', constraints.QualityFactor),
                          ('policy', constraints.RepeaterPolicy)):
            if key in values:
                values[key] = enum(values[key])
        return cls(**values)

    def load_params(self) -> HardwareParams:
        if self.params_path is None:
            return HardwareParams.uniform(DEFAULT_GATE_ERROR)
        return HardwareParams.from_file(self.params_path)

    def load_network(self) -> NetworkGraph:
        if self.network_path is None:
            raise ValueError(f'{self.command} needs --network')
        return NetworkGraph.from_file(self.network_path)

    def metadata(self, params:HardwareParams, **extra:Any) -> Dict[str, Any]:
        meta: Dict[str, Any] = {'tool': 'graphrepeater', 'version': __version__, 'command': self.command}
        for key in self.__dataclass_fields__:
            if key in ('command', 'out'):
                continue
            value = getattr(self, key)
            if isinstance(value, (constraints.Convention, constraints.QualityFactor, constraints.RepeaterPolicy)):
                value = value.value
            elif key == 'L_grid':
                value = ' '.join(repr(L) for L in value)
            elif key == 'pairs':
                value = ' '.join(f'{a}-{b}' for a, b in value)
            meta[key] = value
        for key, value in params.to_dict().items():
            meta[f'params.{key}'] = value
        meta.update(extra)
        return meta


def cmd_optimize_line(cfg:RunConfig) -> int:
    """One optimum row per (distance, code), or every scanned point with --all-w"""
    params = cfg.load_params()
    codes = get_codes(cfg.code)
    if not cfg.L_grid:
        raise ValueError('optimize-line needs --L')
    w_range = default_w_range(cfg.w_max)

    rows = []
    optima: List[ComparisonRow] = []
    infeasible = 0
    for L in cfg.L_grid:
        for code in codes:
            if cfg.all_w:
                points = [evaluate_link(L, w, code, params, cfg.convention, cfg.quality) for w in w_range]
                rows.extend(p.row() for p in points)
                if not any(p.w > 0 and math.isfinite(p.C) for p in points):
                    infeasible += 1
                continue
            try:
                opt = optimize_link(L, code, params, w_range, cfg.convention, cfg.quality)
            except InfeasibleLinkError as e:
                logger.warning(str(e))
                rows.append((L, code.name) + (None,) * (len(SWEEP_FIELDS) - 2))
                optima.append(ComparisonRow(L, code.name, None, None, None))
                infeasible += 1
                continue
            rows.append(opt.evaluation.row())
            optima.append(ComparisonRow(L, code.name, opt.w, opt.L0_km, opt.C))

    extra: Dict[str, Any] = {}
    if len(codes) > 1 and not cfg.all_w:
        extra = {f'crossover_km.{code.name}': crossover_distance(optima, code.name) for code in codes}
    write_csv(cfg.out, SWEEP_FIELDS, rows, cfg.metadata(params, **extra))
    return EXIT_NEGATIVE if infeasible else EXIT_OK

def cmd_analyze_network(cfg:RunConfig) -> int:
    params = cfg.load_params()
    net = cfg.load_network()
    code = get_code(cfg.code)
    report = evaluate_network(net, code, params, cfg.policy, cfg.convention, cfg.quality,
                              default_w_range(cfg.w_max), cfg.pairs)
    extra = {f'summary.{k}': v for k, v in report.summary.items()}
    extra['assignment'] = ' '.join(f'{t}>{h}:{w}' for (t, h), w in report.assignment.items())
    write_csv(cfg.out, REPORT_FIELDS, report.rows(), cfg.metadata(params, **extra))
    return EXIT_OK

def cmd_simulate(cfg:RunConfig) -> int:
    """Monte-Carlo node error rates next to the analytic ones; exit 1 when any node misses the gate"""
    params = cfg.load_params()
    code = get_code(cfg.code)
    net = assign_repeaters(cfg.load_network(), code, params)
    result = monte_carlo_node_error(net, params, cfg.trials, cfg.seed,
                                    None if code.name == 'none' else code,
                                    cfg.convention, cfg.block_size)
    if cfg.trace is not None:
        run_protocol(net, cfg.seed).write_trace(cfg.trace)
    extra = {'n_kept': result.n_kept, 'p_succ_hat': result.p_succ_hat, 'p_succ': result.p_succ}
    write_csv(cfg.out, MC_FIELDS, result.rows(cfg.sigmas), cfg.metadata(params, **extra))
    return EXIT_OK if all(result.within(cfg.sigmas).values()) else EXIT_NEGATIVE

def cmd_lc_check(g1_path:str, g2_path:str, max_depth:Optional[int] = None, max_states:int = DEFAULT_MAX_STATES) -> int:
    g1 = NetworkGraph.from_file(g1_path)
    g2 = NetworkGraph.from_file(g2_path)
    result = check_lu_equivalence(g1, g2, max_depth, max_states)
    print(f'status: {result.status.value}')
    print('sequence: ' + ' '.join(str(v) for v in result.sequence))
    return EXIT_OK if result else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='graphrepeater',
                                     description='Plan and check graph-state quantum repeater networks',
                                     fromfile_prefix_chars='@')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true', help='log progress')
    parser.add_argument('-q', '--quiet', action='store_true', help='log errors only')
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p:argparse.ArgumentParser) -> None:
        p.add_argument('--params', dest='params_path', help='hardware parameter file (key=value lines)')
        p.add_argument('--code', default='none', help='none, steane:<n_max> or golay')
        p.add_argument('--w-max', dest='w_max', type=int, default=2000, help='largest scanned repeater count')
        p.add_argument('--convention', choices=[c.value for c in constraints.Convention], default='A')
        p.add_argument('--quality', choices=[q.value for q in constraints.QualityFactor], default='R')
        p.add_argument('--out', default='-', help='output CSV, - for stdout')

    p = sub.add_parser('optimize-line', help='optimal repeater count of a single link')
    common(p)
    p.add_argument('--L', dest='L_grid', required=True, help='distances in km: 100,200 or 100:2000:100')
    p.add_argument('--all-w', dest='all_w', action='store_true', help='write every scanned point')

    p = sub.add_parser('analyze-network', help='node error rates of a network')
    common(p)
    p.add_argument('--network', dest='network_path', required=True)
    p.add_argument('--policy', choices=[x.value for x in constraints.RepeaterPolicy], default='fixed')
    p.add_argument('--pairs', help='node pairs for secret fractions: A-B,C-D')

    p = sub.add_parser('simulate', help='Monte-Carlo check of the node error rates')
    common(p)
    p.add_argument('--network', dest='network_path', required=True)
    p.add_argument('--trials', type=int, default=1_000_000)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--block-size', dest='block_size', type=int, default=DEFAULT_BLOCK_SIZE)
    p.add_argument('--sigmas', type=float, default=3.0, help='agreement gate in standard errors')
    p.add_argument('--trace', help='also write the trace of one noiseless protocol run')

    p = sub.add_parser('lc-check', help='search local complementations between two networks')
    p.add_argument('g1')
    p.add_argument('g2')
    p.add_argument('--max-depth', dest='max_depth', type=int)
    p.add_argument('--max-states', dest='max_states', type=int, default=DEFAULT_MAX_STATES)
    return parser

def main(argv:Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.ERROR if args.quiet else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    try:
        if args.command == 'lc-check':
            return cmd_lc_check(args.g1, args.g2, args.max_depth, args.max_states)
        cfg = RunConfig.from_args(args)
        if args.command == 'optimize-line':
            return cmd_optimize_line(cfg)
        elif args.command == 'analyze-network':
            return cmd_analyze_network(cfg)
        elif args.command == 'simulate':
            return cmd_simulate(cfg)
        raise NotImplementedError(f'This command is not supported: {args.command}')
    except (GraphRepeaterError, OSError, ValueError, KeyError) as e:
        logger.error(str(e))
        return EXIT_USAGE
