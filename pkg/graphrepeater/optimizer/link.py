from typing import Iterable, List, Optional, Sequence
from dataclasses import dataclass, field, astuple
import logging

from graphrepeater.codes.BaseCode import CodeSpec
from graphrepeater.metrics.network_metrics import (
    line_error_rates,
    secret_fraction,
    effective_secret_fraction,
    line_success_probability,
    cost_performance
)
from graphrepeater.noise.HardwareParams import HardwareParams
from graphrepeater.noise.error_model import node_rates, station_rates
from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import InfeasibleLinkError
from graphrepeater.utilities.scan_handle import ScanHandler
from graphrepeater.utilities.utils import CostInputs

logger = logging.getLogger(__name__)

DEFAULT_W_MAX = 2000
SWEEP_FIELDS = ('L_km', 'code', 'w', 'L0_km', 'f_u', 'f_n', 'fbar_u', 'P_succ', 'e_A', 'e_B', 'r_inf', 'R', 'C')
COMPARISON_FIELDS = ('L_km', 'code', 'w', 'L0_km', 'C')


def default_w_range(w_max:int = DEFAULT_W_MAX) -> List[int]:
    return list(range(0, constraints.round_up_even(w_max, 'w_max') + 1, 2))


@dataclass(frozen=True)
class LinkEvaluation:
    """Every intermediate of the cost-performance chain at one repeater count"""
    L_km: float
    code: str
    w: int
    L0_km: float
    f_u: float
    f_n: float
    fbar_u: float
    P_succ: float
    e_A: float
    e_B: float
    r_inf: float
    R: float
    C: float

    def row(self) -> tuple:
        return astuple(self)


@dataclass(frozen=True)
class LinkOptimum:
    """
    Optimal repeater count of one link

    Parameters:
    ----------
    w (int):
        Repeater count minimizing C among w > 0
    C (float):
        Cost-performance ratio at w
    L0_km (float):
        Station spacing at w
    evaluation (LinkEvaluation):
        Full chain at the optimum
    curve (list):
        Every scanned point, empty unless requested
    """
    w: int
    C: float
    L0_km: float
    evaluation: LinkEvaluation
    curve: List[LinkEvaluation] = field(default_factory=list)


@dataclass(frozen=True)
class ComparisonRow:
    """One (L, code) cell of a code comparison; None marks an infeasible distance"""
    L_km: float
    code: str
    w: Optional[int]
    L0_km: Optional[float]
    C: Optional[float]

    def row(self) -> tuple:
        return astuple(self)


def evaluate_link(L_km:float,
                  w:int,
                  code:CodeSpec,
                  params:HardwareParams,
                  convention:constraints.Convention = constraints.Convention.A,
                  quality:constraints.QualityFactor = constraints.QualityFactor.R) -> LinkEvaluation:
    """Cost-performance ratio of a single link A -> B with w stations.

    Both end nodes have degree one: A sends, B receives. End nodes use the code like the stations.

    Raises:
        OddRepeaterCountError: odd w
    """
    L_km = constraints.validate_length(L_km, 'L_km')
    w = constraints.validate_repeater_count(w)
    L0 = L_km / (w + 1)

    station = station_rates(params, L0)
    logical = code.rates_for(station)
    end_A = code.rates_for(node_rates(params, 1, 0, 1, L0))
    end_B = code.rates_for(node_rates(params, 1, 1, 0, L0))

    e_A, e_B = line_error_rates(logical.fbar_u, w, end_A.fbar_u, end_B.fbar_u, convention)
    P_succ = line_success_probability(logical.p_succ, w, [end_A.p_succ, end_B.p_succ])
    r_inf = secret_fraction(e_A, e_B)
    if quality == constraints.QualityFactor.R:
        Q = effective_secret_fraction(P_succ, r_inf)
    elif quality == constraints.QualityFactor.FIDELITY:
        Q = P_succ * max(0.0, 1.0 - e_A - e_B)
    else:
        raise NotImplementedError(f'This quality factor is not supported: {quality}')
    C = cost_performance(CostInputs(code.n, w, L_km, Q))

    return LinkEvaluation(L_km, code.name, w, L0, station.f_u, station.f_n,
                          logical.fbar_u, P_succ, e_A, e_B, r_inf, Q, C)

def optimize_link(L_km:float,
                  code:CodeSpec,
                  params:HardwareParams,
                  w_range:Optional[Sequence[int]] = None,
                  convention:constraints.Convention = constraints.Convention.A,
                  quality:constraints.QualityFactor = constraints.QualityFactor.R,
                  keep_curve:bool = False,
                  verbose:bool = False) -> LinkOptimum:
    """Exhaustive scan of the repeater count of one link.

    Args:
        L_km: total link length, positive
        code: code used at every station
        params: hardware parameters
        w_range: even repeater counts to scan, 0..2000 by default
        convention: stations entering the stabilizer error rate
        quality: quality factor in the cost-performance ratio
        keep_curve: attach every scanned point to the result
        verbose: log every scanned point

    Returns:
        LinkOptimum at the smallest C among w > 0, ties to the smallest w

    Raises:
        InfeasibleLinkError: the quality factor vanishes at every scanned w > 0
    """
    if not L_km > 0:
        raise ValueError(f'link length must be positive, got {L_km}')
    values = constraints.validate_w_range(default_w_range() if w_range is None else w_range)

    scan = ScanHandler(values, verbose=verbose)
    points = []
    for i, w in enumerate(values):
        point = evaluate_link(L_km, w, code, params, convention, quality)
        scan.push(point.C, i)
        points.append(point)

    try:
        idx, C = scan.best()
    except LookupError:
        raise InfeasibleLinkError(L_km, code.name) from None
    best = points[idx]
    logger.debug(f'L={L_km:g} km, {code.name}: w*={best.w}, C*={C:.6g}')
    return LinkOptimum(best.w, C, best.L0_km, best, points if keep_curve else [])

def compare_codes(L_grid:Iterable[float],
                  codes:Sequence[CodeSpec],
                  params:HardwareParams,
                  w_range:Optional[Sequence[int]] = None,
                  convention:constraints.Convention = constraints.Convention.A,
                  quality:constraints.QualityFactor = constraints.QualityFactor.R) -> List[ComparisonRow]:
    """Optimal C of every code at every distance, distance-major; infeasible cells hold None"""
    rows = []
    for L in L_grid:
        for code in codes:
            try:
                opt = optimize_link(L, code, params, w_range, convention, quality)
            except InfeasibleLinkError as e:
                logger.warning(str(e))
                rows.append(ComparisonRow(L, code.name, None, None, None))
                continue
            rows.append(ComparisonRow(L, code.name, opt.w, opt.L0_km, opt.C))
    return rows

def best_code_per_distance(rows:Sequence[ComparisonRow]) -> List[ComparisonRow]:
    """Row with the lowest C at every distance, infeasible rows skipped"""
    best = {}
    for r in rows:
        if r.C is None:
            continue
        if r.L_km not in best or r.C < best[r.L_km].C:
            best[r.L_km] = r
    return [best[L] for L in sorted(best)]

def crossover_distance(rows:Sequence[ComparisonRow], code:str) -> Optional[float]:
    """Smallest grid distance from which `code` has the lowest C at every larger distance"""
    winners = best_code_per_distance(rows)
    crossover = None
    for r in reversed(winners):
        if r.code != code:
            break
        crossover = r.L_km
    return crossover

