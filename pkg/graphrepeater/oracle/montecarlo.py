from typing import Dict, FrozenSet, List, Optional, Tuple
from dataclasses import dataclass
import logging
import math
import torch

from graphrepeater.codes.BaseCode import CodeSpec
from graphrepeater.codes.Unencoded import Unencoded
from graphrepeater.graph.NetworkGraph import NetworkGraph, VertexId
from graphrepeater.graph.RepeaterGraph import RepeaterGraph, Vertex, expand_to_repeater_graph
from graphrepeater.metrics.network_metrics import (
    network_logical_rates,
    node_error_rates,
    network_success_probability,
    node_spacing_km
)
from graphrepeater.noise.HardwareParams import HardwareParams
from graphrepeater.noise.error_model import noticed_transmission_failure
from graphrepeater.oracle.protocol import PauliError, propagate_errors, check_protocol_input
from graphrepeater.utilities import constraints
from graphrepeater.utilities.seed import SeedGenerator

logger = logging.getLogger(__name__)

MIN_TRIALS = 10_000
MAX_MC_QUBITS = 4096
DEFAULT_BLOCK_SIZE = 100_000
MC_FIELDS = ('node', 'degree', 'e_hat', 'stderr', 'e_v', 'ok')


@dataclass
class MonteCarloResult:
    """
    Monte-Carlo Result
    ----------
    Empirical stabilizer error rate of every network node next to the analytic value.

    Parameters:
    ----------
    code (str):
        Code name, 'none' for a physical-level run
    trials (int):
        Number of sampled protocol runs
    n_sampled (int):
        Runs the empirical rates are averaged over, the kept runs at the physical level
    n_kept (int):
        Runs without any erasure or abort
    degree (Dict):
        Network degree of every node
    e_hat, stderr (Dict):
        Empirical rate and its standard error per node
    analytic (Dict):
        Stabilizer error rate from the parity formulas
    p_succ_hat, p_succ (float):
        Empirical and analytic probability of a run without abort
    """
    code: str
    trials: int
    n_sampled: int
    n_kept: int
    degree: Dict[VertexId, int]
    e_hat: Dict[VertexId, float]
    stderr: Dict[VertexId, float]
    analytic: Dict[VertexId, float]
    p_succ_hat: float
    p_succ: float

    @property
    def nodes(self) -> List[VertexId]:
        return list(self.e_hat)

    def sigma(self, v:VertexId) -> float:
        """Binomial standard error of the analytic rate at the sample size used for e_hat"""
        e = self.analytic[v]
        return math.sqrt(e * (1.0 - e) / self.n_sampled) if self.n_sampled else math.inf

    def within(self, sigmas:float = 3.0) -> Dict[VertexId, bool]:
        return {v: abs(self.e_hat[v] - self.analytic[v]) <= sigmas * self.sigma(v) for v in self.nodes}

    def rows(self, sigmas:float = 3.0) -> List[tuple]:
        ok = self.within(sigmas)
        return [(v, self.degree[v], self.e_hat[v], self.stderr[v], self.analytic[v], 'ok' if ok[v] else 'fail')
                for v in self.nodes]


@dataclass(frozen=True)
class FaultLocation:
    """A place in the protocol circuit where `error` strikes with probability `p`"""
    error: PauliError
    p: float
    component: str


def _spacing(rg:RepeaterGraph) -> Dict[Vertex, float]:
    net = rg.net
    spacing: Dict[Vertex, float] = {v: node_spacing_km(net, v) for v in rg.network_nodes}
    for link in net.edges:
        for s in rg.link_path(link.tail, link.head)[1:-1]:
            spacing[s] = link.spacing_km
    return spacing

def fault_locations(rg:RepeaterGraph, params:HardwareParams) -> Tuple[List[FaultLocation], List[float]]:
    """Unnoticed failure locations of the protocol circuit and the heralding probability of every noticed one.

    Every qubit is prepared, absorbs one preparation and one transmission per qubit it receives,
    carries the preparation failure of every qubit it sends, can fail after preparation and after
    each of its C_Z gates, and is measured once. An unnoticed failure depolarizes the qubit, so its
    X part and its Z part each strike with half the failure probability. A station's X outcome only
    sees the Z part. A network node takes both parts after its last gate, where the Z part flips its
    own stabilizer and the X part the stabilizers of its neighbours.

    Noticed failures are counted per received qubit for preparation, transmission and measurement
    and per gate moment for gates; a failed preparation of a sent qubit is not heralded at the sender.
    """
    spacing = _spacing(rg)
    flips: List[FaultLocation] = []
    heralded: List[float] = []
    for q in rg.vertices:
        deg, d_in, d_out = rg.degrees(q)
        unnoticed = ([('preparation', 0, params.f_P_u)] * (1 + d_in)
                     + [('sent preparation', 0, params.f_P_n + params.f_P_u)] * d_out
                     + [('gate', m, params.f_G_u) for m in range(deg + 1)]
                     + [('transmission', 0, params.f_T_u)] * (1 + d_in)
                     + [('measurement', deg, params.f_M_u)])
        station = rg.is_station(q)
        for component, moment, f in unnoticed:
            if f <= 0:
                continue
            if station:
                flips.append(FaultLocation(PauliError(q, constraints.PauliKind.Z, moment=moment), f / 2, component))
            else:
                flips.append(FaultLocation(PauliError(q, constraints.PauliKind.Z), f / 2, component))
                flips.append(FaultLocation(PauliError(q, constraints.PauliKind.X), f / 2, component))

        f_T_n = noticed_transmission_failure(spacing[q], params)
        heralded.extend([params.f_P_n] * (1 + d_in) + [params.f_G_n] * (1 + deg)
                        + [f_T_n] * (1 + d_in) + [params.f_M_n] * (1 + d_in))
    return flips, [p for p in heralded if p > 0]

def influence_matrix(rg:RepeaterGraph,
                     locations:List[FaultLocation],
                     order:constraints.GateOrder = constraints.GateOrder.STREAMING) -> torch.Tensor:
    """Row i marks the network nodes whose main stabilizer ends with the wrong sign when location i fails alone.

    Pauli frames add over GF(2), so the rows of all failed locations summed mod 2 give the
    wrong signs of a whole run.
    """
    col = {v: j for j, v in enumerate(rg.network_nodes)}
    effect: Dict[PauliError, FrozenSet[VertexId]] = {}
    M = torch.zeros((len(locations), len(col)), dtype=torch.float64)
    for i, loc in enumerate(locations):
        if loc.error not in effect:
            frame = propagate_errors(rg, [loc.error], order)
            effect[loc.error] = frozenset(frame.predicted_wrong_signs(rg))
        for v in effect[loc.error]:
            M[i, col[v]] = 1.0
    return M

def _parity_matrix(rg:RepeaterGraph) -> torch.Tensor:
    """Row v marks every block whose logical flip changes the corrected sign of the main stabilizer of v"""
    nodes = rg.network_nodes
    M = torch.zeros((len(nodes), len(rg)), dtype=torch.float64)
    for row, v in enumerate(nodes):
        for s in rg.main_stabilizer_support(v):
            M[row, rg.index(s)] = 1.0
        for u in rg.network_neighbors(v):
            M[row, rg.index(u)] = 1.0
    return M


def _logical_sources(rg:RepeaterGraph, params:HardwareParams, code:CodeSpec) -> Tuple[torch.Tensor, torch.Tensor]:
    """Logical flip and abort probability of every block"""
    rates = network_logical_rates(rg.net, code, params)
    fbar = torch.zeros(len(rg), dtype=torch.float64)
    abort = torch.zeros(len(rg), dtype=torch.float64)
    for v in rg.network_nodes:
        fbar[rg.index(v)] = rates.nodes[v].fbar_u
        abort[rg.index(v)] = 1.0 - rates.nodes[v].p_succ
    for link in rg.net.edges:
        r = rates.links[link.key]
        for s in rg.link_path(link.tail, link.head)[1:-1]:
            fbar[rg.index(s)] = r.fbar_u
            abort[rg.index(s)] = 1.0 - r.p_succ
    return fbar, abort

def monte_carlo_node_error(net:NetworkGraph,
                           params:HardwareParams,
                           trials:int,
                           seed:Optional[int] = None,
                           code:Optional[CodeSpec] = None,
                           convention:constraints.Convention = constraints.Convention.A,
                           block_size:int = DEFAULT_BLOCK_SIZE) -> MonteCarloResult:
    """Sample the protocol and count main stabilizers ending with the wrong sign after byproduct correction.

    Without a code every failure location of the circuit (see `fault_locations`) is drawn on its
    own and the drawn Paulis are pushed through the C_Z gates as a Pauli frame; a run with any
    heralded failure is discarded. With a code every block draws a logical flip with the joint
    rate fbar_u or an abort with 1 - P_succ, and every run counts.

    Blocks of `block_size` runs draw from their own stream, so results depend only on
    (inputs, seed, block_size).

    Raises:
        ValueError: fewer than MIN_TRIALS runs
        OracleScaleError: too many qubits
        OddRepeaterCountError: a link carries an odd number of stations
    """
    if trials < MIN_TRIALS:
        raise ValueError(f'at least {MIN_TRIALS} trials are needed, got {trials}')
    elif block_size < 1:
        raise ValueError(f'block size must be positive, got {block_size}')
    rg = expand_to_repeater_graph(net)
    check_protocol_input(rg, MAX_MC_QUBITS)

    seeds = SeedGenerator(seed)
    encoded = code is not None
    if encoded:
        fbar, abort = _logical_sources(rg, params, code)
        M = _parity_matrix(rg).T
    else:
        locations, heralded = fault_locations(rg, params)
        flip_p = torch.tensor([loc.p for loc in locations], dtype=torch.float64)
        herald_p = torch.tensor(heralded, dtype=torch.float64)
        M = influence_matrix(rg, locations)
        logger.debug(f'{len(locations)} unnoticed and {len(heralded)} noticed failure locations')

    wrong_total = torch.zeros(len(rg.network_nodes), dtype=torch.float64)
    n_kept = 0
    done = 0
    block = 0
    while done < trials:
        b = min(block_size, trials - done)
        g = seeds.spawn(block)
        if encoded:
            u = torch.rand((b, len(rg)), generator=g, dtype=torch.float64)
            flipped = (u < fbar).to(torch.float64)
            aborted = ((u >= fbar) & (u < fbar + abort)).any(dim=1)
            kept = ~aborted
            weight = torch.ones(b, dtype=torch.float64)
        else:
            u = torch.rand((b, len(flip_p)), generator=g, dtype=torch.float64)
            flipped = (u < flip_p).to(torch.float64)
            erased = torch.rand((b, len(herald_p)), generator=g, dtype=torch.float64) < herald_p
            kept = ~erased.any(dim=1)
            weight = kept.to(torch.float64)
        wrong = (flipped @ M) % 2
        wrong_total += (wrong * weight[:, None]).sum(dim=0)
        n_kept += int(kept.sum())
        done += b
        block += 1

    denom = trials if encoded else n_kept
    nodes = rg.network_nodes
    e_hat: Dict[VertexId, float] = {}
    stderr: Dict[VertexId, float] = {}
    for row, v in enumerate(nodes):
        p = float(wrong_total[row]) / denom if denom else math.nan
        e_hat[v] = p
        stderr[v] = math.sqrt(p * (1.0 - p) / denom) if denom else math.nan

    rates = network_logical_rates(net, code if encoded else Unencoded(), params)
    analytic = {n.vertex: n.e_v for n in node_error_rates(net, rates, convention)}
    p_succ = network_success_probability(net, rates)
    logger.info(f'{trials} runs, {n_kept} without abort; '
                + ', '.join(f'{v}: {e_hat[v]:.4g} vs {analytic[v]:.4g}' for v in nodes))

    return MonteCarloResult(
        code=code.name if encoded else 'none',
        trials=trials,
        n_sampled=denom,
        n_kept=n_kept,
        degree={v: net.degree(v) for v in nodes},
        e_hat=e_hat,
        stderr=stderr,
        analytic=analytic,
        p_succ_hat=n_kept / trials,
        p_succ=p_succ
    )
