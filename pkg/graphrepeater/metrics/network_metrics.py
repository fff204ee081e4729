from typing import Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple, Union
from dataclasses import dataclass
import logging
import math
import numpy as np

from graphrepeater.graph.NetworkGraph import NetworkGraph
from graphrepeater.graph.RepeaterGraph import RepeaterGraph, expand_to_repeater_graph
from graphrepeater.noise.HardwareParams import HardwareParams
from graphrepeater.noise.error_model import node_rates, station_rates
from graphrepeater.noise.parity import p_odd, p_odd_tilde
from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import OddRepeaterCountError
from graphrepeater.utilities.utils import CostInputs, LogicalRates, NodeErrorRate, LinkKey

logger = logging.getLogger(__name__)

RatePerLink = Union[float, Mapping[LinkKey, float]]
RatePerNode = Union[float, Mapping[Hashable, float]]


def stations_in_stabilizer(w:int, convention:constraints.Convention = constraints.Convention.A) -> int:
    """Stations of one link whose flips reach a main stabilizer: every second one (A) or all of them (D)"""
    if convention == constraints.Convention.A:
        return w // 2
    elif convention == constraints.Convention.D:
        return w
    raise NotImplementedError(f'This stabilizer convention is not supported: {convention}')

def _node_rate(f_node:RatePerNode, v:Hashable) -> float:
    if isinstance(f_node, Mapping):
        return f_node.get(v, 0.0)
    return f_node

def stabilizer_error_rate(v:Hashable,
                          rg:RepeaterGraph,
                          fbar_station:RatePerLink,
                          f_node:RatePerNode = 0.0,
                          convention:constraints.Convention = constraints.Convention.A) -> float:
    """Probability that the main stabilizer centred at network node v carries the wrong sign.

    Args:
        v: network node
        rg: repeater graph holding v
        fbar_station: logical flip rate of a station, one value or one per link keyed (tail, head)
        f_node: logical flip rate of network nodes, one value or one per node (missing nodes count 0)
        convention: number of stations per link entering the parity, w/2 (A) or w (D)

    Raises:
        OddRepeaterCountError: an incident link carries an odd number of stations
    """
    links = rg.incident_links(v)
    for link in links:
        if link.w % 2:
            raise OddRepeaterCountError(link.tail, link.head, link.w)

    terms: List[float] = []
    if isinstance(fbar_station, Mapping):
        for link in links:
            terms.append(p_odd(fbar_station[link.key], stations_in_stabilizer(link.w, convention)))
    else:
        terms.append(p_odd(fbar_station, sum(stations_in_stabilizer(l.w, convention) for l in links)))
    terms.append(_node_rate(f_node, v))
    terms.extend(_node_rate(f_node, u) for u in rg.network_neighbors(v))
    return p_odd_tilde(terms)

def line_error_rates(fbar_station:float,
                     w:int,
                     f_A:float,
                     f_B:float,
                     convention:constraints.Convention = constraints.Convention.A) -> Tuple[float, float]:
    """Stabilizer error rates of both ends of a single link A -> B"""
    if w % 2:
        raise OddRepeaterCountError('A', 'B', w)
    chain = p_odd(fbar_station, stations_in_stabilizer(w, convention))
    return p_odd_tilde([chain, f_A, f_B]), p_odd_tilde([chain, f_B, f_A])

def fidelity_bounds(e:Sequence[Union[NodeErrorRate, float]]) -> Tuple[float, float]:
    """Lower and upper bound on the fidelity with the target graph state, (max(0, 1 - sum e), 1 - max e)"""
    if len(e) == 0:
        raise ValueError('fidelity bounds need at least one node error rate')
    rates = [x.e_v if isinstance(x, NodeErrorRate) else constraints.validate_probability(x, 'e_v') for x in e]
    return max(0.0, 1.0 - math.fsum(rates)), 1.0 - max(rates)

def binary_entropy(p:float) -> float:
    """h(p) = -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0"""
    p = constraints.validate_probability(p, 'p')
    x = np.array([p, 1.0 - p])
    terms = np.where(x > 0, -x * np.log2(np.where(x > 0, x, 1.0)), 0.0)
    return float(terms.sum())

def secret_fraction(e_A:float, e_B:float) -> float:
    """Asymptotic BB84 secret fraction max(1 - h(e_A) - h(e_B), 0)"""
    e_A = constraints.clamp_error_rate(e_A, 'e_A')
    e_B = constraints.clamp_error_rate(e_B, 'e_B')
    return max(1.0 - binary_entropy(e_A) - binary_entropy(e_B), 0.0)

def effective_secret_fraction(p_succ:float, r_inf:float) -> float:
    constraints.validate_probability(p_succ, 'p_succ')
    constraints.validate_probability(r_inf, 'r_inf')
    return p_succ * r_inf

def line_success_probability(p_succ_station:float, w:int, p_succ_endnodes:Iterable[float]) -> float:
    """Success probability of a chain, assuming stations and end nodes abort independently"""
    constraints.validate_probability(p_succ_station, 'p_succ_station')
    constraints.validate_repeater_count(w)
    total = p_succ_station ** w
    for p in p_succ_endnodes:
        total *= constraints.validate_probability(p, 'p_succ_endnode')
    return total

def cost_performance(ci:CostInputs) -> float:
    """Qubits per km and unit of quality, C = n w / (L Q); infinite when Q = 0"""
    if ci.Q == 0.0:
        return math.inf
    return ci.n * ci.w / (ci.L_km * ci.Q)

@dataclass(frozen=True)
class NetworkRates:
    """Logical rates of every station (per link) and every network node of an assigned network"""
    links: Dict[LinkKey, LogicalRates]
    nodes: Dict[Hashable, LogicalRates]
    node_spacing_km: Dict[Hashable, float]

    @property
    def fbar_station(self) -> Dict[LinkKey, float]:
        return {k: r.fbar_u for k, r in self.links.items()}

    @property
    def f_node(self) -> Dict[Hashable, float]:
        return {v: r.fbar_u for v, r in self.nodes.items()}

def node_spacing_km(net:NetworkGraph, v:Hashable) -> float:
    """Largest station spacing among the links of v, 0 for an isolated node"""
    return max((l.spacing_km for l in net.incident_links(v)), default=0.0)

def network_logical_rates(net:NetworkGraph, code, params:HardwareParams) -> NetworkRates:
    """Physical rates at the spacing of every link and node, pushed through the code"""
    links = {l.key: code.rates_for(station_rates(params, l.spacing_km)) for l in net.edges}
    nodes = {}
    spacing = {}
    for v in net.vertices:
        spacing[v] = node_spacing_km(net, v)
        physical = node_rates(params, net.degree(v), net.in_degree(v), net.out_degree(v), spacing[v])
        nodes[v] = code.rates_for(physical)
    return NetworkRates(links, nodes, spacing)

def node_error_rates(net:NetworkGraph,
                     rates:NetworkRates,
                     convention:constraints.Convention = constraints.Convention.A) -> List[NodeErrorRate]:
    rg = expand_to_repeater_graph(net)
    fbar = rates.fbar_station
    f_node = rates.f_node
    out = []
    for v in net.vertices:
        e_v = constraints.clamp_error_rate(stabilizer_error_rate(v, rg, fbar, f_node, convention), f'e_{v}')
        out.append(NodeErrorRate(v, e_v, net.degree(v)))
    return out

def network_success_probability(net:NetworkGraph, rates:NetworkRates) -> float:
    """Product over all stations and all network nodes, the same composition as for a line"""
    total = 1.0
    for l in net.edges:
        total *= rates.links[l.key].p_succ ** l.w
    for v in net.vertices:
        total *= rates.nodes[v].p_succ
    return total
