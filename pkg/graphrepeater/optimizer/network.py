from typing import Dict, Hashable, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field
import logging

from graphrepeater.codes.BaseCode import CodeSpec
from graphrepeater.graph.NetworkGraph import NetworkGraph
from graphrepeater.metrics.network_metrics import (
    NetworkRates,
    network_logical_rates,
    node_error_rates,
    network_success_probability,
    fidelity_bounds,
    secret_fraction,
    effective_secret_fraction
)
from graphrepeater.noise.HardwareParams import HardwareParams
from graphrepeater.optimizer.link import optimize_link
from graphrepeater.oracle.lc_search import LCSearchResult, check_lu_equivalence
from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import InfeasibleLinkError
from graphrepeater.utilities.utils import LinkKey, NodeErrorRate

logger = logging.getLogger(__name__)

REPORT_FIELDS = ('node', 'degree', 'e_v')
TOPOLOGY_FIELDS = ('metric', 'a', 'b')


@dataclass
class NetworkReport:
    """
    Network Report
    ----------
    Node error rates and summary statistics of a network with assigned repeater counts.

    Parameters:
    ----------
    net (NetworkGraph):
        Network with the repeater count of every link as evaluated
    code (str):
        Name of the code used at stations and nodes
    nodes (List[NodeErrorRate]):
        Stabilizer error rate of every network node, sorted by node
    fidelity_lower, fidelity_upper (float):
        Bounds on the fidelity with the target graph state
    P_succ (float):
        Probability that no station and no node aborts
    rates (NetworkRates):
        Logical rates behind the node error rates
    pairs (Dict):
        (r_inf, R) for every requested node pair
    """
    net: NetworkGraph
    code: str
    n_qubits_per_station: int
    nodes: List[NodeErrorRate]
    fidelity_lower: float
    fidelity_upper: float
    P_succ: float
    rates: NetworkRates
    pairs: Dict[Tuple[Hashable, Hashable], Tuple[float, float]] = field(default_factory=dict)

    def e(self, v:Hashable) -> float:
        for node in self.nodes:
            if node.vertex == v:
                return node.e_v
        raise KeyError(v)

    @property
    def max_e_v(self) -> float:
        return max(n.e_v for n in self.nodes)

    @property
    def assignment(self) -> Dict[LinkKey, int]:
        return {l.key: l.w for l in self.net.edges}

    @property
    def summary(self) -> Dict[str, float]:
        """Architecture metrics: fewer edges, fewer cycles, lower degree and fewer qubits are better"""
        return {
            'n_vertices': self.net.n_vertices,
            'n_edges': self.net.n_edges,
            'circuit_rank': self.net.circuit_rank,
            'max_degree': self.net.max_degree,
            'total_repeaters': self.net.total_repeaters,
            'total_qubits': self.n_qubits_per_station * self.net.total_repeaters,
            'max_e_v': self.max_e_v,
            'fidelity_lower': self.fidelity_lower,
            'fidelity_upper': self.fidelity_upper,
            'P_succ': self.P_succ,
        }

    def rows(self) -> List[tuple]:
        rows: List[tuple] = [(n.vertex, n.degree, n.e_v) for n in self.nodes]
        rows.append(('fidelity_lower', None, self.fidelity_lower))
        rows.append(('fidelity_upper', None, self.fidelity_upper))
        for (a, b), (r_inf, R) in self.pairs.items():
            rows.append((f'r_inf:{a}-{b}', None, r_inf))
            rows.append((f'R:{a}-{b}', None, R))
        return rows


@dataclass
class TopologyComparison:
    """Two evaluated topologies and whether their graph states are related by local complementation"""
    report_a: NetworkReport
    report_b: NetworkReport
    lc: LCSearchResult

    def rows(self) -> List[tuple]:
        a, b = self.report_a.summary, self.report_b.summary
        rows = [(key, a[key], b[key]) for key in a]
        rows.append(('lc_status', self.lc.status.value, self.lc.status.value))
        return rows


def assign_repeaters(net:NetworkGraph,
                     code:CodeSpec,
                     params:HardwareParams,
                     policy:constraints.RepeaterPolicy = constraints.RepeaterPolicy.FIXED,
                     convention:constraints.Convention = constraints.Convention.A,
                     quality:constraints.QualityFactor = constraints.QualityFactor.R,
                     w_range:Optional[Sequence[int]] = None) -> NetworkGraph:
    """Repeater count of every link under the policy; odd fixed counts are rounded up"""
    assignment = {}
    for link in net.edges:
        fixed = constraints.round_up_even(link.w, f'{link.tail}->{link.head}')
        if policy == constraints.RepeaterPolicy.FIXED or link.length_km == 0:
            assignment[link.key] = fixed
        elif policy == constraints.RepeaterPolicy.OPTIMAL:
            try:
                assignment[link.key] = optimize_link(link.length_km, code, params, w_range, convention, quality).w
            except InfeasibleLinkError as e:
                logger.warning(f'{e}; keeping w={fixed} on {link.tail}->{link.head}')
                assignment[link.key] = fixed
        else:
            raise NotImplementedError(f'This repeater policy is not supported: {policy}')
    return net.with_repeaters(assignment)

def evaluate_network(net:NetworkGraph,
                     code:CodeSpec,
                     params:HardwareParams,
                     policy:constraints.RepeaterPolicy = constraints.RepeaterPolicy.FIXED,
                     convention:constraints.Convention = constraints.Convention.A,
                     quality:constraints.QualityFactor = constraints.QualityFactor.R,
                     w_range:Optional[Sequence[int]] = None,
                     pairs:Sequence[Tuple[Hashable, Hashable]] = ()) -> NetworkReport:
    """Assign repeater counts, then compute the stabilizer error rate of every node.

    With the optimal policy every link gets the repeater count optimize_link finds for its length,
    which is the bipartite figure of merit evaluated edge by edge.
    """
    if net.n_vertices == 0:
        raise ValueError('network has no nodes')
    assigned = assign_repeaters(net, code, params, policy, convention, quality, w_range)
    rates = network_logical_rates(assigned, code, params)
    nodes = node_error_rates(assigned, rates, convention)
    lower, upper = fidelity_bounds(nodes)
    P_succ = network_success_probability(assigned, rates)

    e_of = {n.vertex: n.e_v for n in nodes}
    pair_rates = {}
    for a, b in pairs:
        for v in (a, b):
            if v not in e_of:
                raise KeyError(f'pair node {v!r} is not in the network')
        r_inf = secret_fraction(e_of[a], e_of[b])
        pair_rates[(a, b)] = (r_inf, effective_secret_fraction(P_succ, r_inf))

    logger.info(f'{code.name}: {assigned.n_vertices} nodes, max e_v={max(e_of.values()):.4g}, '
                f'fidelity in [{lower:.4g}, {upper:.4g}]')
    return NetworkReport(assigned, code.name, code.n, nodes, lower, upper, P_succ, rates, pair_rates)

def compare_topologies(net_a:NetworkGraph,
                       net_b:NetworkGraph,
                       code:CodeSpec,
                       params:HardwareParams,
                       policy:constraints.RepeaterPolicy = constraints.RepeaterPolicy.FIXED,
                       convention:constraints.Convention = constraints.Convention.A,
                       quality:constraints.QualityFactor = constraints.QualityFactor.R,
                       w_range:Optional[Sequence[int]] = None,
                       max_depth:Optional[int] = None) -> TopologyComparison:
    """Evaluate two topologies side by side and search a local-complementation witness between them"""
    report_a = evaluate_network(net_a, code, params, policy, convention, quality, w_range)
    report_b = evaluate_network(net_b, code, params, policy, convention, quality, w_range)
    lc = check_lu_equivalence(net_a, net_b, max_depth=max_depth)
    return TopologyComparison(report_a, report_b, lc)
