from typing import Dict, FrozenSet, Hashable, List, NamedTuple, Tuple, Union
import networkx as nx

from graphrepeater.graph.NetworkGraph import NetworkGraph, Link, VertexId
from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import OddRepeaterCountError, UnknownVertexError


class RepeaterStation(NamedTuple):
    """Station number `index` (1..w) on the link tail -> head, counted from the tail."""
    tail: VertexId
    head: VertexId
    index: int

    def __str__(self) -> str:
        return f'{self.tail}>{self.head}#{self.index}'


Vertex = Union[VertexId, RepeaterStation]


class GateOp(NamedTuple):
    kind: str
    qubits: Tuple[Vertex, ...]


class RepeaterGraph:
    """
    Repeater Graph
    ----------
    A network graph with every link subdivided into a path of repeater stations. Edges are
    oriented along the transmission direction, so in- and out-degrees follow the links.

    Vertices are ordered network nodes first (sorted), then stations link by link, which
    fixes the qubit index of every vertex for simulation.
    """

    def __init__(self, net:NetworkGraph):
        self.net = net
        self._graph = nx.DiGraph()
        self._paths: Dict[Tuple[VertexId, VertexId], List[Vertex]] = {}
        self._order: List[Vertex] = []

        for v in net.vertices:
            self._graph.add_node(v, station=False)
            self._order.append(v)
        for link in net.edges:
            path: List[Vertex] = [link.tail]
            for k in range(1, link.w + 1):
                r = RepeaterStation(link.tail, link.head, k)
                self._graph.add_node(r, station=True)
                self._order.append(r)
                path.append(r)
            path.append(link.head)
            nx.add_path(self._graph, path)
            self._paths[link.key] = path
        self._index = {v: i for i, v in enumerate(self._order)}

    def __repr__(self) -> str:
        return f"RepeaterGraph(n_nodes={len(self.network_nodes)}, n_stations={len(self.stations)})"

    def __contains__(self, x:Vertex) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self._order)

    @property
    def vertices(self) -> List[Vertex]:
        return list(self._order)

    @property
    def network_nodes(self) -> List[VertexId]:
        return [v for v in self._order if not self.is_station(v)]

    @property
    def stations(self) -> List[RepeaterStation]:
        return [v for v in self._order if self.is_station(v)]  # type: ignore[misc]

    @property
    def edges(self) -> List[Tuple[Vertex, Vertex]]:
        return sorted(self._graph.edges, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    def index(self, x:Vertex) -> int:
        self._check(x)
        return self._index[x]

    def is_station(self, x:Vertex) -> bool:
        self._check(x)
        return bool(self._graph.nodes[x]['station'])

    def degrees(self, x:Vertex) -> Tuple[int, int, int]:
        """(deg, deg_in, deg_out) under the transmission orientation"""
        self._check(x)
        d_in = self._graph.in_degree(x)
        d_out = self._graph.out_degree(x)
        return d_in + d_out, d_in, d_out

    def neighbors(self, x:Vertex) -> List[Vertex]:
        self._check(x)
        nbrs = set(self._graph.predecessors(x)) | set(self._graph.successors(x))
        return sorted(nbrs, key=self._index.__getitem__)

    def successors(self, x:Vertex) -> List[Vertex]:
        self._check(x)
        return sorted(self._graph.successors(x), key=self._index.__getitem__)

    def network_neighbors(self, v:VertexId) -> List[VertexId]:
        """Neighbours of a network node in the network graph, across the repeater chains"""
        if self.is_station(v):
            raise ValueError(f'{v} is a repeater station, not a network node')
        return self.net.neighbors(v)

    def incident_links(self, v:VertexId) -> List[Link]:
        return self.net.incident_links(v)

    def link_path(self, u:VertexId, v:VertexId) -> List[Vertex]:
        """Vertices of the link between u and v, listed from u to v"""
        link = self.net.link(u, v)
        path = self._paths[link.key]
        return list(path) if link.tail == u else list(reversed(path))

    def main_stabilizer_support(self, v:VertexId) -> FrozenSet[Vertex]:
        """v together with every second station outward from v on each incident link.

        Multiplying the generators of these vertices leaves X on the set and Z only on the
        network neighbours of v.

        Raises:
            OddRepeaterCountError: an incident link carries an odd number of stations
        """
        if self.is_station(v):
            raise ValueError(f'{v} is a repeater station, not a network node')
        support: List[Vertex] = [v]
        for link in self.incident_links(v):
            if link.w % 2:
                raise OddRepeaterCountError(link.tail, link.head, link.w)
            path = self.link_path(v, link.other(v))
            support.extend(path[2:link.w + 1:2])
        return frozenset(support)

    def gate_schedule(self, order:constraints.GateOrder = constraints.GateOrder.STREAMING) -> List[GateOp]:
        """C_Z gates and X-measurements of the repeater protocol.

        Streaming order walks each link from tail to head and measures a station right after
        its second gate; batch order applies every gate before the first measurement.
        """
        gates: List[GateOp] = []
        measurements: List[GateOp] = []
        for link in self.net.edges:
            path = self._paths[link.key]
            for k in range(len(path) - 1):
                gates.append(GateOp('cz', (path[k], path[k+1])))
                if k >= 1:
                    op = GateOp('measure', (path[k],))
                    if order == constraints.GateOrder.STREAMING:
                        gates.append(op)
                    else:
                        measurements.append(op)
        if order == constraints.GateOrder.STREAMING:
            return gates
        elif order == constraints.GateOrder.BATCH:
            return gates + measurements
        raise NotImplementedError(f'This gate order is not supported: {order}')

    def to_networkx(self) -> nx.Graph:
        """Undirected copy, for local complementation and plotting tools"""
        return self._graph.to_undirected()

    def _check(self, x:Hashable) -> None:
        if x not in self._index:
            raise UnknownVertexError(x)


def expand_to_repeater_graph(net:NetworkGraph) -> RepeaterGraph:
    return RepeaterGraph(net)

def degrees(rg:RepeaterGraph, x:Vertex) -> Tuple[int, int, int]:
    return rg.degrees(x)

def main_stabilizer_support(rg:RepeaterGraph, v:VertexId) -> FrozenSet[Vertex]:
    return rg.main_stabilizer_support(v)
