from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Tuple, Union
from dataclasses import dataclass, field
import logging
import networkx as nx

from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import NetworkFormatError, UnknownVertexError

logger = logging.getLogger(__name__)

VertexId = Hashable


def order_key(v:VertexId) -> Tuple[int, int, str]:
    """Sort key giving a deterministic order over mixed vertex ids, integers first and in numeric order"""
    if isinstance(v, int):
        return (0, v, '')
    return (1, 0, str(v))

def sorted_vertices(vertices:Iterable[VertexId]) -> List[VertexId]:
    return sorted(vertices, key=order_key)


@dataclass(frozen=True)
class Link:
    """A network link, oriented along the transmission direction tail -> head."""
    tail: VertexId
    head: VertexId
    length_km: float
    w: int = field(default=0)

    @property
    def key(self) -> Tuple[VertexId, VertexId]:
        return (self.tail, self.head)

    @property
    def spacing_km(self) -> float:
        """Distance between neighbouring stations, L0 = L/(w+1)"""
        return self.length_km / (self.w + 1)

    def other(self, v:VertexId) -> VertexId:
        if v == self.tail:
            return self.head
        elif v == self.head:
            return self.tail
        raise UnknownVertexError(v)


class NetworkGraph:
    """
    Network Graph
    ----------
    Network nodes joined by links of given length and repeater count. Each link stores the
    direction in which qubits are transmitted. Iteration over vertices and links is sorted,
    so everything derived from a graph is reproducible.

    Parameters:
    ----------
    nodes (Iterable):
        Initial network node ids
    """

    def __init__(self, nodes:Optional[Iterable[VertexId]] = None):
        self._graph = nx.Graph()
        for v in nodes or []:
            self.add_node(v)

    def __repr__(self) -> str:
        return f"NetworkGraph(n_vertices={self.n_vertices}, n_edges={self.n_edges}, total_repeaters={self.total_repeaters})"

    def __contains__(self, v:VertexId) -> bool:
        return v in self._graph

    def add_node(self, v:VertexId, label:Optional[str] = None) -> None:
        if v in self._graph:
            raise ValueError(f'duplicate vertex id: {v!r}')
        self._graph.add_node(v, label=label)

    def add_edge(self, u:VertexId, v:VertexId, length_km:float, w:int = 0) -> Link:
        """Add a link transmitting from u to v."""
        for x in (u, v):
            if x not in self._graph:
                raise UnknownVertexError(x)
        if u == v:
            raise ValueError(f'self-loop at {u!r} is not allowed')
        elif self._graph.has_edge(u, v):
            raise ValueError(f'duplicate edge between {u!r} and {v!r}')
        link = Link(u, v, constraints.validate_length(length_km), constraints.validate_repeater_count(w))
        self._graph.add_edge(u, v, link=link)
        return link

    @property
    def vertices(self) -> List[VertexId]:
        return sorted_vertices(self._graph.nodes)

    @property
    def edges(self) -> List[Link]:
        links = [data['link'] for _, _, data in self._graph.edges(data=True)]
        return sorted(links, key=lambda l: (order_key(l.tail), order_key(l.head)))

    @property
    def n_vertices(self) -> int:
        return self._graph.number_of_nodes()

    @property
    def n_edges(self) -> int:
        return self._graph.number_of_edges()

    def label(self, v:VertexId) -> Optional[str]:
        self._check(v)
        return self._graph.nodes[v]['label']

    def link(self, u:VertexId, v:VertexId) -> Link:
        """The link joining u and v, in either orientation"""
        self._check(u)
        self._check(v)
        if not self._graph.has_edge(u, v):
            raise KeyError(f'no link between {u!r} and {v!r}')
        return self._graph.edges[u, v]['link']

    def incident_links(self, v:VertexId) -> List[Link]:
        return [self._graph.edges[v, u]['link'] for u in self.neighbors(v)]

    def neighbors(self, v:VertexId) -> List[VertexId]:
        self._check(v)
        return sorted_vertices(self._graph.neighbors(v))

    def degree(self, v:VertexId) -> int:
        self._check(v)
        return self._graph.degree[v]

    def in_degree(self, v:VertexId) -> int:
        return sum(1 for l in self.incident_links(v) if l.head == v)

    def out_degree(self, v:VertexId) -> int:
        return sum(1 for l in self.incident_links(v) if l.tail == v)

    @property
    def max_degree(self) -> int:
        return max((d for _, d in self._graph.degree), default=0)

    @property
    def n_components(self) -> int:
        return nx.number_connected_components(self._graph)

    @property
    def circuit_rank(self) -> int:
        """Number of independent cycles, |E| - |V| + components"""
        return self.n_edges - self.n_vertices + self.n_components

    @property
    def total_repeaters(self) -> int:
        return sum(l.w for l in self.edges)

    @property
    def total_length_km(self) -> float:
        return sum(l.length_km for l in self.edges)

    def edge_set(self) -> FrozenSet[FrozenSet[VertexId]]:
        return frozenset(frozenset((l.tail, l.head)) for l in self.edges)

    def to_networkx(self) -> nx.Graph:
        return self._graph.copy()

    def copy(self) -> 'NetworkGraph':
        new = NetworkGraph()
        new._graph = self._graph.copy()
        return new

    def with_repeaters(self, assignment:Mapping[Tuple[VertexId, VertexId], int]) -> 'NetworkGraph':
        """Copy with the repeater counts of the given links replaced; keys are (tail, head)."""
        new = NetworkGraph()
        for v in self.vertices:
            new.add_node(v, self.label(v))
        for l in self.edges:
            new.add_edge(l.tail, l.head, l.length_km, assignment.get(l.key, l.w))
        return new

    def local_complement(self,
                         v:VertexId,
                         length_km:Optional[Callable[[VertexId, VertexId], float]] = None) -> 'NetworkGraph':
        """Toggle every link among the neighbours of v and return the new graph.

        Args:
            v: vertex whose neighbourhood is complemented
            length_km: length of links created by the toggle, 0 km when not given

        Returns:
            new NetworkGraph, created links carry w=0 and are oriented from the smaller to the larger id
        """
        nbrs = self.neighbors(v)
        new = self.copy()
        for i, a in enumerate(nbrs):
            for b in nbrs[i+1:]:
                if new._graph.has_edge(a, b):
                    new._graph.remove_edge(a, b)
                else:
                    L = length_km(a, b) if length_km is not None else 0.0
                    new._graph.add_edge(a, b, link=Link(a, b, constraints.validate_length(L), 0))
        return new

    def _check(self, v:VertexId) -> None:
        if v not in self._graph:
            raise UnknownVertexError(v)

    @classmethod
    def from_edges(cls,
                   edges:Iterable[Tuple[VertexId, VertexId]],
                   length_km:float = 0.0,
                   w:int = 0,
                   nodes:Optional[Iterable[VertexId]] = None) -> 'NetworkGraph':
        """Build a graph with uniform links from (tail, head) pairs"""
        edges = list(edges)
        net = cls()
        seen = set(nodes or [])
        for e in edges:
            seen.update(e)
        for v in sorted_vertices(seen):
            net.add_node(v)
        for u, v in edges:
            net.add_edge(u, v, length_km, w)
        return net

    @classmethod
    def parse(cls, text:str, path:Optional[str] = None) -> 'NetworkGraph':
        """Read the line-oriented network format.

        `node <id> [label]`, `edge <u> <v> length_km=<x> [w=<int>]`, and `#` comments.
        """
        net = cls()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            try:
                if tokens[0] == 'node':
                    if len(tokens) < 2:
                        raise ValueError('node line needs an id')
                    net.add_node(tokens[1], ' '.join(tokens[2:]) or None)
                elif tokens[0] == 'edge':
                    net._parse_edge(tokens, path, lineno)
                else:
                    raise ValueError(f'unknown directive {tokens[0]!r}')
            except NetworkFormatError:
                raise
            except (ValueError, KeyError) as e:
                message = e.args[0] if e.args else str(e)
                raise NetworkFormatError(str(message), path, lineno) from None
        return net

    def _parse_edge(self, tokens:List[str], path:Optional[str], lineno:int) -> None:
        if len(tokens) < 4:
            raise ValueError('edge line needs two ids and length_km=<x>')
        u, v = tokens[1], tokens[2]
        attrs: Dict[str, str] = {}
        for tok in tokens[3:]:
            key, sep, value = tok.partition('=')
            if not sep or key not in ('length_km', 'w'):
                raise ValueError(f'unexpected edge attribute {tok!r}')
            if key in attrs:
                raise ValueError(f'attribute {key} given twice')
            attrs[key] = value
        if 'length_km' not in attrs:
            raise ValueError('edge line needs length_km=<x>')
        length = float(attrs['length_km'])
        w_text = attrs.get('w', '0')
        if not w_text.isdigit():
            raise ValueError(f'w must be a nonnegative integer, got {w_text!r}')
        w = int(w_text)
        if w % 2:
            location = f'{path or "<string>"}:{lineno}'
            logger.warning(f'{location}: odd repeater count w={w} on link {u}->{v}')
        self.add_edge(u, v, length, w)

    @classmethod
    def from_file(cls, path:str) -> 'NetworkGraph':
        with open(path) as f:
            return cls.parse(f.read(), path)


def local_complement(graph:Union[NetworkGraph, nx.Graph], v:VertexId) -> Union[NetworkGraph, nx.Graph]:
    """Local complementation of a NetworkGraph, a RepeaterGraph or a plain networkx graph; the input is left untouched.

    A RepeaterGraph is complemented on its undirected qubit graph and a networkx graph comes back.
    """
    if isinstance(graph, NetworkGraph):
        return graph.local_complement(v)
    if hasattr(graph, 'to_networkx'):
        graph = graph.to_networkx()
    if v not in graph:
        raise UnknownVertexError(v)
    g = nx.Graph(graph)
    sub = g.subgraph(list(g.neighbors(v)))
    toggled = nx.complement(sub)
    g.remove_edges_from(list(sub.edges))
    g.add_edges_from(toggled.edges)
    return g
