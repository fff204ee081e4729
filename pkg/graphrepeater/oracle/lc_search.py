from typing import Dict, Hashable, List, Optional, Tuple, Union
from collections import deque
from dataclasses import dataclass, field
import logging
import numpy as np
import networkx as nx
import torch

from graphrepeater.graph.NetworkGraph import NetworkGraph, local_complement, sorted_vertices
from graphrepeater.utilities.constraints import LCStatus
from graphrepeater.utilities.exceptions import OracleScaleError
from graphrepeater.utilities.seed import SeedGenerator

logger = logging.getLogger(__name__)

MAX_LC_VERTICES = 12
DEFAULT_MAX_STATES = 200_000

Graph = Union[NetworkGraph, nx.Graph]


@dataclass(frozen=True)
class LCSearchResult:
    """Outcome of a local-complementation search; truthy only when a witness was found"""
    status: LCStatus
    sequence: List[Hashable] = field(default_factory=list)
    explored: int = field(default=0)

    def __bool__(self) -> bool:
        return self.status == LCStatus.EQUIVALENT


def _as_networkx(g:Graph) -> nx.Graph:
    return g.to_networkx() if isinstance(g, NetworkGraph) else nx.Graph(g)

def _adjacency(g:nx.Graph, order:List[Hashable]) -> np.ndarray:
    return nx.to_numpy_array(g, nodelist=order, dtype=np.uint8, weight=None)

def _lc_adjacency(adj:np.ndarray, i:int) -> np.ndarray:
    """Toggle every pair among the neighbours of i"""
    nbrs = adj[i].astype(bool)
    out = adj ^ np.outer(nbrs, nbrs).astype(np.uint8)
    np.fill_diagonal(out, 0)
    return out

def _components(g:nx.Graph) -> frozenset:
    return frozenset(frozenset(c) for c in nx.connected_components(g))

def check_lu_equivalence(g1:Graph,
                         g2:Graph,
                         max_depth:Optional[int] = None,
                         max_states:int = DEFAULT_MAX_STATES) -> LCSearchResult:
    """Breadth-first search for local complementations turning g1 into g2.

    Both graphs must live on the same vertex set. The shortest witness is returned. When the
    whole orbit of g1 was explored without meeting g2 the graphs are not equivalent; when the
    depth or state bound cut the search short the answer is BOUND_EXCEEDED.

    Raises:
        OracleScaleError: more than MAX_LC_VERTICES vertices
        ValueError: the vertex sets differ
    """
    a, b = _as_networkx(g1), _as_networkx(g2)
    if set(a.nodes) != set(b.nodes):
        raise ValueError('graphs must be defined on the same vertex set')
    if a.number_of_nodes() > MAX_LC_VERTICES:
        raise OracleScaleError(f'{a.number_of_nodes()} vertices exceed the search limit of {MAX_LC_VERTICES}')
    if _components(a) != _components(b):
        return LCSearchResult(LCStatus.NOT_EQUIVALENT)

    order = sorted_vertices(a.nodes)
    n = len(order)
    upper = np.triu_indices(n, 1)

    def key(adj:np.ndarray) -> bytes:
        return np.packbits(adj[upper]).tobytes()

    start = _adjacency(a, order)
    target = key(_adjacency(b, order))
    parent: Dict[bytes, Tuple[Optional[bytes], Optional[int]]] = {key(start): (None, None)}
    queue = deque([(start, 0)])
    cut = False

    while queue:
        adj, depth = queue.popleft()
        k = key(adj)
        if k == target:
            sequence = []
            while parent[k][0] is not None:
                prev, i = parent[k]
                sequence.append(order[i])
                k = prev
            return LCSearchResult(LCStatus.EQUIVALENT, sequence[::-1], len(parent))
        if max_depth is not None and depth >= max_depth:
            cut = True
            continue
        for i in range(n):
            if adj[i].sum() < 2:
                continue
            nxt = _lc_adjacency(adj, i)
            nk = key(nxt)
            if nk in parent:
                continue
            if len(parent) >= max_states:
                logger.warning(f'local-complementation search stopped after {max_states} graphs')
                return LCSearchResult(LCStatus.BOUND_EXCEEDED, [], len(parent))
            parent[nk] = (k, i)
            queue.append((nxt, depth + 1))

    status = LCStatus.BOUND_EXCEEDED if cut else LCStatus.NOT_EQUIVALENT
    if cut:
        logger.warning(f'local-complementation search reached depth {max_depth} without a witness')
    return LCSearchResult(status, [], len(parent))

def apply_lc_sequence(g:Graph, sequence:List[Hashable]) -> Graph:
    for v in sequence:
        g = local_complement(g, v)
    return g

def random_lc_walk(g:Graph, steps:int, seed:Optional[int] = None) -> Tuple[Graph, List[Hashable]]:
    """Apply `steps` local complementations at uniformly drawn vertices"""
    if steps < 0:
        raise ValueError(f'steps must be nonnegative, got {steps}')
    seeds = SeedGenerator(seed)
    vertices = sorted_vertices(_as_networkx(g).nodes)
    if not vertices:
        return g, []
    picks = torch.randint(0, len(vertices), (steps,), generator=seeds()).tolist()
    sequence = [vertices[i] for i in picks]
    return apply_lc_sequence(g, sequence), sequence
