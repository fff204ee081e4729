from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple, Union
from dataclasses import dataclass, field
from collections import defaultdict
import logging

from graphrepeater.graph.NetworkGraph import NetworkGraph, VertexId
from graphrepeater.graph.RepeaterGraph import RepeaterGraph, RepeaterStation, Vertex, expand_to_repeater_graph
from graphrepeater.oracle.StabilizerTableau import StabilizerTableau, MAX_QUBITS, build_graph_state
from graphrepeater.utilities.constraints import GateOrder, PauliKind
from graphrepeater.utilities.exceptions import OracleScaleError, OddRepeaterCountError
from graphrepeater.utilities.io import write_text
from graphrepeater.utilities.seed import SeedGenerator

logger = logging.getLogger(__name__)

Outcome = Union[int, str]


@dataclass(frozen=True)
class PauliError:
    """
    A Pauli error on one qubit of the repeater graph.

    `moment` counts the qubit's C_Z gates already applied when the error strikes: 0 right after
    preparation, deg right before measurement. None means after the last gate.
    """
    qubit: Vertex
    kind: PauliKind
    noticed: bool = field(default=False)
    moment: Optional[int] = field(default=None)


def propagate_through_cz(error:PauliError, other:Vertex) -> List[PauliError]:
    """Errors on the output legs of C_Z(error.qubit, other).

    Z stays a Z on its own leg; X stays an X and adds a Z on the other leg; Y does both.
    """
    out = [PauliError(error.qubit, error.kind, error.noticed)]
    if error.kind.has_x:
        out.append(PauliError(other, PauliKind.Z, error.noticed))
    return out


@dataclass
class ProtocolTrace:
    """Outcomes, byproducts and final network-node state of one protocol run"""
    outcomes: Dict[RepeaterStation, Outcome]
    byproducts: Dict[VertexId, str]
    final: StabilizerTableau
    undetermined: FrozenSet[VertexId] = field(default_factory=frozenset)

    @property
    def aborted(self) -> bool:
        return bool(self.undetermined)

    def dump(self) -> str:
        lines = []
        for station, outcome in self.outcomes.items():
            text = outcome if isinstance(outcome, str) else f'{outcome:+d}'
            lines.append(f'station {station} outcome {text}')
        for node, op in self.byproducts.items():
            lines.append(f'byproduct {node} {op}')
        return '\n'.join(lines) + '\n'

    def write_trace(self, path:str) -> None:
        write_text(path, self.dump())

    def generator_sign(self, net:NetworkGraph, v:VertexId) -> Optional[int]:
        x, z = self.final.graph_generator(v, net.neighbors(v))
        return self.final.stabilizer_sign(x, z)

    def wrong_sign_nodes(self, net:NetworkGraph) -> Set[VertexId]:
        """Network nodes whose target generator is not a +1 stabilizer of the final state"""
        return {v for v in net.vertices if self.generator_sign(net, v) != 1}

    def matches_target(self, net:NetworkGraph) -> bool:
        return self.final.equivalent_to(build_graph_state(net))


@dataclass
class PropagationResult:
    """Symbolic effect of a set of Pauli errors on the protocol"""
    flipped: Set[RepeaterStation]
    erased: Set[RepeaterStation]
    residual: Dict[VertexId, Tuple[bool, bool]]

    def predicted_wrong_signs(self, rg:RepeaterGraph) -> Set[VertexId]:
        """Nodes whose main stabilizer ends with the wrong sign after byproduct correction"""
        wrong = set()
        for v in rg.network_nodes:
            support = rg.main_stabilizer_support(v) - {v}
            parity = len(support & self.flipped) % 2
            parity ^= int(self.residual[v][1])
            for u in rg.network_neighbors(v):
                parity ^= int(self.residual[u][0])
            if parity:
                wrong.add(v)
        return wrong


def check_protocol_input(rg:RepeaterGraph, max_qubits:int) -> None:
    for link in rg.net.edges:
        if link.w % 2:
            raise OddRepeaterCountError(link.tail, link.head, link.w)
    if len(rg) > max_qubits:
        raise OracleScaleError(f'repeater graph has {len(rg)} qubits, the oracle handles at most {max_qubits}')

def _events(rg:RepeaterGraph,
            errors:Sequence[PauliError],
            order:GateOrder) -> Iterator[Tuple[str, tuple]]:
    """Circuit events in time order: ('pauli', error), ('cz', (a, b)), ('measure', (r,))"""
    pending: Dict[Vertex, List[PauliError]] = defaultdict(list)
    for e in errors:
        deg = rg.degrees(e.qubit)[0]
        if e.moment is not None and not 0 <= e.moment <= deg:
            raise ValueError(f'moment {e.moment} of error on {e.qubit} outside 0..{deg}')
        pending[e.qubit].append(e)
    done: Dict[Vertex, int] = defaultdict(int)

    def due(q:Vertex, final:bool) -> Iterator[Tuple[str, tuple]]:
        keep = []
        for e in pending[q]:
            if final or (e.moment is not None and e.moment <= done[q]):
                yield 'pauli', (e,)
            else:
                keep.append(e)
        pending[q] = keep

    for op in rg.gate_schedule(order):
        if op.kind == 'cz':
            a, b = op.qubits
            yield from due(a, False)
            yield from due(b, False)
            yield 'cz', (a, b)
            done[a] += 1
            done[b] += 1
        else:
            r = op.qubits[0]
            yield from due(r, True)
            yield 'measure', (r,)
    for v in rg.network_nodes:
        yield from due(v, True)

def _erased_outcomes(rg:RepeaterGraph, errors:Sequence[PauliError]) -> Set[RepeaterStation]:
    """A noticed error on a qubit erases its own outcome and that of the next station downstream"""
    erased: Set[RepeaterStation] = set()
    for e in errors:
        if not e.noticed:
            continue
        if rg.is_station(e.qubit):
            erased.add(e.qubit)  # type: ignore[arg-type]
        for s in rg.successors(e.qubit):
            if rg.is_station(s):
                erased.add(s)  # type: ignore[arg-type]
    return erased

def run_protocol(net:NetworkGraph,
                 seed:Optional[int] = None,
                 errors:Optional[Sequence[PauliError]] = None,
                 order:GateOrder = GateOrder.STREAMING,
                 max_qubits:int = MAX_QUBITS) -> ProtocolTrace:
    """Create the network graph state through the repeater stations, by exact stabilizer simulation.

    Every qubit starts in |+>; the C_Z gates of each link run in `order`, stations are measured in
    X, and every network node applies Z when the outcomes on the rest of its main stabilizer
    multiply to -1. Unnoticed errors are applied at their moment; noticed errors only erase outcomes.

    Raises:
        OddRepeaterCountError: a link carries an odd number of stations
        OracleScaleError: too many qubits for the oracle
    """
    errors = list(errors or [])
    rg = expand_to_repeater_graph(net)
    check_protocol_input(rg, max_qubits)
    seeds = SeedGenerator(seed)

    tableau = StabilizerTableau.plus_state(len(rg), rg.vertices)
    measured: Dict[RepeaterStation, int] = {}
    for kind, args in _events(rg, errors, order):
        if kind == 'pauli':
            e = args[0]
            if not e.noticed:
                tableau.apply_pauli(e.qubit, e.kind)
        elif kind == 'cz':
            tableau.cz(*args)
        else:
            measured[args[0]] = tableau.measure_x(args[0], seeds)

    erased = _erased_outcomes(rg, errors)
    outcomes: Dict[RepeaterStation, Outcome] = {
        s: ('?' if s in erased else measured[s]) for s in rg.stations
    }

    byproducts: Dict[VertexId, str] = {}
    undetermined = set()
    for v in rg.network_nodes:
        support = sorted(rg.main_stabilizer_support(v) - {v}, key=rg.index)
        if any(outcomes[s] == '?' for s in support):
            undetermined.add(v)
            byproducts[v] = 'I'
            continue
        parity = 1
        for s in support:
            parity *= measured[s]
        byproducts[v] = 'Z' if parity == -1 else 'I'
        if parity == -1:
            tableau.apply_pauli(v, PauliKind.Z)
    if undetermined:
        logger.debug(f'byproducts undetermined at {sorted(map(str, undetermined))}')

    final = tableau.restrict_to(rg.network_nodes)
    return ProtocolTrace(outcomes, byproducts, final, frozenset(undetermined))

def propagate_errors(rg:RepeaterGraph,
                     errors:Sequence[PauliError],
                     order:GateOrder = GateOrder.STREAMING) -> PropagationResult:
    """Push Pauli errors through the protocol circuit symbolically, as a Pauli frame"""
    x: Dict[Vertex, bool] = defaultdict(bool)
    z: Dict[Vertex, bool] = defaultdict(bool)
    flipped: Set[RepeaterStation] = set()
    for kind, args in _events(rg, errors, order):
        if kind == 'pauli':
            e = args[0]
            if not e.noticed:
                x[e.qubit] ^= e.kind.has_x
                z[e.qubit] ^= e.kind.has_z
        elif kind == 'cz':
            a, b = args
            xa, xb = x[a], x[b]
            z[a] ^= xb
            z[b] ^= xa
        elif z[args[0]]:
            flipped.add(args[0])
    residual = {v: (x[v], z[v]) for v in rg.network_nodes}
    return PropagationResult(flipped, _erased_outcomes(rg, errors), residual)

def single_error_locations(rg:RepeaterGraph,
                           qubits:Optional[Sequence[Vertex]] = None) -> Iterator[PauliError]:
    """Every unnoticed single Pauli error at every moment of the given qubits (stations by default)"""
    for q in (qubits if qubits is not None else rg.stations):
        deg = rg.degrees(q)[0]
        for moment in range(deg + 1):
            for kind in PauliKind:
                yield PauliError(q, kind, False, moment)
