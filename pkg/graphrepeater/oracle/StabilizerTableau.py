from typing import Hashable, List, Optional, Sequence, Tuple, Union
import numpy as np
import torch
import networkx as nx

from graphrepeater.graph.NetworkGraph import NetworkGraph, sorted_vertices
from graphrepeater.graph.RepeaterGraph import RepeaterGraph
from graphrepeater.utilities import gf2
from graphrepeater.utilities.constraints import PauliKind
from graphrepeater.utilities.exceptions import OracleScaleError
from graphrepeater.utilities.seed import SeedGenerator

MAX_QUBITS = 64


def _phase_exponent(x1:torch.Tensor, z1:torch.Tensor, x2:torch.Tensor, z2:torch.Tensor) -> int:
    """Sum over qubits of the power of i picked up when multiplying Pauli (x1,z1) into (x2,z2)"""
    x1, z1, x2, z2 = (t.to(torch.int64) for t in (x1, z1, x2, z2))
    g = torch.where((x1 == 1) & (z1 == 1), z2 - x2,
        torch.where((x1 == 1) & (z1 == 0), z2 * (2 * x2 - 1),
        torch.where((x1 == 0) & (z1 == 1), x2 * (1 - 2 * z2), torch.zeros_like(x1))))
    return int(g.sum())


class StabilizerTableau:
    """
    Stabilizer Tableau
    ----------
    N commuting, independent Pauli generators of an N-qubit stabilizer state, stored as boolean
    X and Z parts plus a sign bit (True for -1). A qubit carrying both bits holds a Y.

    Parameters:
    ----------
    x (torch.Tensor):
        X part, shape (N, N), row i is generator i
    z (torch.Tensor):
        Z part, shape (N, N)
    signs (torch.Tensor):
        Sign bits, shape (N,)
    labels (Sequence):
        Vertex id of every qubit, defaults to 0..N-1
    """

    def __init__(self,
                 x:torch.Tensor,
                 z:torch.Tensor,
                 signs:torch.Tensor,
                 labels:Optional[Sequence[Hashable]] = None):

        self.x = x.to(torch.bool).clone()
        self.z = z.to(torch.bool).clone()
        self.signs = signs.to(torch.bool).clone()
        n = self.x.shape[1]
        if self.x.shape != self.z.shape or self.signs.shape != (self.x.shape[0],):
            raise ValueError('inconsistent tableau shapes')
        self.labels: List[Hashable] = list(labels) if labels is not None else list(range(n))
        if len(self.labels) != n:
            raise ValueError(f'expected {n} labels, got {len(self.labels)}')
        self._index = {label: i for i, label in enumerate(self.labels)}

    def __repr__(self) -> str:
        return f"StabilizerTableau(n_qubits={self.n_qubits})"

    def __str__(self) -> str:
        return '\n'.join(self.row_string(i) for i in range(self.n_qubits))

    @property
    def n_qubits(self) -> int:
        return self.x.shape[1]

    def qubit(self, label:Hashable) -> int:
        if label not in self._index:
            raise KeyError(f'no qubit labelled {label!r}')
        return self._index[label]

    def copy(self) -> 'StabilizerTableau':
        return StabilizerTableau(self.x, self.z, self.signs, self.labels)

    def row_string(self, i:int) -> str:
        chars = ''.join('IXZY'[int(xb) + 2 * int(zb)] for xb, zb in zip(self.x[i], self.z[i]))
        return ('-' if bool(self.signs[i]) else '+') + chars

    @classmethod
    def plus_state(cls, n:int, labels:Optional[Sequence[Hashable]] = None) -> 'StabilizerTableau':
        """|+>^n, stabilized by X on every qubit"""
        if n > MAX_QUBITS:
            raise OracleScaleError(f'{n} qubits exceed the oracle limit of {MAX_QUBITS}')
        eye = torch.eye(n, dtype=torch.bool)
        return cls(eye, torch.zeros((n, n), dtype=torch.bool), torch.zeros(n, dtype=torch.bool), labels)

    @classmethod
    def graph_state(cls, n:int, edges:Sequence[Tuple[int, int]], labels:Optional[Sequence[Hashable]] = None) -> 'StabilizerTableau':
        """Generators X_i Z_N(i) with all signs +"""
        t = cls.plus_state(n, labels)
        for a, b in edges:
            t.z[a, b] = True
            t.z[b, a] = True
        return t

    # --- Clifford updates -------------------------------------------------

    def cz(self, a:Union[int, Hashable], b:Union[int, Hashable], by_label:bool = True) -> None:
        """Conjugate every generator by C_Z(a, b)"""
        i, j = (self.qubit(a), self.qubit(b)) if by_label else (int(a), int(b))
        self.signs ^= self.x[:, i] & self.x[:, j] & (self.z[:, i] ^ self.z[:, j])
        self.z[:, i] ^= self.x[:, j]
        self.z[:, j] ^= self.x[:, i]

    def apply_pauli(self, q:Hashable, kind:PauliKind) -> None:
        """Apply a Pauli to the state: generators anticommuting with it change sign"""
        i = self.qubit(q)
        flip = torch.zeros(self.x.shape[0], dtype=torch.bool)
        if kind.has_x:
            flip ^= self.z[:, i]
        if kind.has_z:
            flip ^= self.x[:, i]
        self.signs ^= flip

    def _rowsum(self, h:int, i:int) -> None:
        """Generator h <- generator i * generator h"""
        exponent = 2 * int(self.signs[h]) + 2 * int(self.signs[i]) + _phase_exponent(self.x[i], self.z[i], self.x[h], self.z[h])
        self.signs[h] = (exponent % 4) == 2
        self.x[h] ^= self.x[i]
        self.z[h] ^= self.z[i]

    # --- group membership -------------------------------------------------

    def stabilizer_sign(self, x:torch.Tensor, z:torch.Tensor) -> Optional[int]:
        """+1 or -1 if the Pauli (x, z) up to sign is in the stabilizer group, else None"""
        rows = np.hstack([self.x.numpy(), self.z.numpy()])
        target = np.concatenate([x.to(torch.bool).numpy(), z.to(torch.bool).numpy()])
        coeffs = gf2.solve_combination(rows, target)
        if coeffs is None:
            return None
        acc_x = torch.zeros(self.n_qubits, dtype=torch.bool)
        acc_z = torch.zeros(self.n_qubits, dtype=torch.bool)
        exponent = 0
        for i in np.nonzero(coeffs)[0]:
            exponent += 2 * int(self.signs[i]) + _phase_exponent(self.x[i], self.z[i], acc_x, acc_z)
            acc_x ^= self.x[i]
            acc_z ^= self.z[i]
        return -1 if exponent % 4 == 2 else 1

    def stabilizes(self, x:torch.Tensor, z:torch.Tensor, sign:int = 1) -> bool:
        return self.stabilizer_sign(x, z) == sign

    def graph_generator(self, v:Hashable, neighbors:Sequence[Hashable]) -> Tuple[torch.Tensor, torch.Tensor]:
        """Pauli X_v Z_neighbors in this tableau's qubit order"""
        x = torch.zeros(self.n_qubits, dtype=torch.bool)
        z = torch.zeros(self.n_qubits, dtype=torch.bool)
        x[self.qubit(v)] = True
        for u in neighbors:
            z[self.qubit(u)] = True
        return x, z

    def equivalent_to(self, other:'StabilizerTableau') -> bool:
        """Same stabilizer group, signs included; qubits are matched by label"""
        if sorted(map(str, self.labels)) != sorted(map(str, other.labels)):
            return False
        perm = [other.qubit(label) for label in self.labels]
        for i in range(other.n_qubits):
            x = other.x[i, perm]
            z = other.z[i, perm]
            if self.stabilizer_sign(x, z) != (-1 if bool(other.signs[i]) else 1):
                return False
        return True

    # --- measurement ------------------------------------------------------

    def measure_x(self, q:Hashable, seeds:SeedGenerator) -> int:
        """Measure X on qubit q, collapse the state and return the outcome +1 or -1"""
        i = self.qubit(q)
        anti = torch.nonzero(self.z[:, i]).flatten().tolist()
        if anti:
            p = anti[0]
            for h in anti[1:]:
                self._rowsum(h, p)
            bit = seeds.randbit()
            self.x[p] = False
            self.z[p] = False
            self.x[p, i] = True
            self.signs[p] = bool(bit)
            return -1 if bit else 1
        target_x = torch.zeros(self.n_qubits, dtype=torch.bool)
        target_x[i] = True
        sign = self.stabilizer_sign(target_x, torch.zeros(self.n_qubits, dtype=torch.bool))
        if sign is None:
            raise ArithmeticError(f'X on {q!r} commutes with the state but is not a stabilizer')
        return sign

    def restrict_to(self, keep:Sequence[Hashable]) -> 'StabilizerTableau':
        """Tableau on the kept qubits, every other qubit being in an X eigenstate of its own"""
        keep_idx = [self.qubit(k) for k in keep]
        drop_idx = [i for i in range(self.n_qubits) if i not in set(keep_idx)]
        t = self.copy()
        drop_rows = []
        for q in drop_idx:
            single = torch.nonzero(t.x[:, q] & ~t.z.any(dim=1) & (t.x.sum(dim=1) == 1)).flatten().tolist()
            if not single:
                raise ValueError(f'qubit {self.labels[q]!r} is not in a product X eigenstate')
            p = single[0]
            for h in torch.nonzero(t.x[:, q]).flatten().tolist():
                if h != p:
                    t._rowsum(h, p)
            drop_rows.append(p)
        rows = [r for r in range(self.n_qubits) if r not in set(drop_rows)]
        return StabilizerTableau(t.x[rows][:, keep_idx], t.z[rows][:, keep_idx], t.signs[rows], list(keep))


def build_graph_state(g:Union[NetworkGraph, RepeaterGraph, nx.Graph]) -> StabilizerTableau:
    """Stabilizer tableau of the graph state of g, qubits labelled by vertex"""
    if isinstance(g, RepeaterGraph):
        labels = g.vertices
        edges = g.edges
    elif isinstance(g, NetworkGraph):
        labels = g.vertices
        edges = [(l.tail, l.head) for l in g.edges]
    else:
        labels = sorted_vertices(g.nodes)
        edges = list(g.edges)
    if len(labels) > MAX_QUBITS:
        raise OracleScaleError(f'{len(labels)} qubits exceed the oracle limit of {MAX_QUBITS}')
    index = {v: i for i, v in enumerate(labels)}
    return StabilizerTableau.graph_state(len(labels), [(index[a], index[b]) for a, b in edges], labels)

def measure_x(t:StabilizerTableau, q:Hashable, seed:Optional[int] = None) -> Tuple[int, StabilizerTableau]:
    """Outcome of an X measurement on q and the collapsed copy of t"""
    collapsed = t.copy()
    outcome = collapsed.measure_x(q, SeedGenerator(seed))
    return outcome, collapsed
