from typing import Hashable, Tuple
from dataclasses import dataclass, field, astuple
import math


@dataclass(frozen=True)
class StationRates:
    """Unnoticed (outcome flip) and noticed (erasure) probability of one station or node."""
    f_u: float
    f_n: float

    def __iter__(self):
        return iter(astuple(self))

@dataclass(frozen=True)
class LogicalRates:
    """Logical flip rate and non-abort probability of one encoded block."""
    fbar_u: float
    p_succ: float

    def __iter__(self):
        return iter(astuple(self))

@dataclass(frozen=True)
class NodeErrorRate:
    vertex: Hashable
    e_v: float
    degree: int = field(default=0)

    def __post_init__(self):
        if not 0.0 <= self.e_v <= 0.5 + 1e-12:
            raise ValueError(f'stabilizer error rate of {self.vertex!r} must lie in [0,1/2], got {self.e_v}')

@dataclass(frozen=True)
class CostInputs:
    """
    Inputs of the cost-performance ratio

    Parameters:
    ----------
    n (int):
        Qubits per repeater station, the code block length
    w (int):
        Number of repeater stations
    L_km (float):
        Total distance in km
    Q (float):
        Quality factor, Q=0 means the protocol yields nothing
    """
    n: int
    w: int
    L_km: float
    Q: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f'qubits per station must be at least 1, got {self.n}')
        elif self.w < 0:
            raise ValueError(f'repeater count must be nonnegative, got {self.w}')
        elif not self.L_km > 0:
            raise ValueError(f'total distance must be positive, got {self.L_km}')
        elif math.isnan(self.Q) or not 0.0 <= self.Q <= 1.0:
            raise ValueError(f'quality factor must lie in [0,1], got {self.Q}')

LinkKey = Tuple[Hashable, Hashable]
