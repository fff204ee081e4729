from abc import ABC, abstractmethod
from typing import Optional

from graphrepeater.utilities.utils import LogicalRates, StationRates


class CodeSpec(ABC):
    """
    Base Abstract Class for Codes
    ----------
    An [[n,k,d]] code reduced to what the network analysis needs: the block length and the map
    from physical (f_u, f_n) to the logical flip rate and the probability of not aborting.

    Parameters:
    ----------
    name (str):
        Name used in reports
    n (int):
        Physical qubits per block, which is also the qubit count per repeater station
    k (int):
        Encoded logical qubits
    d (int):
        Code distance
    n_max (int):
        Largest number of lost qubits a block tolerates before aborting, None for never
    """

    def __init__(self, name:str, n:int, k:int, d:int, n_max:Optional[int]):
        if not 1 <= k <= n:
            raise ValueError(f'expected 1 <= k <= n, got k={k}, n={n}')
        elif d < 1:
            raise ValueError(f'distance must be at least 1, got {d}')
        elif n_max is not None and not 0 <= n_max <= n:
            raise ValueError(f'n_max must lie in 0..{n} or be None, got {n_max}')
        self.name = name
        self.n = n
        self.k = k
        self.d = d
        self.n_max = n_max

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, n={self.n}, k={self.k}, d={self.d}, n_max={self.n_max})"

    def __call__(self, f_u:float, f_n:float) -> LogicalRates:
        return self.rates(f_u, f_n)

    @property
    def selector(self) -> str:
        """Name accepted by codes.registry.get_code"""
        return self.name

    @abstractmethod
    def rates(self, f_u:float, f_n:float) -> LogicalRates:
        """Logical flip rate and success probability for physical rates (f_u, f_n)."""
        pass

    def rates_for(self, station:StationRates) -> LogicalRates:
        return self.rates(station.f_u, station.f_n)
