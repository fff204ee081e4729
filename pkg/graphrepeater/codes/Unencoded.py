from functools import lru_cache
from typing import Optional

from graphrepeater.codes.BaseCode import CodeSpec
from graphrepeater.codes.ClassicalCode import ClassicalCode, enumerate_logical_rate
from graphrepeater.codes.tables import unencoded_rates
from graphrepeater.utilities.utils import LogicalRates


class Unencoded(CodeSpec):
    """One physical qubit per station and no error correction."""

    def __init__(self):
        super().__init__('none', n=1, k=1, d=1, n_max=0)

    def rates(self, f_u:float, f_n:float) -> LogicalRates:
        return unencoded_rates(f_u, f_n)


class EnumeratedCode(CodeSpec):
    """
    Enumerated Code
    ----------
    Rates of any small classical code computed by exhaustive decoding. Rates are memoized, so
    repeated optimizer scans stay cheap.

    Parameters:
    ----------
    classical (ClassicalCode):
        Code measured at every station
    n_max (int):
        Abort threshold, None for never
    """

    def __init__(self, classical:ClassicalCode, n_max:Optional[int] = None):
        self.classical = classical
        super().__init__(f'enumerated:{classical.name}', n=classical.n, k=classical.k,
                         d=classical.minimum_distance, n_max=n_max)
        self._cached = lru_cache(maxsize=4096)(self._enumerate)

    def _enumerate(self, f_u:float, f_n:float) -> LogicalRates:
        return enumerate_logical_rate(self.classical, self.n_max, f_u, f_n)

    def rates(self, f_u:float, f_n:float) -> LogicalRates:
        return self._cached(float(f_u), float(f_n))
