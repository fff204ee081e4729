from graphrepeater.codes.BaseCode import CodeSpec
from graphrepeater.codes.ClassicalCode import ClassicalCode, hamming_code
from graphrepeater.codes.tables import steane_table_rates
from graphrepeater.utilities.utils import LogicalRates


class SteaneCode(CodeSpec):
    """
    Steane Code
    ----------
    [[7,1,3]] CSS code. Measurements are decoded with the [7,4,3] Hamming code; a block aborts
    when more than n_max of its seven qubits are lost.

    Parameters:
    ----------
    n_max (int):
        Abort threshold in 0..7, 7 never aborts
    """

    def __init__(self, n_max:int = 7):
        super().__init__(f'steane:{n_max}', n=7, k=1, d=3, n_max=n_max)

    @property
    def classical(self) -> ClassicalCode:
        return hamming_code()

    def rates(self, f_u:float, f_n:float) -> LogicalRates:
        return steane_table_rates(f_u, f_n, self.n_max)  # type: ignore[arg-type]
