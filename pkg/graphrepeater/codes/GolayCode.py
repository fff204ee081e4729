from graphrepeater.codes.BaseCode import CodeSpec
from graphrepeater.codes.ClassicalCode import ClassicalCode, golay_code
from graphrepeater.codes.tables import golay_table_rates
from graphrepeater.utilities.utils import LogicalRates


class GolayCode(CodeSpec):
    """[[23,1,7]] quantum Golay code, decoded classically with the perfect [23,12,7] code; never aborts."""

    def __init__(self):
        super().__init__('golay', n=23, k=1, d=7, n_max=None)

    @property
    def classical(self) -> ClassicalCode:
        return golay_code()

    def rates(self, f_u:float, f_n:float) -> LogicalRates:
        return golay_table_rates(f_u, f_n)
