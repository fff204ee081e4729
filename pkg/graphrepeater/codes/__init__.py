from .BaseCode import CodeSpec
from .ClassicalCode import ClassicalCode, hamming_code, golay_code, decode_most_likely, enumerate_logical_rate
from .SteaneCode import SteaneCode
from .GolayCode import GolayCode
from .Unencoded import Unencoded, EnumeratedCode
from .tables import steane_table_rates, golay_table_rates, unencoded_rates
from .sampling import ApproximationGap, approximation_gap, sample_logical_rate, bounded_distance_failure
from .registry import get_code, get_codes


__all__ = [
    'CodeSpec',
    'ClassicalCode',
    'hamming_code',
    'golay_code',
    'decode_most_likely',
    'enumerate_logical_rate',
    'SteaneCode',
    'GolayCode',
    'Unencoded',
    'EnumeratedCode',
    'steane_table_rates',
    'golay_table_rates',
    'unencoded_rates',
    'ApproximationGap',
    'approximation_gap',
    'sample_logical_rate',
    'bounded_distance_failure',
    'get_code',
    'get_codes'
]
