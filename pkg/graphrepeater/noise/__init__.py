from .HardwareParams import HardwareParams
from .parity import p_odd, p_odd_tilde, p_odd_tilde_enumerate
from .error_model import (
    transmission_failure,
    station_error_vector,
    station_rates,
    node_error_vector,
    node_rates
)


__all__ = [
    'HardwareParams',
    'p_odd',
    'p_odd_tilde',
    'p_odd_tilde_enumerate',
    'transmission_failure',
    'station_error_vector',
    'station_rates',
    'node_error_vector',
    'node_rates'
]
