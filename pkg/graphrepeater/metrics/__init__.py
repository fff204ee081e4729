from .network_metrics import (
    stations_in_stabilizer,
    stabilizer_error_rate,
    line_error_rates,
    fidelity_bounds,
    binary_entropy,
    secret_fraction,
    effective_secret_fraction,
    line_success_probability,
    cost_performance,
    NetworkRates,
    node_spacing_km,
    network_logical_rates,
    node_error_rates,
    network_success_probability
)


__all__ = [
    'stations_in_stabilizer',
    'stabilizer_error_rate',
    'line_error_rates',
    'fidelity_bounds',
    'binary_entropy',
    'secret_fraction',
    'effective_secret_fraction',
    'line_success_probability',
    'cost_performance',
    'NetworkRates',
    'node_spacing_km',
    'network_logical_rates',
    'node_error_rates',
    'network_success_probability'
]
