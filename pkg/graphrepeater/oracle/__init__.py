from .StabilizerTableau import StabilizerTableau, build_graph_state, measure_x
from .protocol import (
    PauliError,
    ProtocolTrace,
    PropagationResult,
    propagate_through_cz,
    propagate_errors,
    run_protocol,
    single_error_locations
)
from .montecarlo import FaultLocation, MonteCarloResult, fault_locations, influence_matrix, monte_carlo_node_error
from .lc_search import LCSearchResult, check_lu_equivalence, apply_lc_sequence, random_lc_walk


__all__ = [
    'StabilizerTableau',
    'build_graph_state',
    'measure_x',
    'PauliError',
    'ProtocolTrace',
    'PropagationResult',
    'propagate_through_cz',
    'propagate_errors',
    'run_protocol',
    'single_error_locations',
    'FaultLocation',
    'MonteCarloResult',
    'fault_locations',
    'influence_matrix',
    'monte_carlo_node_error',
    'LCSearchResult',
    'check_lu_equivalence',
    'apply_lc_sequence',
    'random_lc_walk'
]
