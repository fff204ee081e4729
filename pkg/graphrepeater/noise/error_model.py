from typing import List, Tuple
import math

from graphrepeater.noise.HardwareParams import HardwareParams
from graphrepeater.noise.parity import p_odd, p_odd_tilde
from graphrepeater.utilities import constraints
from graphrepeater.utilities.utils import StationRates


def transmission_failure(L0_km:float, params:HardwareParams) -> float:
    """Probability that a photon sent over L0_km of fiber is lost, coupling failures included"""
    L0_km = constraints.validate_length(L0_km, 'L0_km')
    return 1.0 - (1.0 - params.f_C) * math.exp(-L0_km / params.L_att_km)

def noticed_transmission_failure(L0_km:float, params:HardwareParams) -> float:
    return min(1.0, transmission_failure(L0_km, params) + params.f_T_n_extra)

def node_error_vector(params:HardwareParams, deg:int, deg_in:int, deg_out:int) -> List[float]:
    """Outcome-flip probabilities of the five error sources at a vertex of the given degrees.

    Args:
        params: hardware parameters
        deg: total degree in the repeater graph
        deg_in: number of incoming links (qubits received)
        deg_out: number of outgoing links (qubits prepared and sent)

    Returns:
        [preparation, sent-qubit preparation, gates, transmission, measurement]
    """
    constraints.validate_degrees(deg, deg_in, deg_out)
    return [
        p_odd(params.f_P_u / 2, 1 + deg_in),
        p_odd((params.f_P_n + params.f_P_u) / 2, deg_out),
        p_odd(params.f_G_u / 2, 1 + deg),
        p_odd(params.f_T_u / 2, 1 + deg_in),
        params.f_M_u / 2,
    ]

def node_erasure_exponents(deg:int, deg_in:int) -> Tuple[int, int, int, int]:
    """How many preparations, gates, transmissions and measurements can herald a loss"""
    return 1 + deg_in, 1 + deg, 1 + deg_in, 1 + deg_in

def _erasure_rate(params:HardwareParams, f_T_n:float, deg:int, deg_in:int) -> float:
    n_P, n_G, n_T, n_M = node_erasure_exponents(deg, deg_in)
    survive = ((1.0 - params.f_P_n) ** n_P
               * (1.0 - params.f_G_n) ** n_G
               * (1.0 - f_T_n) ** n_T
               * (1.0 - params.f_M_n) ** n_M)
    return 1.0 - survive

def station_error_vector(params:HardwareParams, L0_km:float = 0.0) -> List[float]:
    """Error sources of a repeater station (two neighbours, one incoming and one outgoing link)"""
    constraints.validate_length(L0_km, 'L0_km')
    return node_error_vector(params, 2, 1, 1)

def node_rates(params:HardwareParams, deg:int, deg_in:int, deg_out:int, L0_km:float) -> StationRates:
    """Unnoticed and noticed failure probability of a vertex with the given degrees.

    A repeater station is the case (deg, deg_in, deg_out) = (2, 1, 1).
    """
    f_u = p_odd_tilde(node_error_vector(params, deg, deg_in, deg_out))
    f_n = _erasure_rate(params, noticed_transmission_failure(L0_km, params), deg, deg_in)
    return StationRates(f_u=f_u, f_n=f_n)

def station_rates(params:HardwareParams, L0_km:float) -> StationRates:
    return node_rates(params, 2, 1, 1, L0_km)
