from typing import Sequence
import itertools
import math

from graphrepeater.utilities import constraints


def p_odd(f:float, N:int) -> float:
    """Probability of an odd number of flips among N independent flips of probability f"""
    f = constraints.validate_probability(f, 'f')
    if N < 0:
        raise ValueError(f'N must be nonnegative, got {N}')
    if N == 0:
        return 0.0
    elif N == 1:
        return f
    return 0.5 * (1.0 - (1.0 - 2.0 * f) ** N)

def p_odd_tilde(p:Sequence[float]) -> float:
    """Probability of odd parity among independent, non-identical Bernoulli events.

    Args:
        p: per-event probabilities, each in [0,1]

    Returns:
        1/2 (1 - prod(1 - 2 p_k)); 0 for an empty vector, p_0 for a singleton
    """
    p = constraints.validate_probabilities(p, 'p')
    if not p:
        return 0.0
    elif len(p) == 1:
        return p[0]
    return 0.5 * (1.0 - math.prod(1.0 - 2.0 * pk for pk in p))

def p_odd_tilde_enumerate(p:Sequence[float]) -> float:
    """Brute-force sum over all 2^N outcome patterns; reference for p_odd_tilde"""
    p = constraints.validate_probabilities(p, 'p')
    if len(p) > 20:
        raise ValueError(f'enumeration over {len(p)} events is too large')
    total = 0.0
    for pattern in itertools.product((0, 1), repeat=len(p)):
        if sum(pattern) % 2:
            total += math.prod(pk if bit else 1.0 - pk for pk, bit in zip(p, pattern))
    return total
