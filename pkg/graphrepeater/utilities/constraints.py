from typing import Sequence, Iterable, List
from enum import Enum
import logging
import math

logger = logging.getLogger(__name__)


class Convention(Enum):
    """Number of repeater stations entering the stabilizer error rate: half of the link (A) or all of it (D)."""
    A = 'A'
    D = 'D'

class QualityFactor(Enum):
    R = 'R'
    FIDELITY = 'fidelity'

class RepeaterPolicy(Enum):
    FIXED = 'fixed'
    OPTIMAL = 'optimal'

class GateOrder(Enum):
    STREAMING = 'streaming'
    BATCH = 'batch'

class PauliKind(Enum):
    X = 'X'
    Y = 'Y'
    Z = 'Z'

    @property
    def has_x(self) -> bool:
        return self in (PauliKind.X, PauliKind.Y)

    @property
    def has_z(self) -> bool:
        return self in (PauliKind.Z, PauliKind.Y)

    @classmethod
    def from_bits(cls, x:bool, z:bool) -> 'PauliKind':
        if x and z:
            return cls.Y
        elif x:
            return cls.X
        elif z:
            return cls.Z
        raise ValueError('identity is not a Pauli error kind')


class LCStatus(Enum):
    EQUIVALENT = 'equivalent'
    NOT_EQUIVALENT = 'not equivalent'
    BOUND_EXCEEDED = 'not found within bound'


def validate_probability(value:float, name:str='probability') -> float:
    """Check that a value is a probability and return it as float"""
    value = float(value)
    if math.isnan(value):
        raise ValueError(f'{name} must not be NaN')
    elif value < 0.0 or value > 1.0:
        raise ValueError(f'{name} must lie in [0,1], got {value}')
    return value

def validate_probabilities(values:Iterable[float], name:str='probabilities') -> List[float]:
    return [validate_probability(v, f'{name}[{i}]') for i, v in enumerate(values)]

def validate_length(L_km:float, name:str='length_km') -> float:
    L_km = float(L_km)
    if math.isnan(L_km) or L_km < 0.0:
        raise ValueError(f'{name} must be a nonnegative distance, got {L_km}')
    return L_km

def validate_degrees(deg:int, deg_in:int, deg_out:int) -> None:
    """Degrees must be nonnegative and add up"""
    if min(deg, deg_in, deg_out) < 0:
        raise ValueError(f'degrees must be nonnegative, got ({deg},{deg_in},{deg_out})')
    elif deg != deg_in + deg_out:
        raise ValueError(f'inconsistent degrees: deg={deg} but deg_in+deg_out={deg_in+deg_out}')

def validate_repeater_count(w:int) -> int:
    if int(w) != w or w < 0:
        raise ValueError(f'repeater count must be a nonnegative integer, got {w}')
    return int(w)

def round_up_even(w:int, context:str='') -> int:
    """Odd repeater counts are lifted to the next even value"""
    w = validate_repeater_count(w)
    if w % 2:
        logger.warning(f'odd repeater count w={w}{" on " + context if context else ""} rounded up to {w+1}')
        return w + 1
    return w

def validate_w_range(w_range:Sequence[int]) -> List[int]:
    """Repeater scan ranges are nonempty, even and sorted without duplicates"""
    values = sorted({validate_repeater_count(w) for w in w_range})
    if not values:
        raise ValueError('repeater count range is empty')
    odd = [w for w in values if w % 2]
    if odd:
        raise ValueError(f'repeater count range must contain even values only, got {odd[:5]}')
    return values

def clamp_error_rate(e:float, name:str='error rate') -> float:
    """Cap a stabilizer error rate at one half before it enters the entropy"""
    e = validate_probability(e, name)
    if e > 0.5:
        logger.warning(f'{name}={e:.6g} exceeds 1/2 and is clamped')
        return 0.5
    return e
