from typing import Dict, Any
from dataclasses import dataclass, field, fields, asdict
from configparser import ConfigParser, Error as ConfigParserError
import math

from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import NetworkFormatError

PROBABILITY_KEYS = ('f_C', 'f_P_u', 'f_P_n', 'f_G_u', 'f_G_n', 'f_T_u', 'f_T_n_extra', 'f_M_u', 'f_M_n')


@dataclass(frozen=True)
class HardwareParams:
    """
    Hardware Parameters
    ----------
    Failure probabilities of the components used at every repeater station and network node.
    Suffix `_u` is the unnoticed part (a silent flip), suffix `_n` the noticed part (a heralded loss).

    Parameters:
    ----------
    f_C (float):
        Coupling failure probability of the fiber
    L_att_km (float):
        Attenuation length of the fiber in km, math.inf for a lossless fiber
    f_P_u, f_P_n (float):
        Preparation failures
    f_G_u, f_G_n (float):
        Two-qubit gate failures
    f_T_u (float):
        Unnoticed transmission failure (depolarization in the channel)
    f_T_n_extra (float):
        Noticed transmission failure added on top of the fiber loss
    f_M_u, f_M_n (float):
        Measurement failures
    """
    f_C: float = field(default=0.0)
    L_att_km: float = field(default=20.0)
    f_P_u: float = field(default=0.0)
    f_P_n: float = field(default=0.0)
    f_G_u: float = field(default=0.0)
    f_G_n: float = field(default=0.0)
    f_T_u: float = field(default=0.0)
    f_T_n_extra: float = field(default=0.0)
    f_M_u: float = field(default=0.0)
    f_M_n: float = field(default=0.0)

    def __post_init__(self):
        for key in PROBABILITY_KEYS:
            constraints.validate_probability(getattr(self, key), key)
        if math.isnan(self.L_att_km) or not self.L_att_km > 0:
            raise ValueError(f'L_att_km must be positive, got {self.L_att_km}')

    @classmethod
    def uniform(cls, f:float, noticed_share:float = 0.0, **overrides) -> 'HardwareParams':
        """Preparation, gate and measurement all fail with probability f, split into noticed/unnoticed parts."""
        constraints.validate_probability(f, 'f')
        constraints.validate_probability(noticed_share, 'noticed_share')
        f_n = f * noticed_share
        f_u = f - f_n
        values: Dict[str, Any] = dict(f_P_u=f_u, f_P_n=f_n, f_G_u=f_u, f_G_n=f_n, f_M_u=f_u, f_M_n=f_n)
        values.update(overrides)
        return cls(**values)

    @classmethod
    def from_string(cls, text:str, path:str = '<string>') -> 'HardwareParams':
        """Parse `key=value` lines; missing keys keep their defaults, unknown keys are rejected."""
        parser = ConfigParser(delimiters=['='], comment_prefixes=('#', ';'), inline_comment_prefixes=('#',))
        parser.optionxform = str  # type: ignore[assignment,method-assign]
        try:
            parser.read_string('[DEFAULT]\n' + text, source=path)
        except ConfigParserError as e:
            raise NetworkFormatError(f'cannot parse hardware parameters: {e}', path) from None

        known = {f.name for f in fields(cls)}
        values: Dict[str, float] = {}
        for key, raw in parser['DEFAULT'].items():
            if key not in known:
                raise NetworkFormatError(f'unknown hardware parameter {key!r}', path)
            try:
                values[key] = float(raw)
            except ValueError:
                raise NetworkFormatError(f'{key} must be a number, got {raw!r}', path) from None
        try:
            return cls(**values)
        except ValueError as e:
            raise NetworkFormatError(str(e), path) from None

    @classmethod
    def from_file(cls, path:str) -> 'HardwareParams':
        with open(path) as f:
            return cls.from_string(f.read(), path)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)
