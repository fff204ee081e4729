from . import constraints
from . import utils
from . import gf2
from . import io

from .exceptions import (
    GraphRepeaterError,
    NetworkFormatError,
    OddRepeaterCountError,
    UnknownVertexError,
    OracleScaleError,
    InfeasibleLinkError
)
from .scan_handle import ScanHandler
from .seed import SeedGenerator


__all__ = [
    'constraints',
    'utils',
    'gf2',
    'io',
    'GraphRepeaterError',
    'NetworkFormatError',
    'OddRepeaterCountError',
    'UnknownVertexError',
    'OracleScaleError',
    'InfeasibleLinkError',
    'ScanHandler',
    'SeedGenerator'
]
