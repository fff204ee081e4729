from typing import List

from graphrepeater.codes.BaseCode import CodeSpec
from graphrepeater.codes.GolayCode import GolayCode
from graphrepeater.codes.SteaneCode import SteaneCode
from graphrepeater.codes.Unencoded import Unencoded
from graphrepeater.codes.tables import STEANE_N_MAX

SELECTORS = ('none', 'steane:<n_max>', 'golay')


def get_code(selector:str) -> CodeSpec:
    """Resolve a code selector: `none`, `steane:<n_max>` or `golay`."""
    name, _, arg = selector.strip().lower().partition(':')
    if name == 'none' and not arg:
        return Unencoded()
    elif name == 'golay' and not arg:
        return GolayCode()
    elif name == 'steane':
        if not arg:
            return SteaneCode()
        if not arg.isdigit() or int(arg) not in STEANE_N_MAX:
            raise ValueError(f'steane abort threshold must be one of {STEANE_N_MAX}, got {arg!r}')
        return SteaneCode(int(arg))
    raise ValueError(f'unknown code selector {selector!r}, expected one of {", ".join(SELECTORS)}')

def get_codes(selectors:str) -> List[CodeSpec]:
    """Comma-separated list of selectors"""
    return [get_code(s) for s in selectors.split(',') if s.strip()]
