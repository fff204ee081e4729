from typing import Optional, Hashable


class GraphRepeaterError(Exception):
    """Base class for every error raised by graphrepeater."""


class NetworkFormatError(GraphRepeaterError, ValueError):
    """Syntax or consistency problem in a network or parameter file."""

    def __init__(self, message:str, path:Optional[str]=None, lineno:Optional[int]=None):
        self.path = path
        self.lineno = lineno
        where = path if path is not None else '<string>'
        if lineno is not None:
            where = f'{where}:{lineno}'
        super().__init__(f'{where}: {message}')


class OddRepeaterCountError(GraphRepeaterError, ValueError):
    """Raised where the construction needs an even number of repeater stations on a link."""

    def __init__(self, tail:Hashable, head:Hashable, w:int):
        self.link = (tail, head)
        self.w = w
        super().__init__(f'odd repeater count unsupported: link {tail}->{head} has w={w}')


class UnknownVertexError(GraphRepeaterError, KeyError):

    def __init__(self, vertex:Hashable):
        self.vertex = vertex
        super().__init__(f'unknown vertex: {vertex!r}')

    def __str__(self) -> str:
        return str(self.args[0])


class OracleScaleError(GraphRepeaterError, ValueError):
    """Problem is too large for exact simulation, search or enumeration."""


class InfeasibleLinkError(GraphRepeaterError):
    """Every scanned repeater count yields zero quality."""

    def __init__(self, L_km:float, code_name:str):
        self.L_km = L_km
        self.code_name = code_name
        super().__init__(f'no feasible repeater count for L={L_km:g} km with code {code_name}')
