"""
graphrepeater
======

Planning and checking of quantum networks that distribute graph states through chains of
encoded repeater stations: error rates of every network node, secret key fractions, the
cost-performance ratio of every link, and an exact stabilizer simulation to check them against.
"""

__version__ = '0.1.0'

from .graph import NetworkGraph, RepeaterGraph, expand_to_repeater_graph, local_complement
from .noise import HardwareParams, station_rates, node_rates
from .codes import CodeSpec, SteaneCode, GolayCode, Unencoded, EnumeratedCode, get_code
from .optimizer import optimize_link, compare_codes, evaluate_network, compare_topologies
from .utilities import constraints, utils, SeedGenerator, ScanHandler


__all__ = [
    'NetworkGraph',
    'RepeaterGraph',
    'expand_to_repeater_graph',
    'local_complement',
    'HardwareParams',
    'station_rates',
    'node_rates',
    'CodeSpec',
    'SteaneCode',
    'GolayCode',
    'Unencoded',
    'EnumeratedCode',
    'get_code',
    'optimize_link',
    'compare_codes',
    'evaluate_network',
    'compare_topologies',
    'constraints',
    'utils',
    'SeedGenerator',
    'ScanHandler'
]
