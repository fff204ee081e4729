from .NetworkGraph import NetworkGraph, Link, local_complement, order_key, sorted_vertices
from .RepeaterGraph import (
    RepeaterGraph,
    RepeaterStation,
    expand_to_repeater_graph,
    degrees,
    main_stabilizer_support
)


__all__ = [
    'NetworkGraph',
    'Link',
    'local_complement',
    'order_key',
    'sorted_vertices',
    'RepeaterGraph',
    'RepeaterStation',
    'expand_to_repeater_graph',
    'degrees',
    'main_stabilizer_support'
]
