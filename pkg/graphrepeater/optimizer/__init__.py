from .link import (
    LinkEvaluation,
    LinkOptimum,
    ComparisonRow,
    evaluate_link,
    optimize_link,
    compare_codes,
    best_code_per_distance,
    crossover_distance
)
from .network import (
    NetworkReport,
    TopologyComparison,
    assign_repeaters,
    evaluate_network,
    compare_topologies
)


__all__ = [
    'LinkEvaluation',
    'LinkOptimum',
    'ComparisonRow',
    'evaluate_link',
    'optimize_link',
    'compare_codes',
    'best_code_per_distance',
    'crossover_distance',
    'NetworkReport',
    'TopologyComparison',
    'assign_repeaters',
    'evaluate_network',
    'compare_topologies'
]
