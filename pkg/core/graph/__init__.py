from core.graph.algorithms import (
    bipartition,
    coverage,
    is_forest,
    is_tree,
    max_degree,
    require_unit_weights,
)
from core.graph.fixtures import (
    FIXTURES,
    fixture_mnc_counterexample,
    fixture_tree_mnc_counterexample,
    fixture_weighted_spider,
)
from core.graph.generators import gen_random_bipartite, gen_random_graph, gen_random_tree
from core.graph.io import parse_graph, read_graph_file, write_graph, write_graph_file
from core.graph.model import BipartiteLabeling, Edge, Graph, PvcInstance, Side

__all__ = [
    "BipartiteLabeling",
    "Edge",
    "FIXTURES",
    "Graph",
    "PvcInstance",
    "Side",
    "bipartition",
    "coverage",
    "fixture_mnc_counterexample",
    "fixture_tree_mnc_counterexample",
    "fixture_weighted_spider",
    "gen_random_bipartite",
    "gen_random_graph",
    "gen_random_tree",
    "is_forest",
    "is_tree",
    "max_degree",
    "parse_graph",
    "read_graph_file",
    "require_unit_weights",
    "write_graph",
    "write_graph_file",
]
