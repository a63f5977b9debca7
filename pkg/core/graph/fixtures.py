# core/graph/fixtures.py
from core.graph.model import Graph


def fixture_mnc_counterexample() -> Graph:
    """16-vertex bipartite graph whose coverage profile is not concave.

    K(3,3) between {1,2,3} and {4,5,6}, with pendants 7,8 on 1; 9,10 on 2;
    11,12 on 3; 13,14,15 on 4 and 16 on 5.
    """
    edges = [(u, v) for u in (1, 2, 3) for v in (4, 5, 6)]
    pendants = {1: (7, 8), 2: (9, 10), 3: (11, 12), 4: (13, 14, 15), 5: (16,)}
    edges.extend((hub, leaf) for hub, leaves in pendants.items() for leaf in leaves)
    return Graph.from_edges(16, edges)


def fixture_tree_mnc_counterexample() -> Graph:
    """7-vertex tree of max degree 3 whose coverage profile is not concave.

    Hub 4 joins 1, 2, 3 and each of those carries one pendant (5, 6, 7).
    OPT = [0, 3, 4, 6]: the best pair covers 4 edges, the best triple 6.
    """
    return Graph.from_edges(7, [(1, 4), (2, 4), (3, 4), (1, 5), (2, 6), (3, 7)])


def fixture_weighted_spider() -> Graph:
    """9-vertex tree with a single weight-2 vertex (5); concavity fails under weights."""
    edges = [(1, 4), (2, 4), (3, 4), (4, 5), (5, 6), (5, 7), (5, 8), (5, 9)]
    return Graph.from_edges(9, edges, weights={5: 2})


FIXTURES = {
    "mnc-counterexample": fixture_mnc_counterexample,
    "tree-mnc-counterexample": fixture_tree_mnc_counterexample,
    "weighted-spider": fixture_weighted_spider,
}
