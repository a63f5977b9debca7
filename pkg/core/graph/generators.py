# core/graph/generators.py
import logging
import random
from typing import List, Tuple

import networkx as nx

from core.errors import InvalidParameterError
from core.graph.model import Graph

logger = logging.getLogger(__name__)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on n vertices, decoded from a seeded Prüfer sequence."""
    if n < 1:
        raise InvalidParameterError(f"tree needs n >= 1, got {n}")
    if n == 1:
        return Graph(n=1)

    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return Graph.from_edges(n, ((u + 1, v + 1) for u, v in tree.edges()))


def gen_random_bipartite(
    nl: int,
    nr: int,
    max_degree: int,
    edge_prob_control: int,
    seed: int,
) -> Graph:
    """Random bipartite graph with left ids 1..nl and right ids nl+1..nl+nr.

    Every left-right pair is visited once in a seeded shuffled order and
    proposed with probability ``edge_prob_control`` percent; a proposal is
    accepted while both endpoints still have degree below ``max_degree``.
    """
    if nl < 1 or nr < 1:
        raise InvalidParameterError(f"both sides need at least one vertex, got {nl}/{nr}")
    if max_degree < 0:
        raise InvalidParameterError(f"max_degree must be nonnegative, got {max_degree}")
    if not 0 <= edge_prob_control <= 100:
        raise InvalidParameterError(
            f"edge_prob_control is a percentage in [0, 100], got {edge_prob_control}"
        )

    rng = random.Random(seed)
    pairs: List[Tuple[int, int]] = [(u, nl + v) for u in range(1, nl + 1) for v in range(1, nr + 1)]
    rng.shuffle(pairs)

    degree = [0] * (nl + nr + 1)
    edges = []
    for u, v in pairs:
        if rng.randrange(100) >= edge_prob_control:
            continue
        if degree[u] < max_degree and degree[v] < max_degree:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1

    logger.debug(f"Generated bipartite graph {nl}+{nr} with {len(edges)} edges (seed={seed})")
    return Graph.from_edges(nl + nr, edges)


def gen_random_graph(n: int, edge_prob_control: int, seed: int) -> Graph:
    """Erdős–Rényi style simple graph; source instances for the clique reduction."""
    if n < 1:
        raise InvalidParameterError(f"graph needs n >= 1, got {n}")
    if not 0 <= edge_prob_control <= 100:
        raise InvalidParameterError(
            f"edge_prob_control is a percentage in [0, 100], got {edge_prob_control}"
        )
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.randrange(100) < edge_prob_control
    ]
    return Graph.from_edges(n, edges)
