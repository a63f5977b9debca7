# core/graph/algorithms.py
import logging
from collections import deque
from typing import Iterable, List, Optional

import networkx as nx

from core.errors import InvalidGraphError, NonBipartiteError, WeightedGraphError
from core.graph.model import BipartiteLabeling, Graph, Side

logger = logging.getLogger(__name__)


def coverage(g: Graph, s: Iterable[int]) -> int:
    """Number of edges with at least one endpoint in ``s``."""
    mask = 0
    for v in s:
        if not 1 <= v <= g.n:
            raise InvalidGraphError(f"vertex id {v} outside [1, {g.n}]")
        mask |= g.incidence_masks[v]
    return bin(mask).count("1")


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in g.vertices), default=0)


def is_tree(g: Graph) -> bool:
    """True iff the graph is connected and has exactly n - 1 edges."""
    if g.n == 0:
        return False
    return nx.is_tree(g.to_networkx())


def is_forest(g: Graph) -> bool:
    if g.n == 0:
        return False
    return nx.is_forest(g.to_networkx())


def require_unit_weights(g: Graph, what: str) -> None:
    if not g.is_unit_weight:
        raise WeightedGraphError(f"{what} requires unit vertex weights")


def bipartition(g: Graph) -> BipartiteLabeling:
    """Deterministic BFS 2-colouring.

    Components are rooted at their smallest vertex id and the root is coloured
    Left; neighbours are visited in ascending order. An odd cycle is reported
    as a vertex sequence starting at the lowest common BFS ancestor.
    """
    sides: List[Optional[Side]] = [None] * (g.n + 1)
    parent = [0] * (g.n + 1)

    for root in g.vertices:
        if sides[root] is not None:
            continue
        sides[root] = Side.LEFT
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if sides[v] is None:
                    sides[v] = Side.RIGHT if sides[u] is Side.LEFT else Side.LEFT
                    parent[v] = u
                    queue.append(v)
                elif sides[v] is sides[u]:
                    witness = _odd_cycle(parent, u, v)
                    logger.debug(f"Odd cycle found on edge ({u}, {v}): {witness}")
                    raise NonBipartiteError(witness)

    return BipartiteLabeling(sides=tuple(sides[1:]))


def _odd_cycle(parent: List[int], u: int, v: int) -> List[int]:
    def to_root(x: int) -> List[int]:
        path = [x]
        while parent[x]:
            x = parent[x]
            path.append(x)
        return path

    up_u, up_v = to_root(u), to_root(v)
    ancestors_v = set(up_v)
    lca = next(x for x in up_u if x in ancestors_v)
    u_part = up_u[: up_u.index(lca) + 1]
    v_part = up_v[: up_v.index(lca)]
    return list(reversed(u_part)) + v_part
