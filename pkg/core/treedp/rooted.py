# core/treedp/rooted.py
from collections import deque
from dataclasses import dataclass
from typing import List, Tuple

from core.errors import NotATreeError
from core.graph import Graph, is_forest


@dataclass(frozen=True)
class RootedTree:
    """Rooted view of an acyclic graph, one root per component.

    ``parent[v]`` is 0 for roots. Each component is rooted at its smallest
    vertex id and children are listed in ascending id order.
    """

    n: int
    roots: Tuple[int, ...]
    parent: Tuple[int, ...]
    children: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_graph(cls, g: Graph) -> "RootedTree":
        if not is_forest(g):
            raise NotATreeError(f"graph with n={g.n}, m={g.m} contains a cycle or has no vertices")

        parent = [0] * (g.n + 1)
        children: List[List[int]] = [[] for _ in range(g.n + 1)]
        seen = [False] * (g.n + 1)
        roots = []
        for root in g.vertices:
            if seen[root]:
                continue
            roots.append(root)
            seen[root] = True
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in g.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        parent[v] = u
                        children[u].append(v)
                        queue.append(v)

        return cls(
            n=g.n,
            roots=tuple(roots),
            parent=tuple(parent),
            children=tuple(tuple(c) for c in children),
        )

    @property
    def root(self) -> int:
        return self.roots[0]

    @property
    def is_connected(self) -> bool:
        return len(self.roots) == 1

    def post_order(self, root: int) -> List[int]:
        """Children before parents, without recursion."""
        order, stack = [], [root]
        while stack:
            u = stack.pop()
            order.append(u)
            stack.extend(self.children[u])
        order.reverse()
        return order
