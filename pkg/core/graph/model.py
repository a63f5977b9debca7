# core/graph/model.py
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from core.errors import InfeasibleTargetError, InvalidGraphError

Edge = Tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n with positive integer vertex weights.

    Edges are stored canonically as (min, max) pairs in ascending order, so two
    graphs with the same edge set compare equal regardless of input order.
    """

    n: int
    edges: Tuple[Edge, ...] = ()
    weights: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"vertex count must be nonnegative, got {self.n}")

        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidGraphError(f"self-loop on vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.n:
                    raise InvalidGraphError(f"edge endpoint {w} outside [1, {self.n}]")
            key = normalize_edge(u, v)
            if key in seen:
                raise InvalidGraphError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

        weights = tuple(self.weights) if self.weights else (1,) * self.n
        if len(weights) != self.n:
            raise InvalidGraphError(f"expected {self.n} weights, got {len(weights)}")
        for vertex, w in enumerate(weights, start=1):
            if w < 1:
                raise InvalidGraphError(f"weight {w} < 1 on vertex {vertex}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        weights: Optional[Dict[int, int]] = None,
    ) -> "Graph":
        weight_list = [1] * n
        for vertex, w in (weights or {}).items():
            if not 1 <= vertex <= n:
                raise InvalidGraphError(f"weight on vertex {vertex} outside [1, {n}]")
            weight_list[vertex - 1] = w
        return cls(n=n, edges=tuple(edges), weights=tuple(weight_list))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbour lists; index 0 is unused so ids index directly."""
        neighbours: List[List[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbours)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Indices into ``edges`` of the edges incident to each vertex."""
        incident: List[List[int]] = [[] for _ in range(self.n + 1)]
        for index, (u, v) in enumerate(self.edges):
            incident[u].append(index)
            incident[v].append(index)
        return tuple(tuple(ids) for ids in incident)

    @cached_property
    def incidence_masks(self) -> Tuple[int, ...]:
        """Per-vertex bitmask over edge indices."""
        masks = [0] * (self.n + 1)
        for index, (u, v) in enumerate(self.edges):
            bit = 1 << index
            masks[u] |= bit
            masks[v] |= bit
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def weight(self, v: int) -> int:
        return self.weights[v - 1]

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def is_unit_weight(self) -> bool:
        return all(w == 1 for w in self.weights)

    def with_unit_weights(self) -> "Graph":
        return Graph(n=self.n, edges=self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


class Side(str, Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class BipartiteLabeling:
    """Side label for every vertex; ``sides[v - 1]`` is the side of vertex v."""

    sides: Tuple[Side, ...]

    def side(self, v: int) -> Side:
        return self.sides[v - 1]

    @property
    def left(self) -> FrozenSet[int]:
        return frozenset(v for v, s in enumerate(self.sides, start=1) if s is Side.LEFT)

    @property
    def right(self) -> FrozenSet[int]:
        return frozenset(v for v, s in enumerate(self.sides, start=1) if s is Side.RIGHT)

    def is_valid_for(self, g: Graph) -> bool:
        if len(self.sides) != g.n:
            return False
        return all(self.side(u) is not self.side(v) for u, v in g.edges)


@dataclass(frozen=True)
class PvcInstance:
    graph: Graph
    t: int

    def __post_init__(self):
        if self.t < 0:
            raise InvalidGraphError(f"target t must be nonnegative, got {self.t}")
        if self.t > self.graph.m:
            raise InfeasibleTargetError(self.t, self.graph.m)
