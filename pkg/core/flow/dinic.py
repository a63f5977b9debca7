# core/flow/dinic.py
"""Dinic blocking-flow max-flow with a canonical minimum cut."""
import logging
from collections import deque
from typing import List

from core.errors import FlowInvariantError
from core.flow.network import CutResult, FlowNetwork

logger = logging.getLogger(__name__)


class DinicSolver:
    """Residual graph as paired arc arrays: arc ``a`` and its reverse ``a ^ 1``."""

    def __init__(self, net: FlowNetwork):
        self.net = net
        self.adjacency: List[List[int]] = [[] for _ in range(net.node_count)]
        self.head: List[int] = []
        self.residual: List[int] = []
        for arc in net.arcs:
            self._add_pair(arc.tail, arc.head, arc.capacity)
        self.level: List[int] = []
        self.pointer: List[int] = []

    def _add_pair(self, tail: int, head: int, capacity: int) -> None:
        self.adjacency[tail].append(len(self.head))
        self.head.append(head)
        self.residual.append(capacity)
        self.adjacency[head].append(len(self.head))
        self.head.append(tail)
        self.residual.append(0)

    def _build_levels(self) -> bool:
        """BFS layering of the residual graph; True if the sink is reachable."""
        self.level = [-1] * self.net.node_count
        self.level[self.net.source] = 0
        queue = deque([self.net.source])
        while queue:
            u = queue.popleft()
            for a in self.adjacency[u]:
                v = self.head[a]
                if self.residual[a] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    queue.append(v)
        return self.level[self.net.sink] >= 0

    def _augment(self) -> int:
        """Push flow along one level-graph path found by an iterative DFS."""
        source, sink = self.net.source, self.net.sink
        path: List[int] = []
        u = source
        while True:
            if u == sink:
                pushed = min(self.residual[a] for a in path)
                for a in path:
                    self.residual[a] -= pushed
                    self.residual[a ^ 1] += pushed
                return pushed

            edges = self.adjacency[u]
            while self.pointer[u] < len(edges):
                a = edges[self.pointer[u]]
                v = self.head[a]
                if self.residual[a] > 0 and self.level[v] == self.level[u] + 1:
                    break
                self.pointer[u] += 1
            else:
                # dead end: retreat and skip the arc that led here
                if u == source:
                    return 0
                self.level[u] = -1
                a = path.pop()
                u = self.head[a ^ 1]
                self.pointer[u] += 1
                continue

            path.append(a)
            u = v

    def solve(self) -> CutResult:
        flow = 0
        phases = 0
        while self._build_levels():
            phases += 1
            self.pointer = [0] * self.net.node_count
            while True:
                pushed = self._augment()
                if not pushed:
                    break
                flow += pushed

        result = CutResult(
            max_flow_value=flow,
            source_side=self._source_side(),
            arc_flows=tuple(self.residual[2 * i + 1] for i in range(len(self.net.arcs))),
        )
        self._check(result)
        logger.debug(f"Dinic: flow {flow} in {phases} phases on {self.net.node_count} nodes")
        return result

    def _source_side(self) -> frozenset:
        seen = {self.net.source}
        queue = deque([self.net.source])
        while queue:
            u = queue.popleft()
            for a in self.adjacency[u]:
                v = self.head[a]
                if self.residual[a] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return frozenset(seen)

    def _check(self, result: CutResult) -> None:
        net = self.net
        balance = [0] * net.node_count
        for arc, f in zip(net.arcs, result.arc_flows):
            if not 0 <= f <= arc.capacity:
                raise FlowInvariantError(f"flow {f} violates capacity on {arc}")
            balance[arc.tail] -= f
            balance[arc.head] += f
        for node, b in enumerate(balance):
            if node not in (net.source, net.sink) and b != 0:
                raise FlowInvariantError(f"flow not conserved at node {node} (excess {b})")
        if balance[net.sink] != result.max_flow_value:
            raise FlowInvariantError("sink inflow differs from the reported flow value")
        if net.sink in result.source_side:
            raise FlowInvariantError("sink reachable in the final residual graph")
        capacity = result.cut_capacity(net)
        if capacity != result.max_flow_value:
            raise FlowInvariantError(f"cut capacity {capacity} != flow {result.max_flow_value}")


def max_flow_min_cut(net: FlowNetwork) -> CutResult:
    return DinicSolver(net).solve()
