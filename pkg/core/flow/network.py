# core/flow/network.py
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from core.errors import InvalidParameterError


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    capacity: int


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network on nodes 0..node_count-1 with integer capacities."""

    node_count: int
    source: int
    sink: int
    arcs: Tuple[Arc, ...] = ()

    def __post_init__(self):
        if self.source == self.sink:
            raise InvalidParameterError("source and sink must differ")
        for node in (self.source, self.sink):
            if not 0 <= node < self.node_count:
                raise InvalidParameterError(f"terminal {node} outside [0, {self.node_count})")
        for arc in self.arcs:
            if not (0 <= arc.tail < self.node_count and 0 <= arc.head < self.node_count):
                raise InvalidParameterError(f"arc {arc} references an unknown node")
            if arc.capacity < 0:
                raise InvalidParameterError(f"arc {arc} has negative capacity")


@dataclass(frozen=True)
class CutResult:
    max_flow_value: int
    source_side: FrozenSet[int]
    arc_flows: Tuple[int, ...] = ()

    def cut_capacity(self, net: FlowNetwork) -> int:
        return sum(
            arc.capacity
            for arc in net.arcs
            if arc.tail in self.source_side and arc.head not in self.source_side
        )
