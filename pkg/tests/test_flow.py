# tests/test_flow.py
import random

import networkx as nx
import pytest

from core.errors import InvalidParameterError
from core.flow import Arc, FlowNetwork, max_flow_min_cut


def random_network(seed: int) -> FlowNetwork:
    rng = random.Random(seed)
    node_count = rng.randint(2, 9)
    arcs = []
    for _ in range(rng.randint(0, 3 * node_count)):
        tail, head = rng.sample(range(node_count), 2)
        arcs.append(Arc(tail, head, rng.randint(0, 7)))
    return FlowNetwork(node_count=node_count, source=0, sink=node_count - 1, arcs=tuple(arcs))


def networkx_max_flow(net: FlowNetwork) -> int:
    g = nx.DiGraph()
    g.add_nodes_from(range(net.node_count))
    for arc in net.arcs:
        if g.has_edge(arc.tail, arc.head):
            g[arc.tail][arc.head]["capacity"] += arc.capacity
        else:
            g.add_edge(arc.tail, arc.head, capacity=arc.capacity)
    return nx.maximum_flow_value(g, net.source, net.sink)


class TestMaxFlowMinCut:
    def test_single_arc(self):
        cut = max_flow_min_cut(FlowNetwork(node_count=2, source=0, sink=1, arcs=(Arc(0, 1, 5),)))
        assert cut.max_flow_value == 5
        assert cut.source_side == frozenset({0})

    def test_bottleneck(self):
        net = FlowNetwork(node_count=3, source=0, sink=2, arcs=(Arc(0, 1, 1), Arc(1, 2, 2)))
        cut = max_flow_min_cut(net)
        assert cut.max_flow_value == 1
        assert cut.source_side == frozenset({0})
        assert cut.arc_flows == (1, 1)

    def test_lagrangian_shape_on_single_edge(self):
        # s -> u (1), u -> v (2), v -> t (1): the cheapest cut costs 1
        net = FlowNetwork(
            node_count=4, source=0, sink=3, arcs=(Arc(0, 1, 1), Arc(1, 2, 2), Arc(2, 3, 1))
        )
        cut = max_flow_min_cut(net)
        assert cut.max_flow_value == 1
        assert cut.source_side == frozenset({0})

    def test_disconnected_terminals(self):
        net = FlowNetwork(node_count=4, source=0, sink=3, arcs=(Arc(0, 1, 4), Arc(2, 3, 4)))
        cut = max_flow_min_cut(net)
        assert cut.max_flow_value == 0
        assert cut.source_side == frozenset({0, 1})

    def test_canonical_cut_is_source_reachable_side(self):
        # two minimum cuts of value 2; the residual-reachable one is {s, a}
        net = FlowNetwork(
            node_count=3, source=0, sink=2, arcs=(Arc(0, 1, 2), Arc(1, 2, 2))
        )
        assert max_flow_min_cut(net).source_side == frozenset({0})
        net = FlowNetwork(
            node_count=3, source=0, sink=2, arcs=(Arc(0, 1, 3), Arc(1, 2, 2))
        )
        assert max_flow_min_cut(net).source_side == frozenset({0, 1})

    def test_antiparallel_and_parallel_arcs(self):
        net = FlowNetwork(
            node_count=3,
            source=0,
            sink=2,
            arcs=(Arc(0, 1, 2), Arc(0, 1, 3), Arc(1, 0, 4), Arc(1, 2, 10)),
        )
        assert max_flow_min_cut(net).max_flow_value == 5

    def test_matches_networkx_on_random_networks(self):
        for seed in range(100):
            net = random_network(seed)
            cut = max_flow_min_cut(net)
            assert cut.max_flow_value == networkx_max_flow(net), f"seed={seed}"
            assert cut.cut_capacity(net) == cut.max_flow_value
            assert net.source in cut.source_side and net.sink not in cut.source_side

    def test_deterministic(self):
        net = random_network(42)
        assert max_flow_min_cut(net) == max_flow_min_cut(net)


class TestFlowNetworkValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(node_count=2, source=0, sink=0),
            dict(node_count=2, source=0, sink=2),
            dict(node_count=2, source=0, sink=1, arcs=(Arc(0, 5, 1),)),
            dict(node_count=2, source=0, sink=1, arcs=(Arc(0, 1, -1),)),
        ],
    )
    def test_rejects_bad_networks(self, kwargs):
        with pytest.raises(InvalidParameterError):
            FlowNetwork(**kwargs)
