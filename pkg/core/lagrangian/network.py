# core/lagrangian/network.py
from core.errors import InvalidParameterError
from core.flow import Arc, FlowNetwork
from core.graph import BipartiteLabeling, Graph, Side, require_unit_weights
from core.lagrangian.threshold import ThresholdParam

SOURCE = 0


def sink_node(g: Graph) -> int:
    return g.n + 1


def build_lagrangian_network(g: Graph, lab: BipartiteLabeling, p: ThresholdParam) -> FlowNetwork:
    """Min-cut form of the penalised program.

    Node 0 is the source, vertex v is node v, node n+1 is the sink. Arcs:
    s->u (cost 2j+1) per Left vertex, u->v (penalty 2) per edge oriented
    Left to Right, v->t (cost 2j+1) per Right vertex. Cutting a vertex arc
    selects the vertex; cutting an edge arc leaves the edge uncovered.
    """
    require_unit_weights(g, "the Lagrangian network")
    if not lab.is_valid_for(g):
        raise InvalidParameterError("labeling is not a valid bipartition of the graph")

    sink = sink_node(g)
    arcs = [Arc(SOURCE, u, p.vertex_cost) for u in g.vertices if lab.side(u) is Side.LEFT]
    for u, v in g.edges:
        left, right = (u, v) if lab.side(u) is Side.LEFT else (v, u)
        arcs.append(Arc(left, right, p.edge_penalty))
    arcs.extend(Arc(v, sink, p.vertex_cost) for v in g.vertices if lab.side(v) is Side.RIGHT)
    return FlowNetwork(node_count=g.n + 2, source=SOURCE, sink=sink, arcs=tuple(arcs))
