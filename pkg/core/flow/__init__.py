from core.flow.dinic import DinicSolver, max_flow_min_cut
from core.flow.network import Arc, CutResult, FlowNetwork

__all__ = ["Arc", "CutResult", "DinicSolver", "FlowNetwork", "max_flow_min_cut"]
