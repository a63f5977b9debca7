# core/lagrangian/solver.py
"""Exact PVC on bipartite graphs with the MNC property via Lagrangian min-cuts."""
import logging
from typing import Dict, FrozenSet, List, Optional

import numpy as np

from core.errors import FlowInvariantError, InvalidParameterError, MncViolationError
from core.flow import max_flow_min_cut
from core.graph import BipartiteLabeling, Graph, PvcInstance, Side, coverage, max_degree
from core.lagrangian.network import build_lagrangian_network
from core.lagrangian.threshold import ThresholdParam
from core.oracle import subset_table
from shared.schemas import (
    CurvePoint,
    LagrangianSolution,
    PvcSolution,
    SearchCase,
    SearchCertificate,
    SolveMethod,
)

logger = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def solve_lagrangian(g: Graph, lab: BipartiteLabeling, p: ThresholdParam) -> LagrangianSolution:
    """Minimise (2j+1)|S| + 2|uncovered(S)| with one max-flow.

    A Left vertex is selected iff it lies outside the source side of the
    canonical minimum cut; a Right vertex iff it lies inside it.
    """
    net = build_lagrangian_network(g, lab, p)
    cut = max_flow_min_cut(net)

    selected = frozenset(
        v
        for v in g.vertices
        if (lab.side(v) is Side.LEFT) != (v in cut.source_side)
    )
    uncovered = frozenset(e for e in g.edges if e[0] not in selected and e[1] not in selected)
    expected = p.vertex_cost * len(selected) + p.edge_penalty * len(uncovered)
    if cut.max_flow_value != expected:
        raise FlowInvariantError(
            f"cut value {cut.max_flow_value} does not match decoded objective {expected} at j={p.j}"
        )

    return LagrangianSolution(
        j=p.j,
        selected=selected,
        uncovered=uncovered,
        k=len(selected),
        scaled_objective=cut.max_flow_value,
    )


def selected_count_curve(g: Graph, lab: BipartiteLabeling) -> List[CurvePoint]:
    """(j, k_j, covered_j) for j = 0..max degree."""
    points = []
    for j in range(max_degree(g) + 1):
        sol = solve_lagrangian(g, lab, ThresholdParam(j))
        points.append(CurvePoint(j=j, k=sol.k, covered=g.m - len(sol.uncovered)))
    return points


def lagrangian_objective_minimum(g: Graph, j: int) -> int:
    """Minimum scaled objective over all subsets, by enumeration."""
    p = ThresholdParam(j)
    sizes, _, covered = subset_table(g)
    values = p.vertex_cost * sizes + p.edge_penalty * (g.m - covered)
    return int(np.min(values))


class _ThresholdSearch:
    """Memoised Lagrangian solves over j for one instance."""

    def __init__(self, g: Graph, lab: BipartiteLabeling):
        self.g = g
        self.lab = lab
        self.cache: Dict[int, LagrangianSolution] = {}

    def solve(self, j: int) -> LagrangianSolution:
        if j not in self.cache:
            self.cache[j] = solve_lagrangian(self.g, self.lab, ThresholdParam(j))
            logger.debug(f"j={j}: k={self.cache[j].k}, covered={self.covered(j)}")
        return self.cache[j]

    def covered(self, j: int) -> int:
        return self.g.m - len(self.solve(j).uncovered)

    @property
    def solves(self) -> int:
        return len(self.cache)


def _peel(g: Graph, start: FrozenSet[int], size: int, t: int) -> Optional[FrozenSet[int]]:
    """Drop minimum-loss vertices (ties: largest id) until ``size`` remain."""
    chosen = set(start)
    while len(chosen) > size:
        def loss(v: int) -> int:
            return sum(1 for w in g.adjacency[v] if w not in chosen)

        victim = min(chosen, key=lambda v: (loss(v), -v))
        chosen.remove(victim)
    if coverage(g, chosen) >= t:
        return frozenset(chosen)
    return None


def _augment(g: Graph, start: FrozenSet[int], size: int, t: int) -> Optional[FrozenSet[int]]:
    """Add maximum-gain vertices (ties: smallest id) until ``size`` are chosen."""
    chosen = set(start)
    while len(chosen) < size:
        def gain(v: int) -> int:
            return sum(1 for w in g.adjacency[v] if w not in chosen)

        best = max((v for v in g.vertices if v not in chosen), key=lambda v: (gain(v), -v))
        chosen.add(best)
    if coverage(g, chosen) >= t:
        return frozenset(chosen)
    return None


def solve_pvc_mnc(inst: PvcInstance, lab: BipartiteLabeling) -> PvcSolution:
    """Minimum-size partial cover of a bipartite MNC instance.

    Binary search over j in [0, max degree] for the largest threshold still
    covering t edges. An exact hit is optimal outright. Otherwise the
    adjacent thresholds j2 = j1 - 1 bracket t, every marginal between them
    equals j2 + 1, and the optimum size is k1 + ceil((t - t1) / (j2 + 1)).

    The bracket formula is exact only when the coverage profile is concave,
    which neither trees nor max-degree-3 bipartite graphs guarantee. On other
    inputs the returned witness is still feasible but may not be minimum.
    Raises MncViolationError when the bracket size is outside [k1, k2] or no
    witness of that size exists.
    """
    g, t = inst.graph, inst.t
    if not lab.is_valid_for(g):
        raise InvalidParameterError("labeling is not a valid bipartition of the graph")

    if t == 0:
        return PvcSolution(
            vertices=frozenset(),
            size=0,
            covered=0,
            t=0,
            method=SolveMethod.LAGRANGIAN,
            certificate=SearchCertificate(case=SearchCase.TRIVIAL),
        )

    search = _ThresholdSearch(g, lab)
    lo, hi = 0, max_degree(g)
    # covered(0) == m >= t and covered(max degree) == 0 < t
    hit: Optional[int] = lo if search.covered(lo) == t else None
    if hit is None and search.covered(hi) >= t:
        raise FlowInvariantError(f"covered at j={hi} is {search.covered(hi)}, expected 0")

    while hit is None and hi - lo > 1:
        mid = (lo + hi) // 2
        c = search.covered(mid)
        if c == t:
            hit = mid
        elif c > t:
            lo = mid
        else:
            hi = mid

    if hit is not None:
        sol = search.solve(hit)
        logger.info(f"Exact hit at j={hit}: size {sol.k} after {search.solves} solves")
        return PvcSolution(
            vertices=sol.selected,
            size=sol.k,
            covered=search.covered(hit),
            t=t,
            method=SolveMethod.LAGRANGIAN,
            certificate=SearchCertificate(
                case=SearchCase.EXACT_HIT, solves=search.solves, j_hit=hit, k2=sol.k, t2=t
            ),
        )

    j2, j1 = lo, hi
    low_sol, high_sol = search.solve(j1), search.solve(j2)
    k1, t1 = low_sol.k, search.covered(j1)
    k2, t2 = high_sol.k, search.covered(j2)
    divisor = j2 + 1
    k_star = k1 + _ceil_div(t - t1, divisor)
    printed = k1 + _ceil_div(t - t1, j2) if j2 > 0 else None

    details = {"j1": j1, "j2": j2, "k1": k1, "t1": t1, "k2": k2, "t2": t2, "size": k_star}
    if not k1 <= k_star <= k2:
        raise MncViolationError(
            f"bracket size {k_star} lies outside [{k1}, {k2}]; the coverage profile is not concave",
            details=details,
        )

    witness, source = _peel(g, high_sol.selected, k_star, t), "peel"
    if witness is None:
        witness, source = _augment(g, low_sol.selected, k_star, t), "augment"
    if witness is None or len(witness) != k_star:
        raise MncViolationError(
            f"no set of size {k_star} covers t={t} edges between j={j2} and j={j1}",
            details=details,
        )

    logger.info(
        f"Bracket j2={j2}, j1={j1}: size {k_star} via {source} after {search.solves} solves"
    )
    return PvcSolution(
        vertices=witness,
        size=k_star,
        covered=coverage(g, witness),
        t=t,
        method=SolveMethod.LAGRANGIAN,
        certificate=SearchCertificate(
            case=SearchCase.BRACKET,
            solves=search.solves,
            j1=j1,
            j2=j2,
            k1=k1,
            t1=t1,
            k2=k2,
            t2=t2,
            divisor=divisor,
            printed_divisor_size=printed,
            witness_source=source,
        ),
    )
