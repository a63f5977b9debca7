# core/oracle/bruteforce.py
import logging
from typing import List, Optional

from core.graph import Graph, PvcInstance, coverage, require_unit_weights
from core.oracle.enumeration import TargetSearch, check_guard, non_dominated_vertices
from shared.schemas import PvcSolution, SolveMethod

logger = logging.getLogger(__name__)


def solve_pvc_bruteforce(
    inst: PvcInstance,
    *,
    max_n: Optional[int] = None,
    prune_dominated: bool = False,
) -> PvcSolution:
    """Minimum-cardinality set covering at least t edges, by exhaustive search.

    Among minimum-size optima the lexicographically smallest sorted id tuple
    is returned. With ``prune_dominated`` the search branches only on
    non-dominated vertices; the size is unchanged, the tie-break then ranges
    over those vertices, and the size guard counts them instead of n.
    """
    g, t = inst.graph, inst.t
    require_unit_weights(g, "solve_pvc_bruteforce")

    candidates = non_dominated_vertices(g) if prune_dominated else list(g.vertices)
    check_guard("search vertex count", len(candidates), max_n)

    if t == 0:
        return PvcSolution(vertices=frozenset(), size=0, covered=0, t=0, method=SolveMethod.BRUTE)

    degrees = sorted((g.degree(v) for v in candidates), reverse=True)
    k, reach = 0, 0
    while reach < t:
        reach += degrees[k]
        k += 1

    search = TargetSearch(g, candidates, t)
    while k <= len(candidates):
        found = search.find(k)
        if found is not None:
            logger.debug(f"Brute force: size {k} for t={t} after {search.nodes} nodes")
            return PvcSolution(
                vertices=frozenset(found),
                size=k,
                covered=coverage(g, found),
                t=t,
                method=SolveMethod.BRUTE,
            )
        k += 1

    raise AssertionError("candidate set always covers every edge")


def find_partial_cover(
    g: Graph,
    t: int,
    k: int,
    *,
    max_n: Optional[int] = None,
    prune_dominated: bool = True,
) -> Optional[List[int]]:
    """Lexicographically first set of at most ``k`` vertices covering ``t`` edges, or None."""
    require_unit_weights(g, "find_partial_cover")
    if k < 0:
        return None
    if t <= 0:
        return []

    candidates = non_dominated_vertices(g) if prune_dominated else list(g.vertices)
    check_guard("search vertex count", len(candidates), max_n)
    # coverage only grows with the set, so size exactly min(k, |candidates|) suffices
    search = TargetSearch(g, candidates, t)
    found = search.find(min(k, len(candidates)))
    logger.debug(f"Feasibility at k={k}, t={t}: {found is not None} after {search.nodes} nodes")
    return found
