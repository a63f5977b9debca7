# core/oracle/profile.py
import logging
from typing import List, Optional

import numpy as np

from core.errors import InvalidParameterError
from core.graph import Graph, require_unit_weights
from core.oracle.enumeration import ProfileSearch, check_guard, popcount, subset_table
from shared.schemas import CoverageProfile, MncReport

logger = logging.getLogger(__name__)


def opt_profile(g: Graph, k_max: Optional[int] = None, *, max_n: Optional[int] = None) -> CoverageProfile:
    """OPT(k) for k = 0..k_max by pruned subset enumeration."""
    require_unit_weights(g, "opt_profile")
    check_guard("vertex count", g.n, max_n)
    k_max = g.n if k_max is None else k_max
    if not 0 <= k_max <= g.n:
        raise InvalidParameterError(f"k_max must lie in [0, {g.n}], got {k_max}")

    opt = ProfileSearch(g, k_max).run()
    return CoverageProfile(opt=opt)


def enumerate_profile(g: Graph, k_max: Optional[int] = None, *, weighted: bool = False) -> CoverageProfile:
    """Unpruned profile straight from the subset table (reference implementation)."""
    sizes, weights, covered = subset_table(g)
    index = weights if weighted else sizes
    top = int(index.max()) if k_max is None else k_max

    best = np.full(top + 1, -1, dtype=np.int64)
    in_range = index <= top
    np.maximum.at(best, index[in_range], covered[in_range])
    if weighted:
        best = np.maximum.accumulate(best)
    return CoverageProfile(opt=[int(x) for x in best], weighted=weighted)


def weighted_profile(
    g: Graph,
    budget_max: Optional[int] = None,
    *,
    max_n: Optional[int] = None,
) -> CoverageProfile:
    """OPT(k) = best coverage of a vertex set of total weight at most k, k = 0..budget_max."""
    check_guard("vertex count", g.n, max_n)
    budget_max = g.total_weight if budget_max is None else budget_max
    if budget_max < 0:
        raise InvalidParameterError(f"budget_max must be nonnegative, got {budget_max}")

    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    masks = [g.incidence_masks[v] for v in order]
    suffix_union = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | masks[i]
    best = [-1] * (budget_max + 1)
    best[0] = 0

    def prefix_best(weight: int) -> int:
        return max(best[: weight + 1])

    def search(i: int, covered: int, weight: int, value: int) -> None:
        if value > best[weight]:
            best[weight] = value
        if i == len(order):
            return
        if value + popcount(suffix_union[i] & ~covered) <= prefix_best(weight):
            return
        w = g.weight(order[i])
        if weight + w <= budget_max:
            included = covered | masks[i]
            search(i + 1, included, weight + w, popcount(included))
        search(i + 1, covered, weight, value)

    search(0, 0, 0, 0)

    opt: List[int] = []
    running = 0
    for value in best:
        running = max(running, value)
        opt.append(running)
    return CoverageProfile(opt=opt, weighted=True)


def check_mnc(p: CoverageProfile) -> MncReport:
    """Concavity check: report the smallest k with a_(k+1) > a_k."""
    marginals = p.marginals
    for k in range(1, len(marginals)):
        if marginals[k] > marginals[k - 1]:
            logger.debug(f"MNC violated at k={k}: a_{k}={marginals[k - 1]} < a_{k + 1}={marginals[k]}")
            return MncReport(holds=False, first_violation=k)
    return MncReport(holds=True)
