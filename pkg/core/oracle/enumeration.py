# core/oracle/enumeration.py
"""Exhaustive subset machinery shared by the oracle entry points."""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.errors import InstanceTooLargeError
from core.graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_N = 24
SUBSET_TABLE_MAX_N = 20


def check_guard(what: str, size: int, limit: Optional[int]) -> None:
    limit = DEFAULT_ORACLE_MAX_N if limit is None else limit
    if size > limit:
        raise InstanceTooLargeError(what, size, limit)


def popcount(x: int) -> int:
    return bin(x).count("1")


def subset_table(g: Graph, max_n: int = SUBSET_TABLE_MAX_N) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(size, weight, coverage) for every subset, indexed by bitmask (bit v-1 = vertex v).

    Unpruned and vectorised; the reference the pruned searches are checked against.
    """
    check_guard("vertex count", g.n, max_n)
    masks = np.arange(1 << g.n, dtype=np.int64)
    sizes = np.zeros(masks.shape, dtype=np.int64)
    weights = np.zeros(masks.shape, dtype=np.int64)
    for v in g.vertices:
        bit = (masks >> (v - 1)) & 1
        sizes += bit
        weights += bit * g.weight(v)
    covered = np.zeros(masks.shape, dtype=np.int64)
    for u, v in g.edges:
        covered += ((masks >> (u - 1)) | (masks >> (v - 1))) & 1
    return sizes, weights, covered


class ProfileSearch:
    """Branch-and-bound for OPT(k), k = 0..k_max, in a single enumeration.

    Vertices are branched in descending degree order. A node is pruned when,
    for every size it could still reach, the current coverage plus the best
    residual gains of the remaining vertices cannot beat the incumbent.
    """

    def __init__(self, g: Graph, k_max: int):
        self.g = g
        self.k_max = k_max
        self.order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
        self.masks = [g.incidence_masks[v] for v in self.order]
        self.best: List[int] = [-1] * (k_max + 1)
        self.nodes = 0

    def run(self) -> List[int]:
        self.best[0] = 0
        self._search(0, 0, 0, 0)
        logger.debug(f"Profile search visited {self.nodes} nodes (n={self.g.n})")
        return list(self.best)

    def _search(self, i: int, covered: int, count: int, value: int) -> None:
        self.nodes += 1
        if value > self.best[count]:
            self.best[count] = value
        room = min(self.k_max - count, len(self.order) - i)
        if room <= 0:
            return

        gains = sorted((popcount(mask & ~covered) for mask in self.masks[i:]), reverse=True)
        promising = False
        bound = value
        for r in range(1, room + 1):
            bound += gains[r - 1]
            if bound > self.best[count + r]:
                promising = True
                break
        if not promising:
            return

        mask = self.masks[i]
        included = covered | mask
        self._search(i + 1, included, count + 1, popcount(included))
        self._search(i + 1, covered, count, value)


class TargetSearch:
    """Lexicographically first ``k``-subset of ``candidates`` covering at least ``t`` edges."""

    def __init__(self, g: Graph, candidates: Sequence[int], t: int):
        self.g = g
        self.candidates = sorted(candidates)
        self.masks = [g.incidence_masks[v] for v in self.candidates]
        self.t = t
        self.nodes = 0

    def find(self, k: int) -> Optional[List[int]]:
        chosen: List[int] = []
        if self._search(0, 0, 0, k, chosen):
            return chosen
        return None

    def _search(self, i: int, covered: int, value: int, k: int, chosen: List[int]) -> bool:
        self.nodes += 1
        need = k - len(chosen)
        if need == 0:
            return value >= self.t
        if len(self.candidates) - i < need:
            return False

        gains = sorted((popcount(mask & ~covered) for mask in self.masks[i:]), reverse=True)
        if value + sum(gains[:need]) < self.t:
            return False

        included = covered | self.masks[i]
        chosen.append(self.candidates[i])
        if self._search(i + 1, included, popcount(included), k, chosen):
            return True
        chosen.pop()
        return self._search(i + 1, covered, value, k, chosen)


def non_dominated_vertices(g: Graph) -> List[int]:
    """Vertices whose incident-edge set is not contained in another vertex's.

    Among vertices with identical incident-edge sets only the smallest id is
    kept. Some minimum-size partial cover always lies inside this set.
    """
    masks = g.incidence_masks
    keep = []
    for u in g.vertices:
        mu = masks[u]
        dominated = False
        for w in g.vertices:
            if w == u:
                continue
            mw = masks[w]
            if mu & ~mw == 0 and (mu != mw or w < u):
                dominated = True
                break
        if not dominated:
            keep.append(u)
    return keep
