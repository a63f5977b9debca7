# core/treedp/dp.py
"""Exact coverage profile of a forest by a knapsack dynamic program.

For every node v and flag s (v selected or not) the table holds, per count
c of selected vertices in v's subtree, the most edges covered inside that
subtree. Children are folded in one at a time by a max-plus merge.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

import numpy as np

from core.graph import Graph, PvcInstance, require_unit_weights
from core.treedp.rooted import RootedTree
from shared.schemas import CoverageProfile, PvcSolution, SolveMethod

logger = logging.getLogger(__name__)

NEG = np.iinfo(np.int64).min // 4


def max_plus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """out[i] = max over x + y = i of a[x] + b[y]; NEG marks unreachable counts."""
    out = np.full(len(a) + len(b) - 1, NEG, dtype=np.int64)
    reachable = b > NEG
    for x, value in enumerate(a):
        if value <= NEG:
            continue
        segment = out[x : x + len(b)]
        np.maximum(segment, np.where(reachable, value + b, NEG), out=segment)
    return out


@dataclass
class _NodeTables:
    # stages[i][s] is the table after merging the first i children
    stages: List[Tuple[np.ndarray, np.ndarray]]

    @property
    def final(self) -> Tuple[np.ndarray, np.ndarray]:
        return self.stages[-1]


class ForestDP:
    def __init__(self, g: Graph):
        require_unit_weights(g, "the tree DP")
        self.g = g
        self.tree = RootedTree.from_graph(g)
        self.tables: Dict[int, _NodeTables] = {}
        self.component_best: Dict[int, np.ndarray] = {}
        for root in self.tree.roots:
            self._solve_component(root)

    def _solve_component(self, root: int) -> None:
        for v in self.tree.post_order(root):
            unselected = np.array([0, NEG], dtype=np.int64)
            selected = np.array([NEG, 0], dtype=np.int64)
            stages = [(unselected, selected)]
            for u in self.tree.children[v]:
                child_off, child_on = self.tables[u].final
                # edge (v, u) is covered when either endpoint is selected
                edge_if_off = np.maximum(child_off, np.where(child_on > NEG, child_on + 1, NEG))
                edge_if_on = np.maximum(
                    np.where(child_off > NEG, child_off + 1, NEG),
                    np.where(child_on > NEG, child_on + 1, NEG),
                )
                unselected = max_plus(unselected, edge_if_off)
                selected = max_plus(selected, edge_if_on)
                stages.append((unselected, selected))
            self.tables[v] = _NodeTables(stages=stages)
        off, on = self.tables[root].final
        self.component_best[root] = np.maximum(off, on)

    def profile(self) -> np.ndarray:
        best = np.zeros(1, dtype=np.int64)
        for root in self.tree.roots:
            best = max_plus(best, self.component_best[root])
        return best

    def witness(self, k: int) -> Set[int]:
        """A set of exactly k vertices attaining the profile value at k."""
        roots = self.tree.roots
        # prefix[i] is the merged profile of the first i components
        prefix = [np.zeros(1, dtype=np.int64)]
        for root in roots:
            prefix.append(max_plus(prefix[-1], self.component_best[root]))

        chosen: Set[int] = set()
        remaining = k
        for i in range(len(roots), 0, -1):
            target = prefix[i][remaining]
            best = self.component_best[roots[i - 1]]
            earlier = prefix[i - 1]
            b = next(
                b
                for b in range(len(best))
                if 0 <= remaining - b < len(earlier) and earlier[remaining - b] + best[b] == target
            )
            self._backtrack_component(roots[i - 1], b, chosen)
            remaining -= b
        return chosen

    def _backtrack_component(self, root: int, count: int, chosen: Set[int]) -> None:
        off, on = self.tables[root].final
        flag = 0 if off[count] >= on[count] else 1
        stack = [(root, flag, count)]
        while stack:
            v, s, c = stack.pop()
            if s:
                chosen.add(v)
            stages = self.tables[v].stages
            children = self.tree.children[v]
            for i in range(len(children), 0, -1):
                u = children[i - 1]
                target = stages[i][s][c]
                before = stages[i - 1][s]
                child_off, child_on = self.tables[u].final
                split = self._split(target, before, child_off, child_on, s, c)
                child_flag, b = split
                stack.append((u, child_flag, b))
                c -= b

    @staticmethod
    def _split(target, before, child_off, child_on, s: int, c: int) -> Tuple[int, int]:
        # not-selected child first, then the fewest vertices in the later child
        for child_flag, table in ((0, child_off), (1, child_on)):
            bonus = 1 if (s or child_flag) else 0
            for b in range(len(table)):
                a = c - b
                if a < 0:
                    break
                if a >= len(before) or before[a] <= NEG or table[b] <= NEG:
                    continue
                if before[a] + table[b] + bonus == target:
                    return child_flag, b
        raise AssertionError(f"no split reproduces table value {target}")


def tree_profile(g: Graph) -> CoverageProfile:
    """OPT(k) for k = 0..n on a tree or forest."""
    dp = ForestDP(g)
    opt = [int(x) for x in dp.profile()]
    logger.debug(f"Tree DP profile over {len(dp.tree.roots)} component(s): {opt}")
    return CoverageProfile(opt=opt)


def solve_pvc_tree(inst: PvcInstance) -> PvcSolution:
    dp = ForestDP(inst.graph)
    opt = dp.profile()
    size = next(k for k, value in enumerate(opt) if value >= inst.t)
    vertices = frozenset(dp.witness(size))
    return PvcSolution(
        vertices=vertices,
        size=size,
        covered=int(opt[size]),
        t=inst.t,
        method=SolveMethod.TREE_DP,
    )
