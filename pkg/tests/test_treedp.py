# tests/test_treedp.py
import numpy as np
import pytest

from conftest import cycle_graph, path_graph, star_graph
from core.errors import MncViolationError, NotATreeError, WeightedGraphError
from core.graph import Graph, PvcInstance, bipartition, coverage, gen_random_tree
from core.lagrangian import solve_pvc_mnc
from core.oracle import check_mnc, opt_profile
from core.treedp import ForestDP, RootedTree, max_plus, solve_pvc_tree, tree_profile
from core.treedp.dp import NEG
from shared.schemas import SolveMethod


def random_forest(n: int, seed: int) -> Graph:
    tree = gen_random_tree(n, seed)
    return Graph.from_edges(n, [e for i, e in enumerate(tree.edges) if (i + seed) % 3])


class TestMaxPlus:
    def test_plain_convolution(self):
        out = max_plus(np.array([0, 3], dtype=np.int64), np.array([0, 2, 3], dtype=np.int64))
        assert out.tolist() == [0, 3, 5, 6]

    def test_unreachable_stays_unreachable(self):
        a = np.array([NEG, 0], dtype=np.int64)
        b = np.array([0, NEG], dtype=np.int64)
        out = max_plus(a, b)
        assert out[0] == NEG and out[2] == NEG
        assert out[1] == 0


class TestRootedTree:
    def test_path_rooted_at_one(self):
        tree = RootedTree.from_graph(path_graph(4))
        assert tree.roots == (1,)
        assert tree.parent[1:] == (0, 1, 2, 3)
        assert tree.post_order(1) == [4, 3, 2, 1]

    def test_star_children_ascending(self):
        tree = RootedTree.from_graph(star_graph(4))
        assert tree.children[1] == (2, 3, 4, 5)
        assert tree.is_connected

    def test_forest_roots_are_smallest_ids(self):
        g = Graph.from_edges(6, [(2, 5), (3, 6), (4, 6)])
        tree = RootedTree.from_graph(g)
        assert tree.roots == (1, 2, 3)
        assert not tree.is_connected

    def test_cycle_rejected(self, triangle):
        with pytest.raises(NotATreeError) as exc:
            RootedTree.from_graph(triangle)
        assert exc.value.exit_code == 5


class TestTreeProfile:
    def test_small_paths(self):
        assert tree_profile(path_graph(2)).opt == [0, 1, 1]
        assert tree_profile(path_graph(4)).opt == [0, 2, 3, 3, 3]

    def test_single_vertex(self):
        assert tree_profile(Graph(n=1)).opt == [0, 0]

    def test_unit_spider(self, unit_spider):
        assert tree_profile(unit_spider).opt == [0, 5, 8, 8, 8, 8, 8, 8, 8, 8]

    def test_matches_exhaustive_on_random_trees(self):
        for seed in range(150):
            g = gen_random_tree(2 + seed % 11, seed)
            assert tree_profile(g).opt == opt_profile(g).opt, f"seed={seed}"

    def test_matches_exhaustive_on_forests(self):
        for seed in range(60):
            g = random_forest(3 + seed % 10, seed)
            assert tree_profile(g).opt == opt_profile(g).opt, f"seed={seed}"

    def test_tree_counterexample_is_not_concave(self, tree_counterexample):
        profile = tree_profile(tree_counterexample)
        assert profile.opt == opt_profile(tree_counterexample).opt
        assert check_mnc(profile).first_violation == 2

    def test_concavity_matches_mnc_check(self, record_property):
        concave = 0
        for seed in range(50):
            profile = tree_profile(gen_random_tree(40, seed))
            holds = profile.marginals == sorted(profile.marginals, reverse=True)
            assert check_mnc(profile).holds == holds, f"seed={seed}"
            concave += holds
        record_property("concave_profiles", concave)

    def test_rejects_cycles_and_weights(self, weighted_spider):
        with pytest.raises(NotATreeError):
            tree_profile(cycle_graph(5))
        with pytest.raises(WeightedGraphError):
            tree_profile(weighted_spider)


class TestWitness:
    def test_every_size_attains_profile(self, unit_spider):
        dp = ForestDP(unit_spider)
        best = dp.profile()
        for k in range(unit_spider.n + 1):
            chosen = dp.witness(k)
            assert len(chosen) == k
            assert coverage(unit_spider, chosen) == best[k]

    def test_forest_witness(self):
        for seed in range(30):
            g = random_forest(14, seed)
            dp = ForestDP(g)
            best = dp.profile()
            for k in range(g.n + 1):
                chosen = dp.witness(k)
                assert len(chosen) == k and coverage(g, chosen) == best[k], f"seed={seed}, k={k}"


class TestSolvePvcTree:
    def test_spider(self, unit_spider):
        solution = solve_pvc_tree(PvcInstance(graph=unit_spider, t=6))
        assert solution.size == 2
        assert solution.vertices == frozenset({4, 5})
        assert solution.method is SolveMethod.TREE_DP

    def test_zero_target(self, p4):
        solution = solve_pvc_tree(PvcInstance(graph=p4, t=0))
        assert solution.size == 0 and solution.vertices == frozenset()

    def test_agrees_with_lagrangian_on_large_trees(self):
        for seed in range(8):
            g = gen_random_tree(200, seed)
            lab = bipartition(g)
            concave = check_mnc(tree_profile(g)).holds
            for t in (1, g.m // 3, g.m // 2, g.m):
                inst = PvcInstance(graph=g, t=t)
                exact = solve_pvc_tree(inst).size
                if concave:
                    assert solve_pvc_mnc(inst, lab).size == exact, f"seed={seed}, t={t}"
                    continue
                try:
                    assert solve_pvc_mnc(inst, lab).size >= exact, f"seed={seed}, t={t}"
                except MncViolationError:
                    pass
