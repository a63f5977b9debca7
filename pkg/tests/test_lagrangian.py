# tests/test_lagrangian.py
from fractions import Fraction

import pytest

import core.lagrangian.solver as solver_module
from conftest import path_graph, star_graph
from core.errors import InvalidParameterError, MncViolationError, WeightedGraphError
from core.graph import (
    Graph,
    PvcInstance,
    bipartition,
    coverage,
    gen_random_bipartite,
    gen_random_tree,
    max_degree,
)
from core.lagrangian import (
    ThresholdParam,
    build_lagrangian_network,
    lagrangian_objective_minimum,
    selected_count_curve,
    solve_lagrangian,
    solve_pvc_mnc,
)
from core.oracle import check_mnc, opt_profile
from shared.schemas import SearchCase, SolveMethod


def solve_at(g: Graph, j: int):
    return solve_lagrangian(g, bipartition(g), ThresholdParam(j))


class TestThresholdParam:
    def test_exact_values(self):
        p = ThresholdParam(2)
        assert p.vertex_cost == 5
        assert p.edge_penalty == 2
        assert p.threshold == Fraction(5, 2)
        assert p.lam == Fraction(2, 5)

    def test_rejects_negative(self):
        with pytest.raises(InvalidParameterError):
            ThresholdParam(-1)


class TestBuildNetwork:
    def test_single_edge(self):
        g = path_graph(2)
        net = build_lagrangian_network(g, bipartition(g), ThresholdParam(0))
        assert net.node_count == 4
        assert [(a.tail, a.head, a.capacity) for a in net.arcs] == [(0, 1, 1), (1, 2, 2), (2, 3, 1)]

    def test_star_center_left(self):
        g = star_graph(3)
        net = build_lagrangian_network(g, bipartition(g), ThresholdParam(0))
        source_arcs = [a for a in net.arcs if a.tail == net.source]
        sink_arcs = [a for a in net.arcs if a.head == net.sink]
        edge_arcs = [a for a in net.arcs if a.tail != net.source and a.head != net.sink]
        assert [(a.head, a.capacity) for a in source_arcs] == [(1, 1)]
        assert sorted((a.tail, a.capacity) for a in sink_arcs) == [(2, 1), (3, 1), (4, 1)]
        assert sorted((a.tail, a.head, a.capacity) for a in edge_arcs) == [(1, 2, 2), (1, 3, 2), (1, 4, 2)]

    def test_edgeless(self):
        g = Graph(n=3)
        net = build_lagrangian_network(g, bipartition(g), ThresholdParam(4))
        assert all(a.capacity == 9 for a in net.arcs)
        solution = solve_at(g, 4)
        assert solution.selected == frozenset() and solution.scaled_objective == 0

    def test_rejects_weights_and_bad_labeling(self, weighted_spider, triangle):
        with pytest.raises(WeightedGraphError):
            build_lagrangian_network(
                weighted_spider, bipartition(weighted_spider), ThresholdParam(0)
            )
        g = path_graph(3)
        with pytest.raises(InvalidParameterError):
            build_lagrangian_network(g, bipartition(path_graph(4)), ThresholdParam(0))


class TestSolveLagrangian:
    def test_path_three(self):
        solution = solve_at(path_graph(3), 1)
        assert solution.selected == frozenset({2})
        assert solution.uncovered == frozenset()
        assert solution.scaled_objective == 3

    def test_single_edge_left_uncovered(self):
        solution = solve_at(path_graph(2), 1)
        assert solution.selected == frozenset()
        assert solution.uncovered == frozenset({(1, 2)})
        assert solution.scaled_objective == 2

    def test_star_at_lowest_threshold(self):
        solution = solve_at(star_graph(3), 0)
        assert solution.selected == frozenset({1})
        assert solution.scaled_objective == 1

    def test_every_edge_covered_or_uncovered(self, mnc_counterexample):
        for j in range(max_degree(mnc_counterexample) + 1):
            solution = solve_at(mnc_counterexample, j)
            for u, v in mnc_counterexample.edges:
                assert u in solution.selected or v in solution.selected or (u, v) in solution.uncovered

    def test_objective_matches_exhaustive_minimum(self):
        for seed in range(200):
            nl = 2 + seed % 7
            g = gen_random_bipartite(nl, 14 - nl, 2 + seed % 4, 55, seed)
            for j in range(max_degree(g) + 1):
                assert solve_at(g, j).scaled_objective == lagrangian_objective_minimum(g, j), f"seed={seed}, j={j}"


class TestSelectedCountCurve:
    def test_single_edge(self):
        g = path_graph(2)
        curve = selected_count_curve(g, bipartition(g))
        assert [(p.j, p.k, p.covered) for p in curve] == [(0, 1, 1), (1, 0, 0)]

    def test_star(self):
        g = star_graph(3)
        assert [p.k for p in selected_count_curve(g, bipartition(g))] == [1, 1, 1, 0]

    def test_edgeless(self):
        g = Graph(n=4)
        assert [p.k for p in selected_count_curve(g, bipartition(g))] == [0]

    def test_counts_marginals_above_threshold(self):
        for seed in range(60):
            nl = 2 + seed % 6
            g = gen_random_bipartite(nl, 12 - nl, 3, 60, seed)
            profile = opt_profile(g)
            concave = check_mnc(profile).holds
            curve = selected_count_curve(g, bipartition(g))
            for point in curve:
                if concave:
                    assert point.k == profile.count_marginals_above(point.j), f"seed={seed}, j={point.j}"
                assert point.covered == profile.opt[point.k]
            ks = [p.k for p in curve]
            covered = [p.covered for p in curve]
            assert ks == sorted(ks, reverse=True)
            assert covered == sorted(covered, reverse=True)


class TestSolvePvcMnc:
    def solve(self, g: Graph, t: int):
        return solve_pvc_mnc(PvcInstance(graph=g, t=t), bipartition(g))

    def test_star_five(self):
        solution = self.solve(star_graph(5), 4)
        assert solution.vertices == frozenset({1})
        assert solution.method is SolveMethod.LAGRANGIAN

    def test_path_four_exact_hit(self, p4):
        solution = self.solve(p4, 3)
        assert solution.size == 2
        assert solution.certificate.case is SearchCase.EXACT_HIT
        assert solution.certificate.j_hit == 0

    def test_unit_spider_bracket(self, unit_spider):
        solution = self.solve(unit_spider, 6)
        assert solution.vertices == frozenset({4, 5})
        cert = solution.certificate
        assert cert.case is SearchCase.BRACKET
        assert (cert.j2, cert.j1, cert.k1, cert.t1, cert.divisor) == (2, 3, 1, 5, 3)

    def test_zero_target_needs_no_solve(self, p4):
        solution = self.solve(p4, 0)
        assert solution.size == 0
        assert solution.certificate.case is SearchCase.TRIVIAL

    def test_full_cover(self, unit_spider):
        solution = self.solve(unit_spider, unit_spider.m)
        assert solution.covered == unit_spider.m
        assert solution.size == opt_profile(unit_spider).min_size_for(unit_spider.m)

    def test_divisor_off_by_one_on_path_five(self):
        solution = self.solve(path_graph(5), 3)
        cert = solution.certificate
        assert solution.size == 2
        assert cert.case is SearchCase.BRACKET
        assert (cert.j2, cert.k1, cert.t1, cert.divisor) == (1, 0, 0, 2)
        assert cert.printed_divisor_size == 3

    def test_witness_is_valid(self, unit_spider):
        for t in range(unit_spider.m + 1):
            solution = self.solve(unit_spider, t)
            assert coverage(unit_spider, solution.vertices) == solution.covered >= t
            assert len(solution.vertices) == solution.size

    def test_failed_witness_raises(self, monkeypatch, unit_spider):
        monkeypatch.setattr(solver_module, "_peel", lambda *args: None)
        monkeypatch.setattr(solver_module, "_augment", lambda *args: None)
        with pytest.raises(MncViolationError) as exc:
            self.solve(unit_spider, 6)
        assert exc.value.exit_code == 4
        assert exc.value.details["j2"] == 2

    def test_oversized_bracket_raises(self):
        g = gen_random_tree(40, 38)
        with pytest.raises(MncViolationError) as exc:
            self.solve(g, 38)
        assert exc.value.exit_code == 4
        assert exc.value.details["size"] > exc.value.details["k1"]

    def test_non_concave_tree_never_undershoots(self, tree_counterexample):
        profile = opt_profile(tree_counterexample)
        for t in range(1, tree_counterexample.m + 1):
            try:
                solution = self.solve(tree_counterexample, t)
            except MncViolationError:
                continue
            assert solution.size >= profile.min_size_for(t), f"t={t}"
            assert len(solution.vertices) == solution.size
            assert coverage(tree_counterexample, solution.vertices) >= t

    def test_non_concave_tree_exact_at_t4(self, tree_counterexample):
        assert self.solve(tree_counterexample, 4).size == 2

    def test_augment_fallback(self, monkeypatch, unit_spider):
        monkeypatch.setattr(solver_module, "_peel", lambda *args: None)
        solution = self.solve(unit_spider, 6)
        assert solution.size == 2
        assert solution.certificate.witness_source == "augment"

    def test_rejects_mismatched_labeling(self, p4):
        with pytest.raises(InvalidParameterError):
            solve_pvc_mnc(PvcInstance(graph=p4, t=1), bipartition(path_graph(3)))
