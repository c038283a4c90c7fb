import pytest

from satforge.construction import build_construction
from satforge.graph import Graph
from satforge.saturation import (
    BookkeepingError,
    PreconditionError,
    check_saturated,
    degree_sum_check,
    good_roots,
    is_saturated_fast,
    lemma31_check,
    reduce_t2,
    t_sets,
    theta_classes,
)
from satforge.search import are_isomorphic


class TestCheckSaturated:
    def test_star_is_triangle_saturated(self):
        rep = check_saturated(Graph.star(6), 3)
        assert rep.saturated
        assert len(rep.witnesses) == len(Graph.star(6).non_edges())
        for (u, v), cyc in rep.witnesses.items():
            assert cyc.length == 3
            assert {u, v} <= set(cyc.vertices)

    def test_cycle_is_not_free(self):
        rep = check_saturated(Graph.cycle(6), 6)
        assert rep.verdict == "not-free"
        assert rep.free_violation.length == 6

    def test_path_misses_witness(self):
        rep = check_saturated(Graph.path(6), 6)
        assert rep.verdict == "missing-witness"
        assert rep.missing is not None

    def test_complete_graph_vacuous(self):
        assert check_saturated(Graph.complete(5), 6).saturated

    def test_witness_cycles_validate(self):
        g, _ = build_construction(12)
        rep = check_saturated(g, 6)
        assert rep.saturated
        for cyc in rep.witnesses.values():
            gplus = g.with_edge(cyc.vertices[0], cyc.vertices[-1])
            cyc.validate(gplus)

    def test_to_lines_format(self):
        rep = check_saturated(Graph.star(4), 3)
        lines = rep.to_lines()
        assert len(lines) == 3
        assert all(":" in line for line in lines)

    def test_k_below_three_rejected(self):
        with pytest.raises(PreconditionError):
            check_saturated(Graph.path(3), 2)

    def test_fast_path_agrees(self, rng):
        from tests.conftest import random_connected_graph

        for _ in range(30):
            g = random_connected_graph(rng, n_max=8)
            for k in (3, 4, 5, 6):
                assert is_saturated_fast(g, k) == check_saturated(g, k).saturated


class TestStructureSets:
    def test_family_has_empty_t2_when_divisible(self):
        g, _ = build_construction(12)
        ts = t_sets(g)
        assert ts.t2 == frozenset()
        # y1 is the degree-2 triangle vertex with no degree-2 neighbor
        assert len(ts.t1) == 1

    def test_epsilon_two_gives_t2_pair(self):
        g, spec = build_construction(11)
        ts = t_sets(g)
        assert ts.t2 == frozenset({spec.labels["z1"], spec.labels["z2"]})

    def test_reduce_t2_recovers_core_family(self):
        g11, _ = build_construction(11)
        g9, _ = build_construction(9)
        assert are_isomorphic(reduce_t2(g11), g9)

    def test_reduce_t2_parity_guard(self):
        # one pendant triangle vertex: |T_2| odd, accounting must fail
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (3, 4)])
        if t_sets(g).t2:
            with pytest.raises(BookkeepingError):
                reduce_t2(g)

    def test_good_roots_are_triangle_free_degree_two(self):
        g, spec = build_construction(12)
        roots = good_roots(g)
        assert spec.labels["b0"] in roots
        assert spec.labels["b1"] in roots
        assert spec.labels["y1"] not in roots  # lies in a triangle

    def test_theta_partition(self):
        g, spec = build_construction(9)
        th = theta_classes(g)
        lab = spec.labels
        assert th.classes[lab["y3"]] == 5
        assert th.classes[lab["y4"]] == 5
        for name in ("a0", "b0", "c0"):
            assert th.classes[lab[name]] == 2
        assert set(th.classes.values()) <= {1, 2, 3, 4, 5}

    def test_theta_cycle_membership(self):
        g = Graph.cycle(5)
        th = theta_classes(g)
        assert all(c == 2 for c in th.classes.values())
        g4 = Graph.cycle(4)
        assert all(c == 3 for c in theta_classes(g4).classes.values())


class TestDegreeSum:
    def test_family_satisfies_bound(self):
        for n in (9, 12, 15):
            g, _ = build_construction(n)
            assert degree_sum_check(g)

    def test_min_degree_precondition(self):
        with pytest.raises(PreconditionError):
            degree_sum_check(Graph.star(5))


class TestLemma31:
    def test_requires_non_edge(self):
        g = Graph.cycle(5)
        with pytest.raises(PreconditionError):
            lemma31_check(g, (0, 1), 2)

    def test_family_non_edges(self):
        g, spec = build_construction(9)
        lab = spec.labels
        for e in [(lab["a0"], lab["c0"]), (lab["y3"], lab["y4"])]:
            for p in (2, 3):
                assert lemma31_check(g, e, p) in (True, False)

    def test_vacuous_when_no_cycle_closes(self):
        g = Graph.path(4)
        assert lemma31_check(g, (0, 3), 2)
