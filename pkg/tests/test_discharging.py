from fractions import Fraction as F

import pytest

from satforge.construction import build_construction
from satforge.discharging import (
    audit,
    charge_identity_holds,
    choose_root,
    classify,
    initial_charge,
    level_charges,
    render_stage_table,
    stage_one,
    stage_two,
)
from satforge.graph import Graph
from satforge.saturation import PreconditionError
from tests.conftest import random_connected_graph


def _pipeline(g):
    rc = choose_root(g)
    ledger = initial_charge(g, rc)
    classify(ledger)
    stage_one(ledger)
    stage_two(ledger)
    return rc, ledger


class TestRootChoice:
    def test_good_root_preferred_by_class(self):
        g, spec = build_construction(9)
        rc = choose_root(g)
        # pendant-path roots (class 2) beat the chorded-cycle roots (class 5)
        assert rc.alpha == spec.labels["a0"]
        assert rc.delta == 2
        assert "class-2" in rc.rationale

    def test_degree_one_branch(self):
        g, spec = build_construction(10)  # epsilon = 1: z1 is a pendant
        rc = choose_root(g)
        assert rc.delta == 1
        assert g.degree(rc.alpha) == 1

    def test_high_min_degree_rejected(self):
        with pytest.raises(PreconditionError):
            choose_root(Graph.complete(5))


class TestInitialCharge:
    def test_identity_on_random_roots(self, rng):
        checked = 0
        while checked < 60:
            g = random_connected_graph(rng, n_max=10)
            root = rng.randrange(g.n)
            if max(g.distances_from(root)) > 5:
                continue
            assert charge_identity_holds(g, root)
            checked += 1

    def test_v1_sum_good_root(self):
        g, _ = build_construction(9)
        rc, ledger = _pipeline(g)
        v1 = ledger.level_set(1)
        assert sum((ledger.charge("g", v) for v in v1), F(0)) == F(-2)

    def test_v1_sum_pendant_root(self):
        g, _ = build_construction(13)  # epsilon = 1
        rc, ledger = _pipeline(g)
        assert rc.delta == 1
        v1 = ledger.level_set(1)
        assert sum((ledger.charge("g", v) for v in v1), F(0)) == F(-5, 3)

    def test_classify_grid_guard(self):
        # a 7/6 gap value cannot appear; guard exercised via a crafted ledger
        g = Graph.cycle(7)
        ledger = level_charges(g, 0)
        classify(ledger)  # cycle charges sit exactly on the grid
        assert set(ledger.classes.values()) <= {"-1", "-2", "1", "2"}


class TestFrozenFixture:
    """Hand-computed ledger for the 9-vertex core, rooted at the pendant-path
    end a0 (id 6)."""

    G = {0: F(-5, 6), 1: F(1, 6), 2: F(1, 6), 3: F(1, 6), 4: F(2, 3),
         5: F(2, 3), 6: F(-1, 3), 7: F(-5, 6), 8: F(1, 6)}
    F7 = {0: F(-5, 6), 1: F(5, 6), 2: F(1, 6), 3: F(5, 6), 4: F(0),
          5: F(0), 6: F(-1, 3), 7: F(-5, 6), 8: F(1, 6)}

    def test_levels_and_charges(self):
        g, _ = build_construction(9)
        rc, ledger = _pipeline(g)
        assert rc.alpha == 6
        assert ledger.level_set(1) == frozenset({0, 6, 7})
        assert ledger.level_set(3) == frozenset({4, 5})
        assert ledger.stages["g"] == self.G
        assert ledger.stages["g5"] == self.G  # stage one is a no-op here
        assert ledger.stages["f7"] == self.F7

    def test_outer_sums(self):
        g, _ = build_construction(9)
        _, ledger = _pipeline(g)
        assert ledger.outer_sum("g") == F(2)
        assert ledger.outer_sum("f7") == F(2)

    def test_render_table(self):
        g, _ = build_construction(9)
        _, ledger = _pipeline(g)
        text = render_stage_table(ledger, ["g", "f7"])
        assert "-5/6" in text and "5/6" in text
        assert len(text.splitlines()) == 10


class TestConservation:
    @pytest.mark.parametrize("n", range(9, 31, 3))
    def test_stage_totals(self, n):
        g, _ = build_construction(n)
        _, ledger = _pipeline(g)
        base = ledger.outer_sum("g")
        assert ledger.outer_sum("g5") == base
        assert ledger.outer_sum("f7") == base


class TestAudit:
    def test_family_full_branch(self):
        for n in (9, 12, 16, 20):
            a = audit(build_construction(n)[0])
            assert a.branch == "full"
            assert a.passed, a.failures

    def test_t2_reduction_noted(self):
        a = audit(build_construction(11)[0])
        assert a.reduced_t2 == 2
        assert a.passed, a.failures

    def test_complete_graph_delta3_branch(self):
        a = audit(Graph.complete(5))
        assert a.branch == "delta>=3"
        assert a.passed

    def test_tiny_complete_graphs(self):
        for n in (1, 2, 3):
            a = audit(Graph.complete(n))
            assert a.passed

    def test_non_saturated_rejected(self):
        with pytest.raises(PreconditionError):
            audit(Graph.path(7))

    def test_extremal_graphs(self, extremal9):
        for g in extremal9.graphs:
            a = audit(g)
            assert a.passed, a.failures
            assert 3 * a.edges >= 4 * a.n - 6

    def test_monotone_signs(self, extremal9):
        for g in extremal9.graphs:
            a = audit(g)
            if a.branch == "full":
                assert a.monotone_sign_ok

    def test_wrong_k_rejected(self):
        with pytest.raises(PreconditionError):
            audit(Graph.complete(5), k=5)
