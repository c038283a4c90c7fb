import pytest

from satforge.construction import (
    ConstructionError,
    build_construction,
    build_g0,
    lower_bound_edges,
    upper_bound_edges,
    verify_construction,
    witness_paths_ok,
)
from satforge.saturation import check_saturated, good_roots, t_sets


class TestCore:
    def test_core_size(self):
        g = build_g0()
        assert g.n == 9 and g.edge_count == 12

    def test_core_degree_profile(self):
        g = build_g0()
        assert sorted(g.degrees()) == [2, 2, 2, 2, 2, 2, 4, 4, 4]

    def test_core_is_saturated(self):
        assert check_saturated(build_g0(), 6).saturated


class TestFamily:
    def test_rejects_small_n(self):
        with pytest.raises(ConstructionError):
            build_construction(8)

    def test_edge_formula_range(self):
        for n in range(9, 61):
            g, _ = build_construction(n)
            assert g.edge_count == upper_bound_edges(n)

    def test_epsilon_split(self):
        for n, eps in ((9, 0), (10, 1), (11, 2), (12, 0)):
            _, spec = build_construction(n)
            assert spec.epsilon == eps

    def test_labels_are_bijective(self):
        g, spec = build_construction(17)
        assert sorted(spec.labels.values()) == list(range(17))

    def test_min_degree_two_and_good_pendant_roots(self):
        g, spec = build_construction(15)
        assert g.min_degree() == 2
        roots = good_roots(g)
        for i in range(3):  # b_i vertices carry no triangle
            assert spec.labels[f"b{i}"] in roots

    def test_epsilon_two_clique_attachment(self):
        g, spec = build_construction(14)
        lab = spec.labels
        assert g.has_edge(lab["z1"], lab["z2"])
        assert g.has_edge(lab["y4"], lab["z1"])
        assert g.has_edge(lab["y4"], lab["z2"])
        assert {lab["z1"], lab["z2"]} == set(t_sets(g).t2)


class TestBounds:
    def test_upper_bound_values(self):
        assert [upper_bound_edges(n) for n in (9, 10, 11, 12)] == [12, 13, 15, 16]

    def test_lower_bound_values(self):
        assert [lower_bound_edges(n) for n in (9, 10, 11, 12)] == [10, 12, 13, 14]

    def test_upper_dominates_lower(self):
        for n in range(9, 61):
            assert upper_bound_edges(n) >= lower_bound_edges(n)


class TestWitnesses:
    def test_templates_hold_at_15(self):
        assert witness_paths_ok(15)

    def test_templates_hold_at_18(self):
        assert witness_paths_ok(18)


class TestVerify:
    def test_report_rows(self):
        rows = verify_construction([9, 10, 11])
        assert [r["n"] for r in rows] == [9, 10, 11]
        assert all(r["edges_ok"] and r["saturated"] and r["lower_ok"] for r in rows)
