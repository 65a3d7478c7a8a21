import numpy as np
import pytest

from alphaspec import (Graph, ParameterError, SolverError, bound_report,
                       complete, complete_bipartite, cycle, disjoint_union,
                       edgeless, path, rotation_test, star)
from conftest import named_corpus, rand_connected, rand_graph

ALPHAS = (0.0, 0.1, 0.25, 0.5, 0.7, 0.9, 1.0)


def by_name(report, name):
    recs = [r for r in report.records if r.name == name]
    assert recs, f"no record named {name}"
    return recs[0]


def test_no_violations_on_corpus(rng):
    graphs = named_corpus()
    for _ in range(40):
        graphs.append(rand_graph(rng, int(rng.integers(1, 11)), float(rng.uniform(0.1, 0.9))))
    for g in graphs:
        for a in ALPHAS:
            rep = bound_report(g, a)
            assert rep.violations == (), (g.n, g.edges, a, rep.violations)


def test_report_shape_and_json():
    rep = bound_report(path(4), 0.3, graph_id="p4")
    doc = rep.to_json_obj()
    assert doc["graph"] == "p4" and doc["alpha"] == 0.3
    names = {r["name"] for r in doc["records"]}
    assert {"trace_linear", "trace_square", "lovasz_star_lower",
            "min_degree_upper", "maxcut_mix_upper"} <= names
    assert doc["violations"] == []
    rec = by_name(rep, "degree_majorization_k1")
    assert rec.side == "upper_on" and rec.target == "lambda_1"


def test_regular_equalities_have_zero_slack():
    # row-sum similarity bounds pinch to equality on regular graphs
    for g in (cycle(6), complete(5), complete_bipartite(3, 3)):
        for a in (0.2, 0.5, 0.8):
            rep = bound_report(g, a)
            assert abs(by_name(rep, "rowsum_similarity_upper").slack) <= 1e-9
            assert abs(by_name(rep, "rowsum_similarity_lower").slack) <= 1e-9
            assert abs(by_name(rep, "adjacency_mix_upper").slack) <= 1e-9
            assert abs(by_name(rep, "mean_degree_lower").slack) <= 1e-9


def test_star_makes_lovasz_bound_tight():
    for a in (0.0, 0.3, 0.6, 1.0):
        rep = bound_report(star(6), a)
        assert abs(by_name(rep, "lovasz_star_lower").slack) <= 1e-9
    # non-star connected graphs sit strictly above
    rep = bound_report(path(4), 0.3)
    assert by_name(rep, "lovasz_star_lower").slack > 1e-3


def test_two_cliques_pin_second_eigenvalue():
    g = disjoint_union([complete(3), complete(3)])
    for a in (0.0, 0.2, 0.4):
        rep = bound_report(g, a)
        rec = by_name(rep, "second_eigenvalue_upper")
        assert abs(rec.slack) <= 1e-9


def test_maxcut_corrected_tight_on_k4_where_literal_fails():
    rep = bound_report(complete(4), 0.0)
    corrected = by_name(rep, "maxcut_mix_upper")
    assert corrected.holds and abs(corrected.slack) <= 1e-9
    literal = by_name(rep, "maxcut_mix_upper_literal")
    assert literal.informational
    assert not literal.holds  # claims lambda_min <= -2, but lambda_min is -1
    assert rep.violations == ()


def test_maxcut_literal_can_hold_elsewhere():
    rep = bound_report(cycle(5), 0.0)
    literal = by_name(rep, "maxcut_mix_upper_literal")
    assert literal.holds


def test_hoffman_tight_on_complete_graph():
    rep = bound_report(complete(4), 0.0)
    rec = by_name(rep, "hoffman_regular_upper")
    assert not rec.skipped
    assert abs(rec.slack) <= 1e-9
    # inactive for alpha at or above 1/chromatic
    rep = bound_report(complete(4), 0.5)
    assert by_name(rep, "hoffman_regular_upper").skipped


def test_min_degree_upper_strictness_flag():
    rec = by_name(bound_report(cycle(5), 0.3), "min_degree_upper")
    assert rec.strict
    rec = by_name(bound_report(cycle(5), 1.0), "min_degree_upper")
    assert not rec.strict
    rec = by_name(bound_report(edgeless(3), 0.3), "min_degree_upper")
    assert not rec.strict


def test_skips_on_degenerate_inputs():
    rep = bound_report(edgeless(4), 0.4)
    assert by_name(rep, "lovasz_star_lower").skipped
    assert by_name(rep, "rowsum_similarity_upper").skipped
    assert by_name(rep, "edge_degree_upper").skipped
    rep = bound_report(disjoint_union([complete(2), complete(2)]), 0.4)
    assert by_name(rep, "distinct_diameter_lower").skipped
    rep = bound_report(cycle(5), 1.0)
    assert by_name(rep, "distinct_diameter_lower").skipped
    rep = bound_report(cycle(17), 0.1)
    assert by_name(rep, "hoffman_regular_upper").skipped


def test_maxcut_skipped_above_capacity():
    g = cycle(25)
    rep = bound_report(g, 0.3)
    assert by_name(rep, "maxcut_mix_upper").skipped
    assert rep.violations == ()


def test_degree_majorization_on_star():
    rep = bound_report(star(5), 1.0)
    rec = by_name(rep, "degree_majorization_k1")
    assert abs(rec.slack) <= 1e-12  # lambda_1 of the degree matrix is max degree


def test_weyl_sandwich_equality_for_regular():
    rep = bound_report(cycle(8), 0.35)
    for k in (1, 4, 8):
        lo = by_name(rep, f"weyl_mix_lower_k{k}")
        hi = by_name(rep, f"weyl_mix_upper_k{k}")
        assert abs(lo.slack) <= 1e-9 and abs(hi.slack) <= 1e-9


def test_rotation_increases_radius():
    # moving the edge (2,3) of a path onto the non-edge (0,2) closes a triangle
    assert rotation_test(path(4), 0.3, 2, 3, 0) is True


def test_rotation_rejects_bad_inputs():
    with pytest.raises(ParameterError):
        rotation_test(path(4), 1.0, 2, 3, 0)  # needs alpha < 1
    with pytest.raises(ParameterError):
        rotation_test(path(4), 0.3, 0, 2, 1)  # (0,2) is not an edge
    with pytest.raises(ParameterError):
        rotation_test(path(4), 0.3, 1, 2, 0)  # (1,0) already an edge
    with pytest.raises(ParameterError):
        rotation_test(disjoint_union([complete(2), complete(2)]), 0.3, 0, 1, 2)


def test_rotation_reports_failed_hypothesis(rng):
    # aim the edge at a low-weight endpoint: hypothesis x_w >= x_v fails
    g = star(5)
    # move (0,4) to (1,2)? 1 and 2 are leaves; w must be non-adjacent to u
    # leaves are pairwise non-adjacent, center has the largest Perron entry
    assert rotation_test(g, 0.3, 1, 0, 2) is False


def test_identity_records_hold(rng):
    for _ in range(10):
        g = rand_connected(rng, int(rng.integers(2, 10)), extra=2)
        a = float(rng.random())
        rep = bound_report(g, a)
        for name in ("trace_linear", "trace_square"):
            rec = by_name(rep, name)
            assert rec.holds and rec.side == "identity"
