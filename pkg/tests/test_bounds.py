import pytest
from hypothesis import given
from hypothesis import strategies as st

from radialmoore.bounds import (
    UnsupportedDegreeError,
    bounds_report,
    ceil_root_formula,
    central_neighbor_status_upper,
    g_max,
    gamma2_lower,
    min_attach_count,
    moore_bound,
    moore_status,
    total_status_upper,
    vertex_status_upper,
)
from radialmoore.gd import build_gd, gd_total_status, noncentral_status
from radialmoore.graph import complete_graph, petersen_graph, statuses
from radialmoore.swap import hoffman_singleton


def tree_root_status(d, k):
    # explicit level-by-level count of a Moore tree
    total, width = 0, d
    for depth in range(1, k + 1):
        total += depth * width
        width *= d - 1
    return total


@given(st.integers(3, 40), st.integers(1, 12))
def test_moore_status_matches_tree_count(d, k):
    assert moore_status(d, k) == tree_root_status(d, k)


@given(st.integers(1, 40), st.integers(0, 12))
def test_moore_bound_is_tree_order(d, k):
    width, total = d, 1
    for _ in range(k):
        total += width
        width *= d - 1
    assert moore_bound(d, k) == total


def test_moore_graphs_attain_bounds():
    assert moore_bound(3, 2) == petersen_graph().n
    assert set(statuses(petersen_graph())) == {moore_status(3, 2)} == {15}
    assert moore_bound(7, 2) == hoffman_singleton().n == 50
    assert set(statuses(hoffman_singleton())) == {moore_status(7, 2)} == {91}
    for d in range(3, 8):
        assert set(statuses(complete_graph(d + 1))) == {moore_status(d, 1)}


def test_printed_moore_values():
    assert moore_bound(7, 3) == 302
    assert moore_bound(4, 3) == 53
    assert moore_bound(7, 7) == 391910


@pytest.mark.parametrize("d", range(3, 501))
def test_min_attach_matches_ceiling_except_d4(d):
    if d == 4:
        assert (min_attach_count(4), ceil_root_formula(4)) == (2, 3)
    else:
        assert min_attach_count(d) == ceil_root_formula(d)


@given(st.integers(2, 10**6))
def test_ceil_root_formula_is_least_solution(d):
    x = ceil_root_formula(d)
    assert x * (x - 1) >= d - 1
    assert (x - 1) * (x - 2) < d - 1


def test_g_max_domain():
    with pytest.raises(ValueError):
        g_max(5, 0)
    with pytest.raises(ValueError):
        g_max(5, 5)
    assert g_max(4, 1) == 0


def test_published_status_bounds():
    assert total_status_upper(3, "paper") == 174
    assert total_status_upper(4, "paper") == 596
    assert total_status_upper(3, "consistent") == 174
    assert total_status_upper(4, "consistent") == 600
    assert central_neighbor_status_upper(4) == 35
    assert vertex_status_upper(4) == 36


@pytest.mark.parametrize("d", range(3, 11))
def test_bounds_dominate_gd(d):
    g = build_gd(d)
    assert max(statuses(g)) <= vertex_status_upper(d)
    # spokes are the neighbours of the unique central vertex
    assert max(statuses(g)[1 : d + 1]) <= central_neighbor_status_upper(d)
    assert noncentral_status(d) <= central_neighbor_status_upper(d)
    assert gd_total_status(d) <= total_status_upper(d, "consistent")
    assert gd_total_status(d) <= total_status_upper(d, "paper")


def test_gamma2():
    assert gamma2_lower(5) == 5
    assert gamma2_lower(5, neighbor_of_central=True) == 5 + min_attach_count(5) - 1


def test_report_and_domain():
    rep = bounds_report(4, 2)
    assert not rep.variants_agree
    assert bounds_report(5, 2).variants_agree
    assert rep.as_dict()["total_status_upper_paper"] == 596
    with pytest.raises(UnsupportedDegreeError):
        bounds_report(2, 2)
    with pytest.raises(ValueError):
        bounds_report(3, 0)
    with pytest.raises(ValueError):
        total_status_upper(5, "other")
