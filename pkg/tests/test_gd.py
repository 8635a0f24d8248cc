from math import factorial

import networkx as nx
import pytest

from conftest import to_nx
from radialmoore.gd import (
    GdVertex,
    build_gd,
    central_status,
    expected_status_vector,
    gd_automorphisms,
    gd_index,
    gd_labels,
    gd_total_status,
    generated_group_size,
    noncentral_status,
    permutation_map,
    spoke_clique_profiles_agree,
    transposition_map,
    verify_gd,
)
from radialmoore.canon import is_automorphism
from radialmoore.graph import statuses


@pytest.mark.parametrize("d", range(3, 13))
def test_verify(d):
    rep = verify_gd(d)
    assert rep.ok and rep.order == d * d + 1
    assert rep.central_vertices == (0,)


@pytest.mark.parametrize("d", range(3, 9))
def test_statuses_against_networkx(d):
    h = to_nx(build_gd(d))
    dist = dict(nx.all_pairs_shortest_path_length(h))
    got = sorted((sum(dist[v].values()) for v in h), reverse=True)
    assert got == [noncentral_status(d)] * (d * d) + [central_status(d)]
    assert sum(got) == gd_total_status(d)
    assert nx.radius(h) == 2 and nx.diameter(h) == 3


def test_printed_vectors_and_totals():
    assert str(expected_status_vector(3)) == "(17,9),(15,1)"
    assert str(expected_status_vector(4)) == "(34,16),(28,1)"
    assert gd_total_status(3) == 168
    assert gd_total_status(4) == 572
    assert gd_total_status(5) == 1470 == 45 + 25 * 57


def test_labels_are_consistent():
    d = 5
    labels = gd_labels(d)
    assert len(labels) == d * d + 1
    idx = gd_index(d)
    assert idx[GdVertex("center")] == 0
    assert idx[GdVertex("spoke", 3)] == 3
    g = build_gd(d)
    assert g.has_edge(idx[GdVertex("clique", 2, 4)], idx[GdVertex("clique", 4, 2)])
    assert not g.has_edge(idx[GdVertex("clique", 2, 4)], idx[GdVertex("clique", 3, 2)])
    assert str(GdVertex("clique", 2, 4)) == "(2,4)"


@pytest.mark.parametrize("d", range(3, 9))
def test_transpositions_are_automorphisms(d):
    g = build_gd(d)
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            assert is_automorphism(g, transposition_map(d, i, j))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_group_is_symmetric(d):
    rep = gd_automorphisms(d)
    assert rep.group_order == factorial(d)
    assert rep.matches_symmetric_group
    gens = [transposition_map(d, i, i + 1) for i in range(1, d)]
    assert generated_group_size(gens) == factorial(d)


def test_permutation_map_cycle():
    perm = permutation_map(4, {1: 2, 2: 3, 3: 1})
    assert is_automorphism(build_gd(4), perm)


def test_profiles_and_errors():
    assert all(spoke_clique_profiles_agree(d) for d in range(3, 8))
    with pytest.raises(ValueError):
        build_gd(2)
    with pytest.raises(ValueError):
        transposition_map(4, 2, 2)
    with pytest.raises(ValueError):
        transposition_map(4, 0, 2)
    with pytest.raises(ValueError):
        gd_total_status(2)


def test_statuses_ordered_by_kind():
    d = 4
    st = statuses(build_gd(d))
    assert st[0] == central_status(d)
    assert set(st[1:]) == {noncentral_status(d)}
