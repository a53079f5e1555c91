import networkx as nx
import pytest

from spex.constructions import complete, cycle, dumbbell, g_extremal, h_extremal, path, star, theta
from spex.errors import InvalidEdge, InvalidInput
from spex.graph import (bipartition, circumference, clique_number, component_masks, components,
                        from_edge_list, girth, is_bipartite, is_bridge, is_connected, is_dominating, is_vertex_cover,
                        longest_cycles, two_core)
from spex.sampling import random_graph

from conftest import to_nx


# ---- Construction ----
def test_from_edge_list_dedups_and_sorts():
    g = from_edge_list(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.m == 2
    assert g.degrees() == (1, 2, 1)


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects_bad_edges(edges):
    with pytest.raises(InvalidEdge):
        from_edge_list(3, edges)


@pytest.mark.parametrize("n", [0, 63])
def test_vertex_count_limits(n):
    with pytest.raises(InvalidInput):
        from_edge_list(n, [])


def test_with_edges_and_induced():
    g = cycle(4).with_edges(added=[(0, 2)], removed=[(0, 1)])
    assert g.edges == ((0, 2), (0, 3), (1, 2), (2, 3))
    sub = g.induced([2, 3, 0])
    assert sub.n == 3 and sub.m == 3


def test_relabel_moves_vertices():
    g = path(3).relabel([2, 0, 1])
    assert g.edges == ((0, 1), (0, 2))


# ---- Connectivity ----
def test_components_and_connectivity():
    g = from_edge_list(5, [(0, 1), (2, 3), (3, 4)])
    assert not is_connected(g)
    assert [c.m for c in components(g)] == [1, 2]
    assert is_connected(cycle(5))


def test_components_partition_the_vertices(rng):
    for _ in range(30):
        g = random_graph(rng, int(rng.integers(2, 12)), 0.2)
        masks = component_masks(g)
        assert sum(bin(mask).count("1") for mask in masks) == g.n
        union = 0
        for mask in masks:
            assert union & mask == 0
            union |= mask
        assert union == (1 << g.n) - 1
        merged = nx.disjoint_union_all([to_nx(c) for c in components(g)])
        assert nx.is_isomorphic(merged, to_nx(g))


def test_bipartition():
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(5))
    side0, side1 = bipartition(cycle(4))
    assert {side0, side1} == {0b0101, 0b1010}


# ---- Cycles ----
@pytest.mark.parametrize("n", range(3, 10))
def test_cycle_girth_and_circumference(n):
    assert girth(cycle(n)) == n
    assert circumference(cycle(n)) == n


def test_forests_have_no_cycles():
    for g in (path(6), star(5)):
        assert girth(g) is None
        assert circumference(g) is None
        assert two_core(g) == 0


def test_petersen(petersen):
    assert girth(petersen) == 5
    assert circumference(petersen) == 9
    assert clique_number(petersen) == 2


@pytest.mark.parametrize("g, expected_girth, expected_circ", [
    (complete(5), 3, 5),
    (theta(2, 2, 2), 4, 4),
    (g_extremal(6, 4), 4, 4),
    (h_extremal(8, 4), 3, 4),
    (dumbbell(3, 2), 3, 3),
    (theta(1, 3, 4), 4, 7),
])
def test_girth_and_circumference(g, expected_girth, expected_circ):
    assert girth(g) == expected_girth
    assert circumference(g) == expected_circ


def test_girth_never_exceeds_circumference(rng):
    seen_cycles = 0
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(4, 10)), 0.35)
        gi, ci = girth(g), circumference(g)
        assert (gi is None) == (ci is None)
        if gi is not None:
            seen_cycles += 1
            assert 3 <= gi <= ci <= g.n
            assert nx.girth(to_nx(g)) == gi
    assert seen_cycles > 0


def test_longest_cycles():
    assert longest_cycles(cycle(5)) == [(0, 1, 2, 3, 4)]
    assert len(longest_cycles(complete(4))) == 3
    assert longest_cycles(path(4)) == []


# ---- Cliques / domination ----
@pytest.mark.parametrize("g, omega", [
    (complete(6), 6), (cycle(5), 2), (cycle(3), 3), (g_extremal(8, 3), 3),
    (from_edge_list(3, []), 1), (h_extremal(11, 5), 3),
])
def test_clique_number(g, omega):
    assert clique_number(g) == omega


def test_dominating_and_cover(h84):
    assert is_dominating(h84, 0)
    assert not is_dominating(h84, 1)
    assert is_dominating(h84, 2, [0, 1, 3])
    assert is_vertex_cover(h84, [0, 1, 2, 3])
    assert not is_vertex_cover(h84, [1, 2, 3])


def test_is_bridge(bowtie_bridge):
    assert is_bridge(bowtie_bridge, 0, 3)
    assert not is_bridge(bowtie_bridge, 0, 1)
    assert not is_bridge(bowtie_bridge, 1, 4)
