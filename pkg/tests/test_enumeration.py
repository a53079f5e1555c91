import itertools

import networkx as nx
import pytest

from spex import enumeration
from spex.canon import canonical_form
from spex.constructions import complete, complete_bipartite, cycle, g_extremal, h_extremal, path, star
from spex.enumeration import (MAX_CACHED_FAMILIES, FamilySpec, argmax_q, clear_cache, enumerate_family,
                              family_q_values, naive_family)
from spex.errors import EmptyFamily, InvalidParameter, ResourceLimit
from spex.graph import circumference, from_edge_list, girth
from spex.graph6 import to_graph6

from conftest import SQRT5, close, to_nx

# graphs with m edges and no isolated vertices, up to isomorphism
CLASS_COUNTS = {1: 1, 2: 2, 3: 5, 4: 11, 5: 26, 6: 68}


def codes(graphs):
    return [to_graph6(g) for g in graphs]


def test_three_edges():
    graphs, stats = enumerate_family(FamilySpec(3))
    expected = {canonical_form(g).bytes for g in (
        complete(3), path(4), star(3),
        from_edge_list(5, [(0, 1), (1, 2), (3, 4)]),
        from_edge_list(6, [(0, 1), (2, 3), (4, 5)]),
    )}
    assert set(codes(graphs)) == expected
    assert stats.matching == stats.unique == 5
    assert stats.generated >= stats.unique


@pytest.mark.parametrize("m", sorted(CLASS_COUNTS))
def test_class_counts(m):
    graphs, _ = enumerate_family(FamilySpec(m))
    assert len(graphs) == CLASS_COUNTS[m]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_matches_naive_enumerator(m):
    assert sorted(canonical_form(g).bytes for g in naive_family(FamilySpec(m))) == codes(enumerate_family(FamilySpec(m))[0])


@pytest.mark.parametrize("m, g", [(m, g) for g in (3, 4, 5) for m in range(g, 6)])
def test_girth_families_match_naive_enumerator(m, g):
    spec = FamilySpec.girth(m, g)
    assert sorted(canonical_form(x).bytes for x in naive_family(spec)) == codes(enumerate_family(spec)[0])


@pytest.mark.slow
@pytest.mark.parametrize("spec", [FamilySpec(6), FamilySpec.girth(6, 3), FamilySpec.girth(6, 4),
                                  FamilySpec.girth(6, 5)])
def test_six_edges_match_naive_enumerator(spec):
    assert sorted(canonical_form(x).bytes for x in naive_family(spec)) == codes(enumerate_family(spec)[0])


def test_no_two_members_isomorphic():
    graphs, _ = enumerate_family(FamilySpec(5))
    for a, b in itertools.combinations(graphs, 2):
        assert not nx.is_isomorphic(to_nx(a), to_nx(b))


def test_members_satisfy_constraint():
    for g in enumerate_family(FamilySpec.girth(8, 4))[0]:
        assert g.m == 8 and girth(g) == 4 and not g.has_isolated_vertex()
    for g in enumerate_family(FamilySpec.circumference(8, 4))[0]:
        assert circumference(g) == 4
    for g in enumerate_family(FamilySpec.circumference(7, 5, at_least=True))[0]:
        assert circumference(g) >= 5


@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_cycle_is_the_only_member(g):
    graphs, _ = enumerate_family(FamilySpec.girth(g, g))
    assert codes(graphs) == [canonical_form(cycle(g)).bytes]


def test_six_edges_girth_four_family():
    found = set(codes(enumerate_family(FamilySpec.girth(6, 4))[0]))
    assert canonical_form(complete_bipartite(2, 3)).bytes in found
    assert canonical_form(g_extremal(6, 4)).bytes in found


def test_disconnected_members_included():
    found = set(codes(enumerate_family(FamilySpec.girth(7, 4))[0]))
    assert canonical_form(from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)]).with_edges(
        added=[(4, 6), (4, 7)], n=8)).bytes in found


def test_output_independent_of_workers():
    clear_cache()
    serial = codes(enumerate_family(FamilySpec(7), workers=1)[0])
    clear_cache()
    parallel = codes(enumerate_family(FamilySpec(7), workers=2)[0])
    assert serial == parallel
    assert len(serial) == 177


def test_spec_validation():
    with pytest.raises(InvalidParameter):
        FamilySpec(0)
    with pytest.raises(InvalidParameter):
        FamilySpec(5, "girth", 2)
    with pytest.raises(InvalidParameter):
        FamilySpec(5, "diameter", 3)
    assert FamilySpec.circumference(9, 4, at_least=True).describe() == "m=9,circumference>=4"


def test_resource_limit():
    with pytest.raises(ResourceLimit):
        enumerate_family(FamilySpec(13))
    with pytest.raises(ResourceLimit):
        enumerate_family(FamilySpec(6), edge_cap=5)


# ---- argmax ----
def test_argmax_girth_four():
    report = argmax_q(FamilySpec.girth(6, 4))
    assert [code for code, _ in report.maxima] == [canonical_form(g_extremal(6, 4)).bytes]
    assert close(report.q_max, 3 + SQRT5)
    assert close(report.runner_up_q, 5)
    assert report.gap > 1e-6


def test_argmax_single_member():
    report = argmax_q(FamilySpec.girth(5, 5))
    assert close(report.q_max, 4)
    assert report.runner_up_q is None and report.gap is None


def test_argmax_circumference_four():
    report = argmax_q(FamilySpec.circumference(8, 4))
    assert [code for code, _ in report.maxima] == [canonical_form(h_extremal(8, 4)).bytes]


def test_argmax_empty_family():
    with pytest.raises(EmptyFamily):
        argmax_q(FamilySpec.girth(3, 4))


def test_family_q_values_keep_order(k23, g64):
    values = family_q_values([k23, g64, cycle(5)])
    assert close(values[0], 5) and close(values[1], 3 + SQRT5) and close(values[2], 4)


def test_level_cache_keeps_recent_families_only():
    clear_cache()
    before = codes(enumerate_family(FamilySpec.girth(4, 3))[0])
    for g in range(3, 3 + MAX_CACHED_FAMILIES + 2):
        enumerate_family(FamilySpec.girth(4, g))
    assert len(enumeration._LEVELS) == MAX_CACHED_FAMILIES
    assert ("girth_at_least", 3) not in enumeration._LEVELS
    assert ("girth_at_least", 2 + MAX_CACHED_FAMILIES + 2) in enumeration._LEVELS
    assert codes(enumerate_family(FamilySpec.girth(4, 3))[0]) == before
    clear_cache()
    assert not enumeration._LEVELS
