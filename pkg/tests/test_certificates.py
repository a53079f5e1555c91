import numpy as np
import pytest

from spex.certificates import (average_two_degree, bound_report, clique_bound, clique_bound_monotone,
                               contraction_certificate, feng_yu_bound, interval_certificate, is_regular,
                               is_semiregular_bipartite, pendant_clique_degree_bound, perturbation_identity,
                               star_lower)
from spex.constructions import clique_with_pendants, complete, complete_bipartite, cycle, star, theta
from spex.errors import InvalidContraction, InvalidEdge, InvalidInput, InvalidWitness
from spex.graph import from_edge_list
from spex.spectral import q_radius, signless_laplacian
from spex.transforms import contract

from conftest import close


# ---- Degree bound ----
def test_feng_yu_regular_cycle(c5):
    bound = feng_yu_bound(c5)
    assert bound.value == 4 and bound.regular and bound.equality
    assert close(q_radius(c5).q, bound.value)


def test_feng_yu_semiregular_bipartite(k23):
    bound = feng_yu_bound(k23)
    assert bound.value == 5 and bound.semiregular_bipartite and not bound.regular
    assert close(q_radius(k23).q, 5)


def test_feng_yu_strict_on_g64(g64):
    bound = feng_yu_bound(g64)
    assert not bound.equality
    assert bound.value == pytest.approx(5.5)
    assert q_radius(g64).q < bound.value - 1e-6


def test_feng_yu_needs_connected_graph():
    with pytest.raises(InvalidInput):
        feng_yu_bound(from_edge_list(4, [(0, 1), (2, 3)]))


def test_degree_helpers(g64):
    assert average_two_degree(g64, 1) == 3.0
    assert is_regular(cycle(7)) and not is_regular(g64)
    assert is_semiregular_bipartite(complete_bipartite(3, 4))
    assert not is_semiregular_bipartite(g64)
    assert star_lower(g64) == 5.0


@pytest.mark.parametrize("s, t", [(3, 0), (3, 4), (4, 2), (5, 3)])
def test_pendant_clique_degree_bound(s, t):
    assert pendant_clique_degree_bound(s, t) == 2 * (s - 1) + t
    assert q_radius(clique_with_pendants(s, t)).q <= pendant_clique_degree_bound(s, t) + 1e-9


# ---- Clique bound ----
def test_clique_bound_equality_on_pendant_clique():
    g = clique_with_pendants(3, 5)
    bound = clique_bound(g)
    assert bound.omega == 3 and bound.equality
    assert close(bound.value, q_radius(g).q)


def test_clique_bound_on_triangle_with_tail():
    g = from_edge_list(8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)])
    bound = clique_bound(g)
    assert bound.omega == 3 and not bound.equality
    assert close(bound.value, q_radius(clique_with_pendants(3, 5)).q)
    assert q_radius(g).q < bound.value


def test_clique_bound_monotone():
    values, decreasing = clique_bound_monotone(30)
    assert [w for w, _ in values] == [3, 4, 5, 6, 7, 8]
    assert decreasing
    assert clique_bound_monotone(5)[0] == [(3, pytest.approx(q_radius(clique_with_pendants(3, 2)).q))]


def test_bound_report_flags(c5):
    report = bound_report(c5)
    assert report.feng_yu == 4
    assert report.equality_flags["feng_yu"] == "regular"
    assert report.star_lower == 3

    s = bound_report(star(4))
    assert s.equality_flags["star_lower"] == "star"
    assert s.equality_flags["clique_bound"] == "K_2^3"


def test_bound_report_handles_disconnected_graphs():
    g = from_edge_list(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3)])
    assert bound_report(g).feng_yu == 4


def test_bound_report_rejects_edgeless_graphs():
    with pytest.raises(InvalidInput, match="no edges"):
        bound_report(from_edge_list(2, []))
    with pytest.raises(InvalidInput):
        bound_report(from_edge_list(1, []))


# ---- Interval certificates ----
def test_interval_certificate_on_eigenvector(c5):
    cert = interval_certificate(c5, np.ones(5), 3.9, 4.1)
    assert cert is not None and cert.alpha < 4 < cert.beta
    assert interval_certificate(c5, np.ones(5), 4.0, 4.1) is None


def test_interval_certificate_on_star_witness():
    y = np.array([1.0, 1 / 3, 1 / 3, 1 / 3])
    cert = interval_certificate(star(3), y, 3.9, 4.1)
    assert cert is not None
    assert cert.alpha < q_radius(star(3)).q < cert.beta


def test_interval_certificate_brackets_q(g64):
    rng = np.random.default_rng(4)
    x = q_radius(g64).perron
    y = x * np.exp(rng.normal(0, 0.05, g64.n))
    ratios = signless_laplacian(g64) @ y / y
    cert = interval_certificate(g64, y, ratios.min() - 1e-6, ratios.max() + 1e-6)
    assert cert is not None
    assert cert.alpha < q_radius(g64).q < cert.beta


@pytest.mark.parametrize("Y", [np.zeros(5), -np.ones(5), np.ones(4)])
def test_interval_certificate_rejects_bad_witness(c5, Y):
    with pytest.raises(InvalidWitness):
        interval_certificate(c5, Y, 3.0, 5.0)


# ---- Contraction certificate ----
def test_contraction_certificate_on_bridge(bowtie_bridge):
    result = contraction_certificate(bowtie_bridge, 0, 3)
    assert result.case == "certificate"
    cert = result.certificate
    assert cert.one_sided and cert.beta == result.q_contracted
    assert close(result.q_contracted, q_radius(contract(bowtie_bridge, 0, 3)).q)
    gap = cert.beta * cert.witness - signless_laplacian(bowtie_bridge) @ cert.witness
    assert gap.min() > -1e-7 and gap.max() > 1e-12
    assert q_radius(bowtie_bridge).q < cert.beta


def test_contraction_certificate_on_theta_hubs():
    g = theta(1, 3, 3)
    result = contraction_certificate(g, 0, 1)
    assert result.case == "certificate"
    assert result.certificate.beta == result.q_contracted
    assert q_radius(g).q < result.q_contracted


def test_contraction_certificate_degree_two_endpoint():
    result = contraction_certificate(theta(2, 2, 2), 0, 2)
    assert result.case == "subdivision" and result.certificate is None
    assert result.q_contracted > q_radius(theta(2, 2, 2)).q


def test_contraction_certificate_rejects():
    with pytest.raises(InvalidContraction):
        contraction_certificate(complete(4), 0, 1)
    with pytest.raises(InvalidEdge):
        contraction_certificate(cycle(5), 0, 2)


# ---- Perturbation identity ----
def test_perturbation_identity_k23_to_g64():
    k23 = from_edge_list(6, complete_bipartite(2, 3).edges)
    g64 = k23.with_edges(added=[(0, 5)], removed=[(1, 4)])
    lhs, rhs = perturbation_identity(k23, g64, [(0, 5)], [(1, 4)])
    assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs))
    assert lhs > 0


def test_perturbation_identity_checks_the_edit(c5):
    with pytest.raises(InvalidInput):
        perturbation_identity(c5, c5, [(0, 2)], [])
