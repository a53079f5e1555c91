# harness.py
# Purpose: Verification jobs built on the library: exhaustive checks of the girth and
#          circumference extremal theorems, the open-range explorer, seeded property suites
#          for the q-monotone transforms and bounds, and a structural audit of a found extremum.

from __future__ import annotations
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from spex.canon import canonical_form
from spex.certificates import (STRICT_MARGIN, clique_bound, clique_bound_monotone, contraction_certificate,
                               feng_yu_bound, interval_certificate, pendant_clique_degree_bound,
                               perturbation_identity, star_lower)
from spex.constructions import (clique_with_pendants, complete_bipartite, cycle, dumbbell, g_extremal,
                                h_extremal, star, theta)
from spex.enumeration import (DEFAULT_EDGE_CAP, EnumerationStats, ExtremalReport, FamilySpec, argmax_q)
from spex.errors import (AuditFailure, CertificateFailure, EmptyRange, InvalidParameter, OutsideTheoremRange)
from spex.graph import (Graph, bits, component_masks, from_edge_list, is_bridge, is_connected, is_dominating,
                        is_vertex_cover, longest_cycles, two_core)
from spex.graph6 import parse_graph6
from spex.sampling import (MAX_REJECTIONS, bridged_pair, pick, random_connected_graph,
                           random_disconnected_graph, random_graph, random_vector)
from spex.spectral import DEFAULT_TOL, dense_q, edge_sum_form, q_radius, quadratic_form, signless_laplacian
from spex.transforms import (contract, internal_path_edges, merge_components, subdivide, switch, switchable)

log = logging.getLogger(__name__)

DEFAULT_GAP_TOL = 1e-9
DEFAULT_UNIQUE_GAP = 1e-6
DEFAULT_SEED = 42


# ---- Types ----
@dataclass
class LemmaSuiteResult:
    lemma: str
    trials: int
    violations: int
    min_margin: float
    seed: int
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0


@dataclass
class AuditResult:
    spec: FamilySpec
    graph6: str
    hub: Optional[int]
    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


# ---- Theorem verification ----
def _judge(report: ExtremalReport, expected: Graph, unique_gap: float) -> ExtremalReport:
    code = canonical_form(expected).bytes
    codes = [c for c, _ in report.maxima]
    report.expected = code
    report.expected_among_maxima = code in codes
    if not report.expected_among_maxima:
        report.verdict = "refuted"
    elif len(codes) == 1 and (report.gap is None or report.gap > unique_gap):
        report.verdict = "confirmed-unique"
    else:
        report.verdict = "confirmed-tied"
        if len(codes) == 1:
            report.notes.append(f"runner-up within {unique_gap:g} of the maximum")
    if report.gap is None:
        report.notes.append("family has a single member" if report.stats.matching == 1
                            else "every member attains the maximum")
    log.info("%s: %s (q_max=%.12f, gap=%s)", report.spec.describe(), report.verdict, report.q_max,
             "n/a" if report.gap is None else f"{report.gap:.3e}")
    return report


def verify_girth_theorem(m: int, g: int, gap_tol: float = DEFAULT_GAP_TOL, unique_gap: float = DEFAULT_UNIQUE_GAP,
                         workers: int = 1, tol: float = DEFAULT_TOL,
                         edge_cap: int = DEFAULT_EDGE_CAP) -> ExtremalReport:
    """Maximise q over all graphs of size m and girth g and compare with G_{m,g}."""
    if g < 3 or m < g:
        raise InvalidParameter(f"girth theorem needs 3 <= g <= m, got m={m}, g={g}")
    report = argmax_q(FamilySpec.girth(m, g), gap_tol=gap_tol, workers=workers, tol=tol, edge_cap=edge_cap)
    return _judge(report, g_extremal(m, g), unique_gap)


def verify_circumference_theorem(m: int, c: int, gap_tol: float = DEFAULT_GAP_TOL,
                                 unique_gap: float = DEFAULT_UNIQUE_GAP, at_least: bool = False,
                                 workers: int = 1, tol: float = DEFAULT_TOL,
                                 edge_cap: int = DEFAULT_EDGE_CAP) -> ExtremalReport:
    """Maximise q over graphs of size m and circumference c (or >= c) and compare with H_{m,c}."""
    if c < 3:
        raise InvalidParameter(f"circumference must be >= 3, got {c}")
    if c == 3 and not at_least:
        report = verify_girth_theorem(m, 3, gap_tol, unique_gap, workers, tol, edge_cap)
        report.notes.append("circumference 3 is the girth-3 family; checked against G_(m,3) = H_(m,3)")
        return report
    if m < 3 * c - 4:
        raise OutsideTheoremRange(f"m={m} < 3c-4={3 * c - 4}; use the open-range explorer instead")
    spec = FamilySpec.circumference(m, c, at_least)
    report = argmax_q(spec, gap_tol=gap_tol, workers=workers, tol=tol, edge_cap=edge_cap)
    return _judge(report, h_extremal(m, c), unique_gap)


def explore_open_question(c: int, gap_tol: float = DEFAULT_GAP_TOL, workers: int = 1, tol: float = DEFAULT_TOL,
                          edge_cap: int = DEFAULT_EDGE_CAP) -> List[ExtremalReport]:
    """One exploratory report per m in [c+1, 3c-5]; no verdict is ever claimed.

    Sizes above edge_cap get a report with no maxima and a note, so the range is always covered.
    """
    if c < 4:
        raise EmptyRange(f"open range [c+1, 3c-5] needs c >= 4, got c={c}")
    reports = []
    full_cap = 3 * c - 5
    for m in range(c + 1, full_cap + 1):
        spec = FamilySpec.circumference(m, c)
        if m > edge_cap:
            reports.append(ExtremalReport(
                spec=spec, maxima=[], runner_up_q=None, gap=None,
                stats=EnumerationStats(generated=0, unique=0, matching=0, wall_time=0.0),
                gap_tol=gap_tol,
                notes=[f"skipped: m={m} exceeds the edge cap {edge_cap}; the full range needs edge cap {full_cap}"],
            ))
            log.warning("explore c=%d: m=%d skipped (edge cap %d, full range needs %d)", c, m, edge_cap, full_cap)
            continue
        report = argmax_q(spec, gap_tol=gap_tol, workers=workers, tol=tol, edge_cap=edge_cap)
        if m >= 2 * c - 3:
            code = canonical_form(h_extremal(m, c)).bytes
            report.expected_among_maxima = code in [x for x, _ in report.maxima]
            report.notes.append(f"H_({m},{c}) is {'' if report.expected_among_maxima else 'not '}among the maxima")
        else:
            report.notes.append(f"H_({m},{c}) needs m >= {2 * c - 3}")
        reports.append(report)
    return reports


# ---- Structural audit ----
def _pendants_at(g: Graph, hub: int, outside: int) -> bool:
    """Every vertex in the bitmask `outside` is a leaf hanging from hub."""
    return all(g.degree(w) == 1 and g.has_edge(hub, w) for w in bits(outside))


def _audit_girth(g: Graph, length: int) -> Tuple[Optional[int], Dict[str, bool]]:
    core = two_core(g)
    core_degrees = [(g.adjacency[v] & core).bit_count() for v in bits(core)]
    checks = {"core_is_cycle": core.bit_count() == length and all(d == 2 for d in core_degrees)}
    outside = ((1 << g.n) - 1) & ~core
    hubs = [v for v in bits(core) if g.degree(v) > 2]
    hub = hubs[0] if len(hubs) == 1 else (None if hubs else min(bits(core), default=None))
    checks["pendants_at_one_vertex"] = hub is not None and _pendants_at(g, hub, outside)
    return hub, checks


def _audit_circumference(g: Graph) -> Tuple[Optional[int], Dict[str, bool]]:
    names = ("dominating_hub", "chords_at_hub", "cycle_is_vertex_cover", "off_cycle_pendants_at_hub")
    best: Tuple[Optional[int], Dict[str, bool]] = (None, {k: False for k in names})
    for seq in longest_cycles(g):
        on_cycle = set(seq)
        cycle_edges = {tuple(sorted(p)) for p in zip(seq, seq[1:] + seq[:1])}
        chords = [e for e in g.edges if e[0] in on_cycle and e[1] in on_cycle and e not in cycle_edges]
        outside = sum(1 << v for v in range(g.n) if v not in on_cycle)
        for hub in seq:
            checks = {
                "dominating_hub": is_dominating(g, hub, seq),
                "chords_at_hub": all(hub in e for e in chords),
                "cycle_is_vertex_cover": is_vertex_cover(g, seq),
                "off_cycle_pendants_at_hub": _pendants_at(g, hub, outside),
            }
            if sum(checks.values()) > sum(best[1].values()):
                best = (hub, checks)
            if all(checks.values()):
                return best
    return best


def structural_audit(report: ExtremalReport, tol: float = DEFAULT_TOL) -> AuditResult:
    """Check the structure the extremal theorems prove for the unique maximiser.

    Raises AuditFailure when the report is not confirmed-unique or any check fails.
    """
    if report.verdict != "confirmed-unique" or len(report.maxima) != 1:
        raise AuditFailure(f"{report.spec.describe()}: audit needs a confirmed-unique report, got {report.verdict}")
    code = report.maxima[0][0]
    g = parse_graph6(code)
    spec = report.spec
    if spec.kind == "girth":
        hub, checks = _audit_girth(g, spec.value)
    else:
        hub, checks = _audit_circumference(g)
    checks = {"connected": is_connected(g), **checks}
    perron = q_radius(g, tol).perron
    checks["hub_max_perron"] = hub is not None and bool(perron[hub] >= perron.max() - 1e3 * tol)
    result = AuditResult(spec=spec, graph6=code, hub=hub, checks=checks)
    if not result.passed:
        failed = ", ".join(k for k, ok in checks.items() if not ok)
        raise AuditFailure(f"{spec.describe()}: {code} fails {failed}")
    log.info("audit %s: %s passes (hub %s)", spec.describe(), code, hub)
    return result


# ---- Property suites ----
class _Tally:
    def __init__(self):
        self.trials = 0
        self.violations = 0
        self.min_margin = math.inf
        self.details: Dict[str, Any] = {}

    def record(self, margin: float, ok: bool):
        self.trials += 1
        self.min_margin = min(self.min_margin, margin)
        if not ok:
            self.violations += 1

    def bump(self, key: str, by: int = 1):
        self.details[key] = self.details.get(key, 0) + by

    def star_side(self, g: Graph, q: float):
        """Delta + 1 <= q, with equality exactly for stars."""
        margin = q - star_lower(g)
        scale = 1e-8 * max(1.0, q)
        ok = abs(margin) <= scale if g.m == g.max_degree() else margin > scale
        self.bump("star_side_checks")
        self.details["star_side_min_margin"] = min(self.details.get("star_side_min_margin", math.inf), margin)
        if not ok:
            self.violations += 1
            self.bump("star_side_failures")


def _suite_switching(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()
    tally.details.update(adjacent_trials=0, nonadjacent_trials=0)
    while tally.trials < trials:
        g = random_connected_graph(rng)
        x = q_radius(g, tol).perron
        pairs = [(u, v) for u in range(g.n) for v in range(g.n)
                 if u != v and x[u] >= x[v] and switchable(g, u, v)]
        if not pairs:
            continue
        want_adjacent = bool(rng.random() < 0.5)
        chosen = [p for p in pairs if g.has_edge(*p) == want_adjacent] or pairs
        u, v = pick(rng, chosen)
        pool = switchable(g, u, v)
        size = int(rng.integers(1, len(pool) + 1))
        S = [int(s) for s in rng.choice(pool, size=size, replace=False)]
        margin = q_radius(switch(g, u, v, S), tol).q - q_radius(g, tol).q
        tally.bump("adjacent_trials" if g.has_edge(u, v) else "nonadjacent_trials")
        tally.record(margin, margin > STRICT_MARGIN)
    return tally


def _suite_feng_yu(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()

    def check(g: Graph) -> Tuple[float, bool]:
        bound = feng_yu_bound(g)
        q = q_radius(g, tol).q
        tally.star_side(g, q)
        scale = 1e-8 * max(1.0, q)
        margin = bound.value - q
        if bound.equality:
            return abs(margin), abs(margin) <= scale
        return margin, margin > scale

    while tally.trials < trials:
        margin, ok = check(random_connected_graph(rng))
        tally.record(margin, ok)
    named = {"C_5": cycle(5), "K_(2,3)": complete_bipartite(2, 3), "G_(6,4)": g_extremal(6, 4),
             "K_(1,4)": star(4)}
    tally.details["named"] = {}
    for name, g in named.items():
        bound = feng_yu_bound(g)
        _, ok = check(g)
        tally.details["named"][name] = {"equality": bound.equality, "ok": ok}
        if not ok:
            tally.violations += 1
    for s in range(3, 6):
        for t in range(0, 4):
            if pendant_clique_degree_bound(s, t) < q_radius(clique_with_pendants(s, t), tol).q - 1e-8:
                tally.violations += 1
                tally.bump("pendant_clique_failures")
    return tally


def _suite_clique(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()
    while tally.trials < trials:
        g = random_connected_graph(rng)
        bound = clique_bound(g, tol)
        q = q_radius(g, tol).q
        margin = bound.value - q
        scale = 1e-8 * max(1.0, q)
        tally.star_side(g, q)
        ok = abs(margin) <= scale if bound.equality else margin > -scale
        if bound.equality:
            tally.bump("equality_cases")
        tally.record(margin, ok)
    not_decreasing = [m for m in range(3, 31) if not clique_bound_monotone(m, tol)[1]]
    tally.details["monotone_sizes_checked"] = 28
    tally.details["monotone_failures"] = not_decreasing
    tally.violations += len(not_decreasing)
    return tally


def _suite_subdivision(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()
    while tally.trials < trials:
        g, (u, v) = bridged_pair(rng)
        if not is_bridge(g, u, v) or (u, v) not in internal_path_edges(g):
            tally.bump("resampled")
            continue
        margin = q_radius(g, tol).q - q_radius(subdivide(g, u, v), tol).q
        tally.record(margin, margin > STRICT_MARGIN)
    return tally


def _suite_interval(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    """Accepted certificates must bracket the dense eigensolver's q; wrong intervals must be rejected."""
    tally = _Tally()
    tally.details.update(accepted=0, rejected=0)
    while tally.trials < trials:
        g = random_connected_graph(rng)
        q_true = dense_q(g)
        x = q_radius(g, tol).perron
        y = x * np.exp(rng.normal(0.0, 0.05, g.n))
        ratios = (signless_laplacian(g) @ y) / y
        if tally.trials % 2 == 0:
            alpha, beta = ratios.min() - 1e-6, ratios.max() + 1e-6
        else:
            lo = q_true + float(rng.uniform(0.01, 1.0))
            alpha, beta = lo, lo + float(rng.uniform(0.01, 1.0))
        cert = interval_certificate(g, y, alpha, beta)
        if cert is None:
            tally.bump("rejected")
            tally.record(math.inf, True)
            continue
        tally.bump("accepted")
        margin = min(q_true - alpha, beta - q_true)
        tally.record(margin, margin > 0)
    return tally


def _contraction_candidates(g: Graph) -> List[Tuple[int, int]]:
    return [(u, v) for u, v in internal_path_edges(g) if not g.adjacency[u] & g.adjacency[v]]


def _suite_contraction(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()
    tally.details.update(certificates=0, certificate_failures=0, fallback_graphs=0)
    fallbacks = [dumbbell(3, 1), dumbbell(3, 2), dumbbell(4, 3), theta(2, 2, 2), theta(1, 3, 3), theta(2, 3, 4)]
    while tally.trials < trials:
        g = None
        for _ in range(MAX_REJECTIONS):
            candidate = random_connected_graph(rng)
            if _contraction_candidates(candidate):
                g = candidate
                break
        if g is None:
            g = pick(rng, fallbacks)
            tally.bump("fallback_graphs")
        u, v = pick(rng, _contraction_candidates(g))
        margin = q_radius(contract(g, u, v), tol).q - q_radius(g, tol).q
        ok = margin > STRICT_MARGIN
        if min(g.degree(u), g.degree(v)) >= 3:
            try:
                contraction_certificate(g, u, v, tol)
                tally.bump("certificates")
            except CertificateFailure:
                log.exception("contraction certificate failed on %s edge (%d,%d)", g, u, v)
                tally.bump("certificate_failures")
                ok = False
        tally.record(margin, ok)
    return tally


def _suite_connect(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()
    while tally.trials < trials:
        g = random_disconnected_graph(rng)
        reps = [pick(rng, list(bits(mask))) for mask in component_masks(g)]
        merged = merge_components(g, reps)
        margin = q_radius(merged, tol).q - q_radius(g, tol).q
        tally.record(margin, margin > STRICT_MARGIN and merged.m == g.m and is_connected(merged))
    return tally


def _identity_case(g: Graph, g2: Graph, added, removed, tol: float) -> Tuple[float, bool]:
    lhs, rhs = perturbation_identity(g, g2, added, removed, tol)
    allowed = 1e-8 * max(1.0, abs(lhs))
    return allowed - abs(lhs - rhs), abs(lhs - rhs) <= allowed


def _suite_perturbation(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()
    while tally.trials < trials:
        g = random_connected_graph(rng)
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        if not missing:
            continue
        removed = [pick(rng, list(g.edges))]
        added = [pick(rng, missing)]
        tally.record(*_identity_case(g, g.with_edges(added, removed), added, removed, tol))
    # K_(2,3) plus an isolated vertex rewired into G_(6,4): drop 1-4, hang 5 from 0
    k23 = from_edge_list(6, complete_bipartite(2, 3).edges)
    rewired = k23.with_edges(added=[(0, 5)], removed=[(1, 4)])
    _, ok = _identity_case(k23, rewired, [(0, 5)], [(1, 4)], tol)
    tally.details["k23_to_g64"] = ok
    if not ok:
        tally.violations += 1
    return tally


def _suite_edge_sum(rng: np.random.Generator, trials: int, tol: float) -> _Tally:
    tally = _Tally()
    while tally.trials < trials:
        n = int(rng.integers(2, 13))
        g = random_graph(rng, n, float(rng.uniform(0.1, 0.9)))
        x = random_vector(rng, n)
        a, b = quadratic_form(g, x), edge_sum_form(g, x)
        allowed = 1e-10 * max(1.0, abs(a))
        tally.record(allowed - abs(a - b), abs(a - b) <= allowed)
    return tally


SUITES: Dict[str, Tuple[Callable[[np.random.Generator, int, float], _Tally], int]] = {
    "2.1": (_suite_switching, 200),
    "2.2": (_suite_feng_yu, 200),
    "2.3": (_suite_clique, 200),
    "2.4": (_suite_subdivision, 200),
    "2.5": (_suite_interval, 500),
    "2.6": (_suite_contraction, 200),
    "connect": (_suite_connect, 200),
    "perturbation": (_suite_perturbation, 100),
    "edge-sum": (_suite_edge_sum, 500),
}


def normalize_suite_id(lemma: str) -> str:
    """Accept '2.4', 'lemma-2.4', 'lemma-2.5-soundness', 'claim-connect' and the like."""
    key = lemma.strip().lower()
    for prefix in ("lemma-", "lemma", "claim-"):
        if key.startswith(prefix):
            key = key[len(prefix):]
    key = key.removesuffix("-soundness")
    if key not in SUITES:
        raise InvalidParameter(f"unknown suite {lemma!r}; expected one of {sorted(SUITES)}")
    return key


def run_lemma_suite(lemma: str, trials: Optional[int] = None, seed: int = DEFAULT_SEED,
                    tol: float = DEFAULT_TOL) -> LemmaSuiteResult:
    """Seeded random trials of one property; deterministic given (lemma, trials, seed, tol)."""
    key = normalize_suite_id(lemma)
    runner, default_trials = SUITES[key]
    trials = default_trials if trials is None else trials
    if trials < 1:
        raise InvalidParameter(f"trials must be >= 1, got {trials}")
    start = time.perf_counter()
    tally = runner(np.random.default_rng(seed), trials, tol)
    log.info("suite %s: %d trials, %d violations, min margin %.3e (%.2fs)",
             key, tally.trials, tally.violations, tally.min_margin, time.perf_counter() - start)
    return LemmaSuiteResult(lemma=key, trials=tally.trials, violations=tally.violations,
                            min_margin=tally.min_margin, seed=seed, details=tally.details)
