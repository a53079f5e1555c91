# report.py
# Purpose: Serialise results for the CLI: JSON documents with q values as fixed-precision
#          decimal strings, a CSV summary of extremal reports, and plain-text lines.

from __future__ import annotations
import csv
import json
import math
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Any, Dict, Iterable, List, Optional, TextIO

from spex.certificates import BoundReport
from spex.enumeration import EnumerationStats, ExtremalReport
from spex.harness import AuditResult, LemmaSuiteResult

SIGNIFICANT_DIGITS = 15
CSV_FIELDS = ["spec", "verdict", "q_max", "gap", "unique_count", "wall_time"]


def decimal_string(x: Optional[float], digits: int = SIGNIFICANT_DIGITS) -> Optional[str]:
    """x rounded half-even to `digits` significant digits, as a string; None passes through."""
    if x is None:
        return None
    if math.isinf(x) or math.isnan(x):
        return str(x)
    d = Decimal(x)
    if d == 0:
        return "0"
    exponent = d.adjusted() - (digits - 1)
    return str(d.quantize(Decimal(1).scaleb(exponent), rounding=ROUND_HALF_EVEN))


# ---- Dict views ----
def stats_dict(stats: EnumerationStats, timings: bool = False) -> Dict[str, Any]:
    out = {"generated": stats.generated, "unique": stats.unique, "matching": stats.matching}
    if timings:
        out["wall_time"] = round(stats.wall_time, 3)
    return out


def extremal_dict(report: ExtremalReport, timings: bool = False) -> Dict[str, Any]:
    """Stable field order; wall time only on request so reports stay byte-identical across runs."""
    return {
        "spec": report.spec.describe(),
        "verdict": report.verdict,
        "maxima": [{"graph6": code, "q": decimal_string(q)} for code, q in report.maxima],
        "runner_up_q": decimal_string(report.runner_up_q),
        "gap": decimal_string(report.gap),
        "expected": report.expected,
        "expected_among_maxima": report.expected_among_maxima,
        "gap_tol": report.gap_tol,
        "stats": stats_dict(report.stats, timings),
        "notes": list(report.notes),
    }


def suite_dict(result: LemmaSuiteResult) -> Dict[str, Any]:
    return {
        "lemma": result.lemma,
        "trials": result.trials,
        "violations": result.violations,
        "min_margin": decimal_string(result.min_margin),
        "seed": result.seed,
        "details": result.details,
    }


def bounds_dict(report: BoundReport) -> Dict[str, Any]:
    return {
        "feng_yu": decimal_string(report.feng_yu),
        "clique_bound": decimal_string(report.clique_bound),
        "star_lower": decimal_string(report.star_lower),
        "equality": dict(report.equality_flags),
    }


def audit_dict(result: AuditResult) -> Dict[str, Any]:
    return {"spec": result.spec.describe(), "graph6": result.graph6, "hub": result.hub,
            "checks": dict(result.checks), "passed": result.passed}


# ---- Writers ----
def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def summary_row(report: ExtremalReport) -> Dict[str, Any]:
    return {
        "spec": report.spec.describe(),
        "verdict": report.verdict,
        "q_max": decimal_string(report.q_max),
        "gap": decimal_string(report.gap),
        "unique_count": report.stats.unique,
        "wall_time": f"{report.stats.wall_time:.3f}",
    }


def write_csv(rows: Iterable[Dict[str, Any]], stream: TextIO, fieldnames: Optional[List[str]] = None):
    rows = list(rows)
    fields = fieldnames or (list(rows[0]) if rows else CSV_FIELDS)
    writer = csv.DictWriter(stream, fieldnames=fields, extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in row.items()})


def extremal_text(report: ExtremalReport) -> List[str]:
    lines = [f"{report.spec.describe()}: {report.verdict}"]
    for code, q in report.maxima:
        lines.append(f"  max {code}  q={decimal_string(q)}")
    if report.runner_up_q is not None:
        lines.append(f"  runner-up q={decimal_string(report.runner_up_q)}  gap={decimal_string(report.gap)}")
    lines.extend(f"  note: {note}" for note in report.notes)
    return lines
