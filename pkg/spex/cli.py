# cli.py
# Purpose: Command-line front end. Every library capability is a subcommand; results go to
#          stdout (or --out) as JSON, CSV or text, logs go to stderr.
#
# Exit codes: 0 success / confirmed, 1 violation / refuted / audit failure, 2 usage or format error.

from __future__ import annotations
import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from spex import constructions
from spex.certificates import bound_report
from spex.config import OUTPUT_FORMATS, SpexConfig
from spex.enumeration import FamilySpec, enumerate_family
from spex.errors import InvalidParameter, SpexError
from spex.graph import Graph
from spex.graph6 import parse_graph6, read_graph6_file, to_graph6, write_graph6_file
from spex.harness import (explore_open_question, run_lemma_suite, structural_audit, verify_circumference_theorem,
                          verify_girth_theorem)
from spex.report import (audit_dict, bounds_dict, decimal_string, dumps, extremal_dict, extremal_text, stats_dict,
                         suite_dict, summary_row, write_csv)
from spex.spectral import dense_q, q_radius

log = logging.getLogger("spex")

# name -> (builder, parameter names)
CONSTRUCTIONS: Dict[str, Tuple[Callable[..., Graph], Tuple[str, ...]]] = {
    "gmg": (constructions.g_extremal, ("m", "g")),
    "hmc": (constructions.h_extremal, ("m", "c")),
    "cycle": (constructions.cycle, ("n",)),
    "star": (constructions.star, ("t",)),
    "clique-pendant": (constructions.clique_with_pendants, ("w", "t")),
    "complete-bipartite": (constructions.complete_bipartite, ("s", "t")),
}


class Outcome:
    """What a subcommand produced: a JSON payload, text lines, CSV rows and an exit code."""

    def __init__(self, payload: Any, text: List[str], rows: Optional[List[Dict[str, Any]]] = None, code: int = 0):
        self.payload = payload
        self.text = text
        self.rows = rows if rows is not None else (payload if isinstance(payload, list) else [payload])
        self.code = code


# ---- Input ----
def read_graphs(source: str) -> List[Graph]:
    """graph6 from an argument, a file of one graph per line, or stdin when source is '-'."""
    if source == "-":
        return [parse_graph6(line) for line in sys.stdin if line.strip()]
    if source and Path(source).is_file():
        return read_graph6_file(source)
    return [parse_graph6(source)]


# ---- Subcommands ----
def cmd_q(args, cfg: SpexConfig) -> Outcome:
    results, text, code = [], [], 0
    for g in read_graphs(args.input):
        spec = q_radius(g, cfg.tolerance, cfg.max_iter)
        entry: Dict[str, Any] = {"graph6": to_graph6(g), "q": decimal_string(spec.q),
                                 "residual": f"{spec.residual:.3e}", "iterations": spec.iterations}
        if args.perron:
            entry["perron"] = [decimal_string(x) for x in spec.perron]
        line = f"{entry['graph6']}  q={entry['q']}"
        if args.check:
            reference = dense_q(g)
            agrees = abs(reference - spec.q) <= 1e-8 * max(1.0, reference)
            entry["dense_q"] = decimal_string(reference)
            entry["agrees"] = agrees
            line += f"  dense={entry['dense_q']} {'ok' if agrees else 'MISMATCH'}"
            if not agrees:
                code = 1
        results.append(entry)
        text.append(line)
    payload = results[0] if len(results) == 1 else results
    return Outcome(payload, text, rows=results, code=code)


def cmd_construct(args, cfg: SpexConfig) -> Outcome:
    builder, names = CONSTRUCTIONS[args.name]
    if len(args.params) != len(names):
        raise InvalidParameter(f"construct {args.name} takes {' '.join(names)}, got {len(args.params)} values")
    code = to_graph6(builder(*args.params))
    return Outcome({"name": args.name, **dict(zip(names, args.params)), "graph6": code}, [code])


def _verify(args, cfg: SpexConfig):
    common = dict(gap_tol=cfg.gap_tol, unique_gap=cfg.unique_gap, workers=cfg.workers,
                  tol=cfg.tolerance, edge_cap=cfg.edge_cap)
    if args.kind == "girth":
        if args.at_least:
            raise InvalidParameter("--at-least applies to circumference only")
        return verify_girth_theorem(args.m, args.value, **common)
    return verify_circumference_theorem(args.m, args.value, at_least=args.at_least, **common)


def cmd_verify(args, cfg: SpexConfig) -> Outcome:
    report = _verify(args, cfg)
    return Outcome(extremal_dict(report, cfg.timings), extremal_text(report), [summary_row(report)],
                   code=1 if report.verdict == "refuted" else 0)


def cmd_audit(args, cfg: SpexConfig) -> Outcome:
    report = _verify(args, cfg)
    result = structural_audit(report, cfg.tolerance)
    checks = [f"  {name}: {'ok' if ok else 'FAIL'}" for name, ok in result.checks.items()]
    return Outcome({"report": extremal_dict(report, cfg.timings), "audit": audit_dict(result)},
                   extremal_text(report) + [f"audit hub={result.hub}"] + checks, [summary_row(report)])


def cmd_explore(args, cfg: SpexConfig) -> Outcome:
    reports = explore_open_question(args.c, gap_tol=cfg.gap_tol, workers=cfg.workers,
                                    tol=cfg.tolerance, edge_cap=cfg.edge_cap)
    text = [line for r in reports for line in extremal_text(r)]
    return Outcome([extremal_dict(r, cfg.timings) for r in reports], text, [summary_row(r) for r in reports])


def cmd_enumerate(args, cfg: SpexConfig) -> Outcome:
    if args.girth is not None:
        spec = FamilySpec.girth(args.m, args.girth)
    elif args.circ is not None:
        spec = FamilySpec.circumference(args.m, args.circ, args.at_least)
    else:
        spec = FamilySpec(args.m)
    graphs, stats = enumerate_family(spec, workers=cfg.workers, edge_cap=cfg.edge_cap)
    sys.stderr.write(json.dumps({"spec": spec.describe(), **stats_dict(stats, cfg.timings)}) + "\n")
    if cfg.out_path:
        write_graph6_file(cfg.out_path, graphs)
        return Outcome(None, [])
    return Outcome(None, [to_graph6(g) for g in graphs])


def cmd_check_lemma(args, cfg: SpexConfig) -> Outcome:
    result = run_lemma_suite(args.lemma, trials=args.trials, seed=cfg.seed, tol=cfg.tolerance)
    text = [f"{result.lemma}: {result.trials} trials, {result.violations} violations, "
            f"min margin {decimal_string(result.min_margin)} (seed {result.seed})"]
    return Outcome(suite_dict(result), text, code=0 if result.passed else 1)


def cmd_bounds(args, cfg: SpexConfig) -> Outcome:
    g = parse_graph6(args.graph6)
    payload = bounds_dict(bound_report(g, cfg.tolerance))
    text = [f"{k}: {payload[k]}" for k in ("feng_yu", "clique_bound", "star_lower")]
    text += [f"equality {k}: {v}" for k, v in payload["equality"].items() if v]
    return Outcome(payload, text)


# ---- Parser ----
def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, help="Power-iteration residual tolerance (default 1e-10)")
    common.add_argument("--edge-cap", type=int, help="Largest edge count enumerated (default 12)")
    common.add_argument("--workers", type=int, help="Worker processes (default: physical cores)")
    common.add_argument("--seed", type=int, help="Seed for the property suites (default 42)")
    common.add_argument("--output", choices=OUTPUT_FORMATS, help="Result format (default json)")
    common.add_argument("--out", type=Path, dest="out_path", help="Write results to this file instead of stdout")
    common.add_argument("--timings", action="store_true", default=None, help="Include wall times in reports")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    noise.add_argument("-q", "--quiet", action="store_true", help="Warnings and errors only")
    return common


def _family_arguments(p: argparse.ArgumentParser):
    p.add_argument("kind", choices=("girth", "circumference"))
    p.add_argument("m", type=int, help="Edge count")
    p.add_argument("value", type=int, help="Girth g or circumference c")
    p.add_argument("--at-least", action="store_true", help="Circumference at least c instead of exactly c")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    ap = argparse.ArgumentParser(prog="spex", description="Signless Laplacian spectral radius toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("q", parents=[common], help="Spectral radius of graph6 input")
    p.add_argument("input", help="graph6 string, file with one graph per line, or - for stdin")
    p.add_argument("--perron", action="store_true", help="Also print the Perron vector")
    p.add_argument("--check", action="store_true", help="Cross-check against the dense eigensolver")
    p.set_defaults(handler=cmd_q)

    p = sub.add_parser("construct", parents=[common], help="graph6 of a named construction")
    p.add_argument("name", choices=sorted(CONSTRUCTIONS))
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="Exhaustively check an extremal theorem instance")
    _family_arguments(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("audit", parents=[common], help="Verify, then audit the structure of the maximiser")
    _family_arguments(p)
    p.set_defaults(handler=cmd_audit)

    p = sub.add_parser("explore", parents=[common], help="Exploratory reports for m in [c+1, 3c-5]")
    p.add_argument("c", type=int)
    p.set_defaults(handler=cmd_explore)

    p = sub.add_parser("enumerate", parents=[common], help="graph6 of every class with m edges")
    p.add_argument("m", type=int)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--girth", type=int)
    which.add_argument("--circ", type=int)
    p.add_argument("--at-least", action="store_true", help="With --circ: circumference at least c")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("check-lemma", parents=[common], help="Seeded property suite")
    p.add_argument("lemma", help="2.1 .. 2.6, connect, perturbation or edge-sum")
    p.add_argument("--trials", type=int)
    p.set_defaults(handler=cmd_check_lemma)

    p = sub.add_parser("bounds", parents=[common], help="Upper and lower bounds on q with equality flags")
    p.add_argument("graph6")
    p.set_defaults(handler=cmd_bounds)
    return ap


# ---- Output ----
def emit(outcome: Outcome, cfg: SpexConfig):
    if outcome.payload is None and not outcome.text:
        return
    if cfg.output == "json" and outcome.payload is not None:
        body = dumps(outcome.payload) + "\n"
    elif cfg.output == "csv" and outcome.payload is not None:
        buffer = io.StringIO()
        write_csv(outcome.rows, buffer)
        body = buffer.getvalue()
    else:
        body = "".join(line + "\n" for line in outcome.text)
    if cfg.out_path:
        cfg.out_path.write_text(body, encoding="utf-8")
        log.info("wrote %s", cfg.out_path)
    else:
        sys.stdout.write(body)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        cfg = SpexConfig.from_env().with_overrides(
            tolerance=args.tolerance, edge_cap=args.edge_cap, workers=args.workers, seed=args.seed,
            output=args.output, out_path=args.out_path, timings=args.timings,
        ).validate()
        outcome = args.handler(args, cfg)
        emit(outcome, cfg)
        return outcome.code
    except SpexError as e:
        log.error("%s: %s", type(e).__name__, e)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
