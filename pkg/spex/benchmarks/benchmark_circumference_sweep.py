# benchmark_circumference_sweep.py
# Purpose: Circumference-theorem runs with their structural audits, c = 4 (m = 8..11) and c = 5 (m = 11).

import logging
import time

from spex.config import default_workers
from spex.harness import structural_audit, verify_circumference_theorem

log = logging.getLogger(__name__)

CASES = [(8, 4), (9, 4), (10, 4), (11, 4), (11, 5)]


def run():
    workers = default_workers()
    start = time.perf_counter()
    for m, c in CASES:
        report = verify_circumference_theorem(m, c, workers=workers)
        audit = structural_audit(report)
        log.info("m=%d c=%d: %s, audit hub %s", m, c, report.verdict, audit.hub)
    log.info("circumference sweep: %.1fs", time.perf_counter() - start)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    run()
