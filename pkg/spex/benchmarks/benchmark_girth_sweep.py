# benchmark_girth_sweep.py
# Purpose: The exhaustive girth-theorem sweep, g in {3, 4, 5} and g <= m <= 10, timed end to end.

import logging
import time

from spex.config import default_workers
from spex.harness import verify_girth_theorem

log = logging.getLogger(__name__)


def run(max_m: int = 10):
    workers = default_workers()
    start = time.perf_counter()
    failures = 0
    for g in (3, 4, 5):
        for m in range(g, max_m + 1):
            report = verify_girth_theorem(m, g, workers=workers, edge_cap=max_m)
            failures += report.verdict != "confirmed-unique"
    log.info("girth sweep: %d failures, %.1fs", failures, time.perf_counter() - start)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    run()
