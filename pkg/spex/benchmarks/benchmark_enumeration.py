# benchmark_enumeration.py
# Purpose: Enumeration throughput, unconstrained and girth-pruned, for growing m.

import logging
import time

from spex.config import default_workers
from spex.enumeration import FamilySpec, clear_cache, enumerate_family

log = logging.getLogger(__name__)


def run(max_m: int = 9):
    workers = default_workers()
    for spec_of in (lambda m: FamilySpec(m), lambda m: FamilySpec.girth(m, 4)):
        clear_cache()
        for m in range(3, max_m + 1):
            spec = spec_of(m)
            start = time.perf_counter()
            graphs, stats = enumerate_family(spec, workers=workers, edge_cap=max_m)
            log.info("%-24s %6d classes %6d matching  %.2fs", spec.describe(), stats.unique, len(graphs),
                     time.perf_counter() - start)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    run()
