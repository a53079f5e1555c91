# benchmark_solver.py
# Purpose: Power iteration against the dense eigensolver on the named constructions.

import logging
import time

from spex.constructions import clique_with_pendants, complete, cycle, g_extremal, h_extremal, star
from spex.spectral import dense_q, q_radius

log = logging.getLogger(__name__)

GRAPHS = {
    "C_12": cycle(12),
    "K_10": complete(10),
    "K_(1,20)": star(20),
    "G_(20,5)": g_extremal(20, 5),
    "H_(30,8)": h_extremal(30, 8),
    "K_6^10": clique_with_pendants(6, 10),
}


def run(repeats: int = 20):
    for name, g in GRAPHS.items():
        start = time.perf_counter()
        for _ in range(repeats):
            q = q_radius(g).q
        power = (time.perf_counter() - start) / repeats
        start = time.perf_counter()
        for _ in range(repeats):
            ref = dense_q(g)
        dense = (time.perf_counter() - start) / repeats
        log.info("%-10s q=%.12f |diff|=%.1e  power %.2e s  dense %.2e s", name, q, abs(q - ref), power, dense)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    run()
