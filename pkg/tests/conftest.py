import math
from decimal import Decimal, getcontext

import numpy as np
import pytest

from spex.constructions import complete_bipartite, cycle, dumbbell, g_extremal, h_extremal
from spex.graph import Graph, from_edge_list
from spex.graph6 import to_nx  # noqa: F401  re-exported for tests

getcontext().prec = 40

GOLDEN_TOL = 1e-8
SQRT5 = Decimal(5).sqrt()


def close(a: float, b, tol: float = GOLDEN_TOL) -> bool:
    return abs(Decimal(repr(a)) - Decimal(b)) <= Decimal(repr(tol))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


@pytest.fixture
def k23() -> Graph:
    return complete_bipartite(2, 3)


@pytest.fixture
def g64() -> Graph:
    return g_extremal(6, 4)


@pytest.fixture
def h84() -> Graph:
    return h_extremal(8, 4)


@pytest.fixture
def bowtie_bridge() -> Graph:
    return dumbbell(3, 1)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)
