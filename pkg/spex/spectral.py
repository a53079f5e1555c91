# spectral.py
# Purpose: Signless Laplacian Q(G) = D(G) + A(G) and its spectral radius q(G) with a
#          Perron vector, by shifted power iteration on each connected component.

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import linalg

from spex.errors import ConvergenceError, InvalidInput
from spex.graph import Graph, bits, component_masks

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 1_000_000


@dataclass(frozen=True)
class SpectralResult:
    q: float
    perron: np.ndarray    # unit, nonnegative, length n
    residual: float       # max-norm of Q x - q x
    iterations: int


def signless_laplacian(g: Graph) -> np.ndarray:
    """Dense n x n matrix with degrees on the diagonal and 1 for every edge."""
    Q = np.zeros((g.n, g.n), dtype=float)
    if g.m:
        e = np.asarray(g.edges, dtype=int)
        Q[e[:, 0], e[:, 1]] = 1.0
        Q[e[:, 1], e[:, 0]] = 1.0
    Q[np.diag_indices(g.n)] = g.degrees()
    return Q


def _power_iteration(Q: np.ndarray, start: np.ndarray, shift: float, tol: float, max_iter: int):
    x = start / np.linalg.norm(start)
    for it in range(1, max_iter + 1):
        y = Q @ x
        q = float(x @ y)
        residual = float(np.max(np.abs(y - q * x)))
        if residual <= tol:
            return q, x, residual, it
        z = y - shift * x
        x = z / np.linalg.norm(z)
    raise ConvergenceError(f"power iteration did not reach residual {tol:g} in {max_iter} iterations")


def q_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Largest eigenvalue of Q(g) with its Perron vector.

    Each component is solved on its own; q is the maximum over components and the
    returned Perron vector lives on the first component attaining it (zero elsewhere).
    """
    if tol <= 0:
        raise InvalidInput(f"tolerance must be positive, got {tol}")
    Q = signless_laplacian(g)
    degrees = np.asarray(g.degrees(), dtype=float)
    best = None
    total_iter = 0
    for mask in component_masks(g):
        idx = np.fromiter(bits(mask), dtype=int)
        if idx.size == 1:
            q, x, residual, it = 0.0, np.ones(1), 0.0, 0
        else:
            sub = Q[np.ix_(idx, idx)]
            # Q - sigma I keeps q dominant while pulling the rest of the spectrum towards 0;
            # sigma < q/2 is guaranteed because q >= max degree + 1
            shift = (degrees[idx].max() + 1.0) / 3.0
            q, x, residual, it = _power_iteration(sub, degrees[idx] + 1.0, shift, tol, max_iter)
        total_iter += it
        if best is None or q > best[0]:
            best = (q, idx, x, residual)

    q, idx, x, residual = best
    perron = np.zeros(g.n)
    perron[idx] = np.abs(x)
    log.debug("q=%.12f residual=%.2e iterations=%d", q, residual, total_iter)
    return SpectralResult(q=q, perron=perron, residual=residual, iterations=total_iter)


def dense_q(g: Graph) -> float:
    """Reference value from the dense symmetric eigensolver, used for cross-checks."""
    return float(linalg.eigh(signless_laplacian(g), eigvals_only=True, check_finite=False)[-1])


# ---- Quadratic forms ----
def _as_vector(g: Graph, x: Sequence[float]) -> np.ndarray:
    v = np.asarray(x, dtype=float)
    if v.shape != (g.n,):
        raise InvalidInput(f"vector has shape {v.shape}, expected ({g.n},)")
    return v


def quadratic_form(g: Graph, x: Sequence[float]) -> float:
    v = _as_vector(g, x)
    return float(v @ signless_laplacian(g) @ v)


def edge_sum_form(g: Graph, x: Sequence[float]) -> float:
    """x^T Q x written as the sum over edges of (x_u + x_v)^2."""
    v = _as_vector(g, x)
    if not g.m:
        return 0.0
    e = np.asarray(g.edges, dtype=int)
    return float(np.sum((v[e[:, 0]] + v[e[:, 1]]) ** 2))


def rayleigh(g: Graph, x: Sequence[float]) -> float:
    v = _as_vector(g, x)
    norm2 = float(v @ v)
    if norm2 == 0.0:
        raise InvalidInput("Rayleigh quotient of the zero vector")
    return quadratic_form(g, v) / norm2
