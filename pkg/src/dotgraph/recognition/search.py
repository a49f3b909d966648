"""Numerical search for dot-product representations.

A found model is a positive certificate once :func:`verify_model` accepts
it.  ``NotFound`` is only evidence: recognition is NP-hard for d >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph import Graph, GraphError
from ..model import VectorModel, verify_model

__all__ = ["NotFound", "SearchBudget", "search_dpr", "hinge_objective"]

MARGIN = 1e-3
MIN_VERIFIED_MARGIN = 1e-6
MAX_VERTICES = 30


@dataclass(frozen=True)
class SearchBudget:
    restarts: int = 100
    iterations: int = 5000
    step: float = 0.01
    momentum: float = 0.9

    def __post_init__(self):
        if self.restarts < 1 or self.iterations < 1:
            raise ValueError("budget must allow at least one restart and one iteration")
        if not self.step > 0 or not 0 <= self.momentum < 1:
            raise ValueError("step must be positive and momentum in [0, 1)")


@dataclass(frozen=True)
class NotFound:
    best_residual: float
    restarts: int
    iterations: int

    def __bool__(self):
        return False


def _matrices(G: Graph):
    n = G.n
    idx = {v: i for i, v in enumerate(G.vertices)}
    A = np.zeros((n, n))
    for u, v in G.edge_list():
        A[idx[u], idx[v]] = A[idx[v], idx[u]] = 1.0
    N = 1.0 - np.eye(n) - A
    return A, N


def hinge_objective(X: np.ndarray, A: np.ndarray, N: np.ndarray, mu: float = MARGIN) -> np.ndarray:
    """Sum over unordered pairs of the edge and non-edge hinge terms.

    Works on a single (n, d) matrix or a stack (r, n, d).
    """
    D = X @ np.swapaxes(X, -1, -2)
    e = np.maximum(0.0, 1 + mu - D) * A
    ne = np.maximum(0.0, D - (1 - mu)) * N
    return 0.5 * (e + ne).sum(axis=(-1, -2))


def search_dpr(G: Graph, d: int, budget: SearchBudget | None = None, seed: int = 0):
    """Look for a d-dimensional model of ``G`` with threshold 1.

    All restarts run as one batch.  Restart ``r`` starts from
    ``uniform(-2, 2)`` drawn with ``default_rng([seed, r])``; the iterate is
    heavy-ball gradient descent on :func:`hinge_objective`.  Returns a float
    :class:`VectorModel` that the verifier accepts with margins at least
    1e-6, or :class:`NotFound` carrying the smallest objective seen.
    """
    if d not in (1, 2, 3, 4):
        raise ValueError(f"dimension must be 1..4, got {d}")
    if G.n > MAX_VERTICES:
        raise GraphError(f"search is limited to {MAX_VERTICES} vertices, got {G.n}")
    budget = budget or SearchBudget()
    n, R = G.n, budget.restarts
    A, N = _matrices(G)
    X = np.stack([np.random.default_rng([seed, r]).uniform(-2.0, 2.0, (n, d)) for r in range(R)])
    V = np.zeros_like(X)
    best = np.inf
    tried: set[int] = set()
    for _ in range(budget.iterations + 1):
        D = X @ X.transpose(0, 2, 1)
        short = A * (D < 1 + MARGIN)
        long_ = N * (D > 1 - MARGIN)
        loss = 0.5 * ((short * (1 + MARGIN - D)).sum(axis=(1, 2)) + (long_ * (D - 1 + MARGIN)).sum(axis=(1, 2)))
        best = min(best, float(loss.min()))
        for r in np.flatnonzero(loss == 0):
            if r in tried:
                continue
            tried.add(int(r))
            M = _to_model(G, X[r])
            rep = verify_model(M, G)
            if rep.accepted and _margins_ok(rep):
                return M
        grad = (long_ - short) @ X
        V = budget.momentum * V - budget.step * grad
        X = X + V
    return NotFound(best_residual=best, restarts=R, iterations=budget.iterations)


def _to_model(G: Graph, X: np.ndarray) -> VectorModel:
    return VectorModel.build({v: tuple(float(x) for x in X[i]) for i, v in enumerate(G.vertices)}, 1.0)


def _margins_ok(rep) -> bool:
    em, nd = rep.min_edge_margin, rep.min_nonedge_deficit
    return (em is None or em >= MIN_VERIFIED_MARGIN) and (nd is None or nd >= MIN_VERIFIED_MARGIN)
