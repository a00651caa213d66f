"""Spectral radius of hypergraph adjacency and signless-Laplacian tensors.

Tensors are never materialized: applying T to x^{k-1} walks the edge list, and
each edge contributes the product of its other k-1 coordinates to each member
(the 1/(k-1)! entry weight cancels the (k-1)! orderings of an edge).

The spectral radius is found by shifted power iteration. For any positive x the
ratios (T x^{k-1})_i / x_i^{k-1} bracket rho(T) (row sums of the diagonally
rescaled tensor), so every iterate carries a certified [lower, upper] interval
and the stopping rule is the width of that interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .hypergraph import Hypergraph, components

OPERATORS = ("adjacency", "signless")

# leave-one-out products fall back from division to prefix/suffix below this
_DIVIDE_FLOOR = 1e-150
_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class SpectralConfig:
    tolerance: float = 1e-10
    max_iterations: int = 1_000_000
    shift: float = 1.0

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not self.shift > 0:
            raise ValueError("shift must be positive")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be nonnegative")


@dataclass
class SpectralEstimate:
    lower: float
    upper: float
    value: float
    iterations: int
    converged: bool
    eigenvector: np.ndarray
    component_count: int = 1
    # (lower, upper) of every iterate, only filled when asked for
    history: list[tuple[float, float]] = field(default_factory=list, repr=False)


class EdgeOperator:
    """x -> T x^{k-1} for one hypergraph, with the edge array prepared once."""

    def __init__(self, h: Hypergraph, operator: str = "adjacency"):
        if operator not in OPERATORS:
            raise ValueError(f"unknown operator {operator!r}")
        self.n, self.k, self.operator = h.n, h.k, operator
        self.edges = np.asarray(h.edges, dtype=np.intp).reshape(-1, h.k) - 1
        self.flat = self.edges.ravel()
        self.degrees = np.bincount(self.flat, minlength=h.n).astype(float)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        xe = x[self.edges]
        if xe.size and xe.min() > _DIVIDE_FLOOR:
            others = xe.prod(axis=1)[:, None] / xe
        else:
            others = _leave_one_out(xe)
        # an empty weights array makes bincount return ints
        y = np.bincount(self.flat, weights=others.ravel(), minlength=self.n).astype(float, copy=False)
        if self.operator == "signless":
            y += self.degrees * x ** (self.k - 1)
        return y


def _leave_one_out(xe: np.ndarray) -> np.ndarray:
    m, k = xe.shape
    prefix = np.ones((m, k))
    suffix = np.ones((m, k))
    prefix[:, 1:] = np.cumprod(xe[:, :-1], axis=1)
    suffix[:, :-1] = np.cumprod(xe[:, :0:-1], axis=1)[:, ::-1]
    return prefix * suffix


def _positive_vector(h: Hypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (h.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({h.n},)")
    if not np.all(x > 0):
        raise ValueError("vector entries must be strictly positive")
    return x


def apply_adjacency(h: Hypergraph, x) -> np.ndarray:
    return EdgeOperator(h, "adjacency")(_positive_vector(h, x))


def apply_signless(h: Hypergraph, x) -> np.ndarray:
    return EdgeOperator(h, "signless")(_positive_vector(h, x))


def apply(h: Hypergraph, operator: str, x) -> np.ndarray:
    return EdgeOperator(h, operator)(_positive_vector(h, x))


def scaled_apply(h: Hypergraph, operator: str, z, x) -> np.ndarray:
    """Apply the diagonally conjugated tensor: (1/z_i^{k-1}) [T (z*x)^{k-1}]_i."""
    z = _positive_vector(h, z)
    x = _positive_vector(h, x)
    return EdgeOperator(h, operator)(z * x) / z ** (h.k - 1)


def cw_bracket(h: Hypergraph, operator: str, x) -> tuple[float, float]:
    """min and max of (T x^{k-1})_i / x_i^{k-1}; encloses rho(T) for any positive x."""
    x = _positive_vector(h, x)
    ratio = EdgeOperator(h, operator)(x) / x ** (h.k - 1)
    return float(ratio.min()), float(ratio.max())


def _iterate(op: Callable[[np.ndarray], np.ndarray], n: int, k: int,
             config: SpectralConfig, record: bool) -> SpectralEstimate:
    eps = config.shift
    x = np.ones(n)
    best_lo, best_hi = -np.inf, np.inf
    history = []
    iterations = 0
    converged = False
    while True:
        xp = x ** (k - 1)
        y = op(x) + eps * xp
        ratio = y / xp
        lo, hi = float(ratio.min()), float(ratio.max())
        if record:
            history.append((lo - eps, hi - eps))
        best_lo, best_hi = max(best_lo, lo), min(best_hi, hi)
        if best_hi - best_lo < config.tolerance:
            converged = True
            break
        if iterations >= config.max_iterations:
            break
        x = y if k == 2 else y ** (1.0 / (k - 1))
        x = np.maximum(x / x.max(), _TINY)
        iterations += 1
    lower, upper = best_lo - eps, best_hi - eps
    return SpectralEstimate(
        lower=lower,
        upper=upper,
        value=(best_lo + best_hi) / 2 - eps,
        iterations=iterations,
        converged=converged,
        eigenvector=x,
        history=history,
    )


def power_iteration(h: Hypergraph, operator: str = "adjacency", config: SpectralConfig | None = None,
                    scaling=None, record: bool = False) -> SpectralEstimate:
    """Shifted power iteration on a connected hypergraph.

    With `scaling` (a positive vector z) the iteration runs on the conjugated
    operator of `scaled_apply` instead; the spectrum is the same.
    """
    config = config or SpectralConfig()
    if h.m == 0:
        if h.n != 1:
            raise ValueError("power_iteration needs a connected hypergraph")
        return SpectralEstimate(0.0, 0.0, 0.0, 0, True, np.ones(1))
    if components(h).count != 1:
        raise ValueError("power_iteration needs a connected hypergraph; use spectral_radius")
    op = EdgeOperator(h, operator)
    if scaling is not None:
        z = _positive_vector(h, scaling)
        zp = z ** (h.k - 1)

        def scaled(x, op=op):
            return op(z * x) / zp

        return _iterate(scaled, h.n, h.k, config, record)
    return _iterate(op, h.n, h.k, config, record)


def spectral_radius(h: Hypergraph, operator: str = "adjacency",
                    config: SpectralConfig | None = None) -> SpectralEstimate:
    """rho of the adjacency or signless tensor of any hypergraph, one component at a time."""
    if operator not in OPERATORS:
        raise ValueError(f"unknown operator {operator!r}")
    config = config or SpectralConfig()
    groups = components(h).groups()
    vector = np.zeros(h.n)
    lower = upper = value = 0.0
    iterations = 0
    converged = True
    for group in groups:
        if len(group) == 1:
            continue
        sub = h if len(groups) == 1 else h.induced(group)
        est = power_iteration(sub, operator, config)
        vector[np.asarray(group) - 1] = est.eigenvector
        lower, upper, value = max(lower, est.lower), max(upper, est.upper), max(value, est.value)
        iterations = max(iterations, est.iterations)
        converged = converged and est.converged
    return SpectralEstimate(lower, upper, value, iterations, converged, vector, len(groups))


def dense_matrix(h: Hypergraph, operator: str = "adjacency") -> np.ndarray:
    """n x n matrix of a 2-uniform hypergraph (a graph)."""
    if h.k != 2:
        raise ValueError(f"dense matrix only exists for k = 2, got k={h.k}")
    M = np.zeros((h.n, h.n))
    for a, b in h.edges:
        M[a - 1, b - 1] = M[b - 1, a - 1] = 1.0
    if operator == "signless":
        M += np.diag(M.sum(axis=1))
    elif operator != "adjacency":
        raise ValueError(f"unknown operator {operator!r}")
    return M


def matrix_oracle(h: Hypergraph, operator: str = "adjacency", shift: float = 1.0,
                  max_squarings: int = 200) -> float:
    """Dominant eigenvalue of a connected graph's matrix by repeated squaring.

    (M + shift I)^(2^j), renormalized to max entry 1, tends to a rank-one
    projector onto the Perron vector; the eigenvalue is the Rayleigh quotient
    of M at that vector.
    """
    if h.k != 2:
        raise ValueError(f"matrix oracle needs k = 2, got k={h.k}")
    if components(h).count != 1:
        raise ValueError("matrix oracle needs a connected graph")
    M = dense_matrix(h, operator)
    if h.n == 1:
        return 0.0
    B = M + shift * np.eye(h.n)
    B /= B.max()
    for _ in range(max_squarings):
        B2 = B @ B
        B2 /= B2.max()
        done = np.max(np.abs(B2 - B)) < 1e-15
        B = B2
        if done:
            break
    v = B.sum(axis=1)
    v /= np.linalg.norm(v)
    return float(v @ M @ v)
