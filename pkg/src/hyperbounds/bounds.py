"""Degree-sequence upper bounds on the adjacency and signless-Laplacian spectral radii.

For a sorted degree sequence d_1 >= ... >= d_n and each cut point s, the bound is
the larger root of

    x^2 - b x - c = 0,   b = w d_s - A2 + (s-2) A1

with w = 1 for the adjacency bound (phi_s) and w = 2 for the signless one (psi_s).
The discriminant is kept in the form

    (w d_s + s A1 - A2)^2 + 4 w A1 sum_{t<s} (d_t - d_s)

and c is recovered from it exactly. A1, A2, b, c and the discriminant are
Fractions; only the final square root is floating, and it is skipped when the
discriminant is a perfect rational square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinatorics import a1, a2, binom
from .hypergraph import DegreeSequence

KINDS = ("adjacency", "signless")
_WEIGHT = {"adjacency": 1, "signless": 2}
COROLLARY_MODES = ("theorem-consistent", "as-printed")


@dataclass(frozen=True)
class Quadratic:
    """x^2 - b x - c = 0 with exact coefficients and discriminant b^2 + 4c."""

    b: Fraction
    c: Fraction
    disc: Fraction

    def root(self) -> float:
        """Larger root. Exact when the discriminant is a rational square."""
        exact = exact_sqrt(self.disc)
        if exact is not None:
            return float((self.b + exact) / 2)
        sq = math.sqrt(self.disc)
        b = float(self.b)
        if b >= 0:
            return (b + sq) / 2
        # b < 0: the conjugate form avoids cancelling sq against -b
        return 2 * float(self.c) / (sq - b)

    def relative_residual(self, x: float) -> float:
        """|x^2 - b x - c| scaled by the size of its terms, evaluated exactly."""
        xf = Fraction(x)
        res = abs(xf * xf - self.b * xf - self.c)
        scale = xf * xf + abs(self.b * xf) + abs(self.c)
        if scale == 0:
            return float(res)
        return float(res / scale)


def exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _degrees(d: DegreeSequence | Sequence[int], n: int) -> tuple[int, ...]:
    degs = tuple(d.degrees if isinstance(d, DegreeSequence) else d)
    if len(degs) != n:
        raise ValueError(f"degree sequence has {len(degs)} entries, expected n={n}")
    if any(x < 0 for x in degs):
        raise ValueError("degrees must be nonnegative")
    if any(x < y for x, y in zip(degs, degs[1:])):
        raise ValueError("degree sequence must be sorted non-increasing")
    return degs


def _check(n: int, k: int, s: int) -> None:
    if k < 2 or n < k:
        raise ValueError(f"need n >= k >= 2, got n={n} k={k}")
    if not 1 <= s <= n:
        raise ValueError(f"s must lie in 1..{n}, got {s}")


def _build(w: int, ds: int, excess: int, A1: Fraction, A2: Fraction, s: int) -> Quadratic:
    b = w * ds - A2 + (s - 2) * A1
    disc = (w * ds + s * A1 - A2) ** 2 + 4 * w * A1 * excess
    return Quadratic(b, (disc - b * b) / 4, disc)


def quadratic(d: DegreeSequence | Sequence[int], n: int, k: int, s: int,
              kind: str = "adjacency") -> Quadratic:
    """The exact quadratic whose larger root is phi_s (adjacency) or psi_s (signless)."""
    _check(n, k, s)
    degs = _degrees(d, n)
    ds = degs[s - 1]
    excess = sum(degs[t] - ds for t in range(s - 1))
    return _build(_WEIGHT[kind], ds, excess, a1(n, k), a2(n, k, s), s)


def phi(d: DegreeSequence | Sequence[int], n: int, k: int, s: int) -> float:
    return quadratic(d, n, k, s, "adjacency").root()


def psi(d: DegreeSequence | Sequence[int], n: int, k: int, s: int) -> float:
    return quadratic(d, n, k, s, "signless").root()


@dataclass(frozen=True)
class BoundReport:
    kind: str
    n: int
    k: int
    per_s: tuple[tuple[int, float], ...]
    argmin_s: int
    min_value: float
    exact_quadratic_residual: float

    def values(self) -> list[float]:
        return [v for _, v in self.per_s]


def bound(d: DegreeSequence | Sequence[int], n: int, k: int, kind: str) -> BoundReport:
    if kind not in _WEIGHT:
        raise ValueError(f"unknown bound kind {kind!r}")
    _check(n, k, 1)
    degs = _degrees(d, n)
    A1 = a1(n, k)
    w = _WEIGHT[kind]
    per_s = []
    worst = 0.0
    excess = 0
    for s in range(1, n + 1):
        ds = degs[s - 1]
        if s > 1:
            # each of the s-1 earlier terms of sum_{t<s}(d_t - d_s) grows by d_{s-1} - d_s
            excess += (s - 1) * (degs[s - 2] - ds)
        quad = _build(w, ds, excess, A1, a2(n, k, s), s)
        value = quad.root()
        worst = max(worst, quad.relative_residual(value))
        per_s.append((s, value))
    # min() keeps the first minimum, i.e. the smallest s on ties
    argmin_s, min_value = min(per_s, key=lambda sv: sv[1])
    return BoundReport(kind, n, k, tuple(per_s), argmin_s, min_value, worst)


def adjacency_bound(d: DegreeSequence | Sequence[int], n: int, k: int) -> BoundReport:
    return bound(d, n, k, "adjacency")


def signless_bound(d: DegreeSequence | Sequence[int], n: int, k: int) -> BoundReport:
    return bound(d, n, k, "signless")


def _corollary(w: int, n: int, k: int, delta: int, m: int, mode: str) -> float:
    if k < 2 or n < k:
        raise ValueError(f"need n >= k >= 2, got n={n} k={k}")
    if delta < 0:
        raise ValueError("minimum degree must be nonnegative")
    if k * m < n * delta:
        raise ValueError(f"inconsistent inputs: k*m={k * m} < n*delta={n * delta}")
    if mode == "theorem-consistent":
        A2 = Fraction(binom(n - 1, k - 1))
    elif mode == "as-printed":
        A2 = Fraction(binom(n - 1, k - 2))
    else:
        raise ValueError(f"unknown corollary mode {mode!r}")
    # s = n: d_n = delta, sum_t (d_t - d_n) = km - n delta
    return _build(w, delta, k * m - n * delta, a1(n, k), A2, n).root()


def corollary_rho(n: int, k: int, delta: int, m: int, mode: str = "theorem-consistent") -> float:
    """Adjacency bound from minimum degree and edge count only."""
    return _corollary(1, n, k, delta, m, mode)


def corollary_q(n: int, k: int, delta: int, m: int, mode: str = "theorem-consistent") -> float:
    """Signless-Laplacian bound from minimum degree and edge count only."""
    return _corollary(2, n, k, delta, m, mode)
