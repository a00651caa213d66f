"""Exact binomial quantities and the two binomial identities behind the degree bounds.

Everything here is integer or Fraction arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def binom(n: int, k: int) -> int:
    """C(n, k) with the zero extension: 0 whenever n < k or k < 0."""
    if k < 0 or n < k:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        # out * (n - k + i) is divisible by i at every step
        out = out * (n - k + i) // i
    return out


def a1(n: int, k: int) -> Fraction:
    """C(n-2, k-2) / (k-1)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return Fraction(binom(n - 2, k - 2), k - 1)


def a2(n: int, k: int, s: int) -> Fraction:
    """sum_{r=0}^{k-2} (r+1)/(k-1) * C(s-1, r+1) * C(n-s, k-r-2)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 1 <= s <= n:
        raise ValueError(f"s must lie in 1..{n}, got {s}")
    total = sum((r + 1) * binom(s - 1, r + 1) * binom(n - s, k - r - 2) for r in range(k - 1))
    return Fraction(total, k - 1)


@dataclass(frozen=True)
class IdentityReport:
    n: int
    s: int
    k: int
    first_expr: int
    middle_expr: int
    third_expr: int
    first_equals_third: bool
    middle_equals_third: bool


def check_identity_eq2(n: int, s: int, k: int) -> IdentityReport:
    """Evaluate the three-way Vandermonde-type identity for C(n-2, k-2).

    The middle expression is known to disagree on small cases, so both
    equality flags are reported rather than asserted.
    """
    if not (n > s >= 3 and k >= 2):
        raise ValueError(f"need n > s >= 3 and k >= 2, got n={n} s={s} k={k}")
    first = sum(binom(s - 3, k - r - 2) * binom(n - s + 1, r) for r in range(k - 1))
    middle = sum(binom(s - 2, p - 1) * binom(n - p, k - p - 1) for p in range(1, k))
    third = binom(n - 2, k - 2)
    return IdentityReport(n, s, k, first, middle, third, first == third, middle == third)


@dataclass(frozen=True)
class Eq3Report:
    n: int
    s: int
    k: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_identity_eq3(n: int, s: int, k: int) -> Eq3Report:
    """Compare sum (r+1)C(s-1,r+1)C(n-s,k-r-2) with
    sum (k-1-r)C(s-2,k-r-1)C(n-s+1,r) + C(n-2,k-2)."""
    if not (n >= s >= 3 and k >= 2):
        raise ValueError(f"need n >= s >= 3 and k >= 2, got n={n} s={s} k={k}")
    lhs = sum((r + 1) * binom(s - 1, r + 1) * binom(n - s, k - r - 2) for r in range(k - 1))
    rhs = sum((k - 1 - r) * binom(s - 2, k - r - 1) * binom(n - s + 1, r) for r in range(k - 1))
    rhs += binom(n - 2, k - 2)
    return Eq3Report(n, s, k, lhs, rhs)


def identity_sweep(n_max: int, k_max: int):
    """Yield (eq2 report, eq3 report) for all 3 <= s < n <= n_max, 2 <= k <= k_max."""
    for n in range(4, n_max + 1):
        for s in range(3, n):
            for k in range(2, k_max + 1):
                yield check_identity_eq2(n, s, k), check_identity_eq3(n, s, k)
