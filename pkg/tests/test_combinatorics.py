import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperbounds.combinatorics import a1, a2, binom, check_identity_eq2, check_identity_eq3


def comb0(n, k):
    """math.comb with the zero extension, as an independent oracle."""
    return math.comb(n, k) if n >= k >= 0 else 0


def test_binom_examples():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(4, -1) == 0
    assert binom(0, 0) == 1
    assert binom(-3, 0) == 0


def test_binom_large_exact():
    assert binom(200, 100) == math.comb(200, 100)


@given(st.integers(-5, 60), st.integers(-5, 60))
def test_binom_matches_oracle(n, k):
    assert binom(n, k) == comb0(n, k)


@given(st.integers(1, 80), st.integers(-3, 85))
def test_pascal(n, k):
    assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


@given(st.integers(0, 80), st.data())
def test_symmetry(n, data):
    k = data.draw(st.integers(0, n))
    assert binom(n, k) == binom(n, n - k)


def test_a1_examples():
    assert a1(3, 2) == 1
    assert a1(3, 3) == Fraction(1, 2)
    assert a1(5, 3) == Fraction(3, 2)
    assert a1(2, 3) == 0
    with pytest.raises(ValueError):
        a1(5, 1)


def test_a2_examples():
    assert a2(3, 2, 1) == 0
    assert a2(3, 2, 2) == 1
    assert a2(5, 3, 3) == 3
    with pytest.raises(ValueError):
        a2(5, 3, 0)
    with pytest.raises(ValueError):
        a2(5, 3, 6)


def a2_by_enumeration(n, k, s):
    """(k-1) A2 counts, over (k-1)-subsets T of n-1 points of which s-1 are marked,
    the marked points of T. Enumerate that directly."""
    points = range(n - 1)
    total = sum(sum(1 for p in t if p < s - 1) for t in itertools.combinations(points, k - 1))
    return Fraction(total, k - 1)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 9) for k in range(2, 6) if n >= k])
def test_a2_enumeration_oracle(n, k):
    for s in range(1, n + 1):
        assert a2(n, k, s) == a2_by_enumeration(n, k, s)
        assert a2(n, k, s) == (s - 1) * a1(n, k)


@given(st.integers(1, 40), st.integers(2, 10))
def test_a2_at_s1_is_zero(n, k):
    assert a2(n, k, 1) == 0


def test_eq2_examples():
    r = check_identity_eq2(5, 3, 3)
    assert (r.first_expr, r.middle_expr, r.third_expr) == (3, 5, 3)
    assert r.first_equals_third and not r.middle_equals_third
    r = check_identity_eq2(6, 4, 3)
    assert (r.first_expr, r.middle_expr, r.third_expr) == (4, 7, 4)
    assert r.first_equals_third and not r.middle_equals_third
    r = check_identity_eq2(4, 3, 2)
    assert (r.first_expr, r.third_expr) == (1, 1) and r.first_equals_third


def test_eq2_preconditions():
    with pytest.raises(ValueError):
        check_identity_eq2(5, 5, 3)
    with pytest.raises(ValueError):
        check_identity_eq2(5, 2, 3)
    with pytest.raises(ValueError):
        check_identity_eq2(5, 3, 1)


def eq2_by_enumeration(n, s, k):
    """First expression: (k-2)-subsets of a set split into parts of size s-3 and n-s+1."""
    return sum(1 for _ in itertools.combinations(range(n - 2), k - 2))


@pytest.mark.parametrize("n,s,k", [(5, 3, 3), (6, 4, 3), (7, 3, 4), (8, 5, 5), (9, 6, 2)])
def test_eq2_first_by_enumeration(n, s, k):
    assert check_identity_eq2(n, s, k).first_expr == eq2_by_enumeration(n, s, k)


def test_eq3_examples():
    r = check_identity_eq3(5, 3, 3)
    assert (r.lhs, r.rhs) == (6, 6) and r.holds
    assert check_identity_eq3(6, 4, 3).holds
    r = check_identity_eq3(3, 3, 2)
    assert (r.lhs, r.rhs) == (2, 2)
    with pytest.raises(ValueError):
        check_identity_eq3(3, 4, 2)


def test_identity_sweep_small():
    for n in range(4, 26):
        for s in range(3, n + 1):
            for k in range(2, 9):
                assert check_identity_eq3(n, s, k).holds
                assert a2(n, k, s) >= a1(n, k)
                if s < n:
                    assert check_identity_eq2(n, s, k).first_equals_third


def test_eq3_matches_float_free_oracle():
    for n, s, k in [(10, 4, 5), (25, 3, 8), (25, 24, 8)]:
        r = check_identity_eq3(n, s, k)
        lhs = sum((r_ + 1) * comb0(s - 1, r_ + 1) * comb0(n - s, k - r_ - 2) for r_ in range(k - 1))
        assert r.lhs == lhs == (s - 1) * comb0(n - 2, k - 2)
