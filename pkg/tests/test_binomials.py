"""Tests for binomial conventions and Macaulay expansion operators.

The expansion itself is checked against its defining constraints (value,
strictly decreasing tops, consecutive indices), which pin it down uniquely.
plus_plus is checked against an independent set-theoretic oracle: the
growth of the complement of a lex ideal, counted by hand from monomials.
minus_minus is checked against its dual minimality property.
"""

import pytest

from minreg.binomials import (BinomialExpansion, binom, macaulay_expand,
                              minus_minus, plus_plus)


def test_binom_conventions():
    assert binom(5, 2) == 10
    assert binom(3, 0) == 1
    assert binom(0, 0) == 1
    assert binom(2, 5) == 0
    assert binom(5, -1) == 0
    assert binom(-1, 0) == 0
    # exact big integers, no overflow
    assert binom(600, 300) == binom(599, 299) + binom(599, 300)


def test_expansion_constraints_enforced():
    with pytest.raises(ValueError):
        BinomialExpansion(3, (2, 4, 1))  # tops must strictly decrease
    with pytest.raises(ValueError):
        BinomialExpansion(3, (2,))  # top below its index
    with pytest.raises(ValueError):
        BinomialExpansion(2, (5, 3, 1))  # index would drop below 1
    e = BinomialExpansion(3, (5, 3, 1))
    assert e.value() == 10 + 3 + 1
    assert e.lowest_index == 1


def test_macaulay_expand_defining_properties():
    # value + constraint checks pin the expansion down uniquely, so this
    # is a complete correctness proof over the swept range
    for t in range(1, 7):
        for a in range(1, 401):
            e = macaulay_expand(a, t)
            assert e.base == t
            assert e.value() == a  # constructor enforced the shape already


def test_macaulay_expand_rejects_bad_input():
    with pytest.raises(ValueError):
        macaulay_expand(0, 3)
    with pytest.raises(ValueError):
        macaulay_expand(5, 0)
    with pytest.raises(ValueError):
        macaulay_expand(-2, 2)


@pytest.mark.parametrize("a,t,expected", [
    (12, 3, 17),
    (4, 1, 10),
    (1, 5, 1),
    (3, 2, 4),
    (13, 3, 19),
])
def test_plus_plus_values(a, t, expected):
    assert plus_plus(a, t) == expected


@pytest.mark.parametrize("a,t,expected", [
    (17, 4, 12),
    (13, 3, 8),
    (12, 3, 8),
    (4, 1, 1),
    (1, 5, 1),
])
def test_minus_minus_values(a, t, expected):
    assert minus_minus(a, t) == expected


def test_zero_extension():
    for t in range(1, 6):
        assert plus_plus(0, t) == 0
        assert minus_minus(0, t) == 0


def test_minus_minus_is_positive():
    # every term C(k-1, i-1) with k >= i >= 1 is at least 1
    for t in range(1, 7):
        for a in range(1, 401):
            assert minus_minus(a, t) >= 1


# ---------------------------------------------------------------------------
# independent oracle for plus_plus: growth of a lex quotient, by counting


def _monomials(nvars, degree):
    """All exponent tuples of the given total degree, nvars variables."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in _monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _lex_quotient_growth(nvars, degree, size):
    """Count degree+1 monomials all of whose divisors lie in the span of
    the `size` lex-smallest monomials of the given degree."""
    level = sorted(_monomials(nvars, degree))[:size]
    kept = set(level)
    grown = 0
    for m in _monomials(nvars, degree + 1):
        divisors = []
        for i in range(nvars):
            if m[i] > 0:
                divisors.append(m[:i] + (m[i] - 1,) + m[i + 1:])
        if all(d in kept for d in divisors):
            grown += 1
    return grown


def test_plus_plus_against_lex_growth():
    # Macaulay: the lex quotient achieves the growth bound exactly
    for degree in (1, 2, 3):
        total = len(_monomials(5, degree))
        for size in range(1, total + 1):
            assert plus_plus(size, degree) == _lex_quotient_growth(5, degree, size)


def test_plus_plus_against_lex_growth_few_variables():
    for nvars in (2, 3):
        for degree in (1, 2, 3, 4):
            total = len(_monomials(nvars, degree))
            for size in range(1, total + 1):
                assert plus_plus(size, degree) == _lex_quotient_growth(nvars, degree, size)


def test_minus_minus_minimality():
    # minus_minus(a, t) is the least b whose growth bound at t-1 reaches a
    for t in range(2, 7):
        for a in range(1, 301):
            b = minus_minus(a, t)
            assert plus_plus(b, t - 1) >= a
            if b > 1:
                assert plus_plus(b - 1, t - 1) < a


# ---------------------------------------------------------------------------
# interaction identities used throughout the regularity algorithms


def test_double_action_identity():
    # applying minus_minus then plus_plus one base lower recovers a, with a
    # correction of k(2) - k(1) when the expansion reaches index 1
    for t in range(2, 9):
        for a in range(1, 501):
            e = macaulay_expand(a, t)
            back = plus_plus(minus_minus(a, t), t - 1)
            if e.lowest_index > 1:
                assert back == a
            else:
                k1 = e.tops[-1]
                k2 = e.tops[-2] if len(e.tops) >= 2 else None
                assert k2 is not None  # t >= 2 forces at least two terms
                assert back == a + k2 - k1


def test_increment_identities():
    # how both operators move when a grows by one
    for t in range(1, 9):
        for a in range(1, 501):
            e = macaulay_expand(a, t)
            j = e.lowest_index
            k1 = e.tops[-1] if j == 1 else 0
            assert plus_plus(a + 1, t) == plus_plus(a, t) + 1 + k1
            if j > 1:
                assert minus_minus(a + 1, t) == minus_minus(a, t) + 1
            else:
                assert minus_minus(a + 1, t) == minus_minus(a, t)


# ---------------------------------------------------------------------------
# alternative strictly decreasing writings (exhaustive search)


def _writings_below_greedy(a, t, cap):
    """All writings a = sum C(h_i, i) with i = t, t-1, ..., consecutive,
    h strictly decreasing, h_i >= i, and h_t < cap.  Returned as tuples of
    per-position term values.  Index may run all the way down to 0."""
    found = []

    def rec(rem, index, bound, values):
        if rem == 0:
            found.append(tuple(values))
            return
        if index < 0:
            return
        for h in range(index, bound):
            term = binom(h, index)
            if term > rem:
                break
            rec(rem - term, index - 1, h, values + [term])

    rec(a, t, cap, [])
    return found


def test_alternative_writing_exists_only_for_pure_binomials():
    for t in range(1, 6):
        for a in range(1, 301):
            e = macaulay_expand(a, t)
            greedy_top = e.tops[0]
            alternatives = _writings_below_greedy(a, t, greedy_top)
            pure = a == binom(greedy_top, t)
            if pure and greedy_top > t:
                k = greedy_top
                expected = tuple(binom(k - 1 - i, t - i) for i in range(t + 1))
                assert alternatives, (a, t)
                for alt in alternatives:
                    assert alt == expected
            else:
                # either not a single binomial, or C(t, t) = 1: no room below
                assert alternatives == [], (a, t)
