from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_monoid.lang import growth_series, irreducible_dfa
from dihedral_monoid.lang.growth import berlekamp_massey, rational_from_coefficients, series_expand
from dihedral_monoid.oracle import count_classes


def test_bm_fibonacci():
    fib = [1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert berlekamp_massey(fib) == [1, -1, -1]
    assert rational_from_coefficients(fib, 2) == ((1,), (1, -1, -1))


def test_bm_geometric_and_zero():
    assert rational_from_coefficients([1, 3, 9, 27, 81], 2) == ((1,), (1, -3))
    assert rational_from_coefficients([0, 0, 0], 1) == ((0,), (1,))


def test_too_few_terms():
    with pytest.raises(ValueError):
        rational_from_coefficients([1, 2], 1)


def test_series_expand():
    assert series_expand((1,), (1, -2), 5) == [1, 2, 4, 8, 16]
    with pytest.raises(ValueError):
        series_expand((1,), (0, 1), 2)
    with pytest.raises(ValueError):
        series_expand((1,), (2,), 1)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=4),
    st.lists(st.integers(-4, 4), min_size=0, max_size=3),
)
def test_bm_recovers_random_rational(num, tail):
    den = [1] + tail
    coeffs = series_expand(num, den, 2 * 8 + 1)
    n2, d2 = rational_from_coefficients(coeffs, 8)
    assert series_expand(n2, d2, len(coeffs)) == coeffs
    assert len(d2) <= len(den)


def test_growth_4_3(p43):
    g = growth_series(irreducible_dfa(p43), 6)
    assert g.coefficients == (1, 4, 16, 64, 249, 972, 3792)
    assert g.denominator[0] > 0
    assert g.satisfies_recurrence()
    assert g.expand(7) == list(g.coefficients)


def test_growth_shape(pres):
    n = pres.n
    g = growth_series(irreducible_dfa(pres), n)
    assert list(g.coefficients[:n]) == [n**L for L in range(n)]
    assert g.coefficients[n] == n**n - 2 * n + 1 == count_classes(pres, n)
    # generating function reproduces a long prefix
    far = growth_series(irreducible_dfa(pres), 3 * n)
    assert far.numerator == g.numerator and far.denominator == g.denominator
    assert g.expand(3 * n + 1) == list(far.coefficients)


def test_negative_length(p43):
    with pytest.raises(ValueError):
        growth_series(irreducible_dfa(p43), -1)
