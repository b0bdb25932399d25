from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from posetlin.errors import DuplicateAbscissa, NonPolynomial
from posetlin.lexsum import L_chain_substitution
from posetlin.poset import antichain_poset
from posetlin.polynomials import (
    MultiPoly, UniPoly, binomial_poly, denominator_primes, interpolate, is_prime, multi_fit,
    parity_split_fit,
)


def test_triangular_numbers():
    poly = interpolate([(n, n * (n + 1) // 2) for n in range(4)], 2)
    assert poly.coeffs == (0, Fraction(1, 2), Fraction(1, 2))
    assert str(poly) == "(n^2 + n)/2"


def test_constant():
    assert interpolate([(n, 7) for n in range(5)], 3).degree == 0


def test_exponential_rejected():
    with pytest.raises(NonPolynomial) as info:
        interpolate([(n, 2**n) for n in range(6)], 3)
    assert info.value.witness == (4, 16)


def test_duplicate_abscissa():
    with pytest.raises(DuplicateAbscissa):
        interpolate([(0, 1), (0, 1), (1, 2)], 1)


@given(st.lists(st.fractions(max_denominator=9), max_size=5), st.integers(-3, 3))
def test_interpolation_recovers_polynomial(coeffs, shift):
    poly = UniPoly(coeffs)
    d = max(poly.degree, 0)
    pts = [(x + shift, poly(x + shift)) for x in range(d + 3)]
    assert interpolate(pts, d) == poly


def test_parity_split_on_pascal_column():
    # odd rows of the m2 = 3 column vanish, even rows do not
    samples = [(m, L_chain_substitution(antichain_poset(2), [m, 3]).minus) for m in range(10)]
    even, odd = parity_split_fit(samples, 3)
    assert odd.is_zero() and not even.is_zero() and even.degree >= 1


def test_parity_split_trivial():
    even, odd = parity_split_fit([(m, 0) for m in range(6)], 2)
    assert even.is_zero() and odd.is_zero()
    even, odd = parity_split_fit([(m, m // 2) for m in range(8)], 1)
    assert even == UniPoly([0, Fraction(1, 2)])
    assert odd == UniPoly([Fraction(-1, 2), Fraction(1, 2)])


def test_denominator_primes():
    assert denominator_primes(UniPoly([1, 2, 3])) == set()
    assert denominator_primes(UniPoly([0, Fraction(1, 2), Fraction(1, 2)])) == {2}
    assert denominator_primes(binomial_poly(4)) == {2, 3}


def test_is_prime():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_multi_fit_one_variable_binomial():
    fit = multi_fit(lambda v: comb(v[0] + 3, 3), 1, 4)
    assert fit.total_degree == 3


def test_multi_fit_constant():
    assert multi_fit(lambda v: 1, 2, 3).total_degree == 0


def test_multi_fit_rejects_central_binomial():
    with pytest.raises(NonPolynomial):
        multi_fit(lambda v: comb(v[0] + v[1], v[0]), 2, 4)


def test_multi_fit_catches_off_grid_disagreement():
    # agrees with 0 on {0..2}^2 but not beyond
    f = lambda v: v[0] * (v[0] - 1) * (v[0] - 2) * (v[0] - 3)
    with pytest.raises(NonPolynomial):
        multi_fit(f, 2, 2)


@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                       st.integers(-5, 5), max_size=5))
@settings(deadline=None)
def test_multi_fit_recovers(terms):
    poly = MultiPoly(2, terms)
    fit = multi_fit(lambda v: poly(v), 2, 4)
    assert fit == poly


def test_arithmetic():
    x = UniPoly([0, 1])
    assert (x * x - x + UniPoly([1]))(3) == 7
    assert (x * Fraction(1, 3)).integer_form() == ([0, 1], 3)
    assert UniPoly().degree == -1 and UniPoly().format() == "0"
    assert UniPoly([-1, 0, -2]).format() == "-2*n^2 - 1"
