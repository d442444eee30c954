"""Polynomial arithmetic, cyclotomic factorisation and primitive prime divisors."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from weylhc.cyclo import (
    CyclotomicProduct,
    LaurentPoly,
    cyclotomic,
    euler_phi,
    factor_cyclotomic_substitution,
    factor_into_cyclotomics,
    zsigmondy,
)

q = LaurentPoly.monomial(1)


def brute_primitive(qv, n):
    """Smallest prime dividing q^n - 1 but no q^m - 1 with m < n."""
    for r in sorted(sympy.factorint(qv**n - 1)):
        if all((qv**m - 1) % r for m in range(1, n)):
            return r
    return None


@pytest.mark.parametrize("n, text", [(3, "q^2 + q + 1"), (6, "q^2 - q + 1"), (12, "q^4 - q^2 + 1"), (1, "q - 1")])
def test_small_cyclotomics(n, text):
    assert str(cyclotomic(n)) == text


def test_cyclotomic_matches_sympy():
    x = sympy.Symbol("x")
    for n in range(1, 80):
        ref = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
        assert cyclotomic(n).coefficients() == ref


def test_product_over_divisors_is_xn_minus_1():
    for n in range(1, 201):
        prod = LaurentPoly.constant(1)
        for d in sympy.divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == q**n - 1
        assert cyclotomic(n).degree == euler_phi(n)


def test_substitution_round_trip():
    for n in range(1, 121):
        for m in range(0, 121 // n + 1):
            fac = factor_cyclotomic_substitution(n, m)
            direct = cyclotomic(n).substitute_power(m) if m else LaurentPoly.constant(cyclotomic(n)(1))
            assert fac.expand() == direct, (n, m)


@pytest.mark.parametrize(
    "n, m, factors, scalar",
    [(3, 2, {3: 1, 6: 1}, 1), (6, 2, {12: 1}, 1), (3, 0, {}, 3), (2, 3, {2: 1, 6: 1}, 1)],
)
def test_substitution_examples(n, m, factors, scalar):
    assert factor_cyclotomic_substitution(n, m) == CyclotomicProduct.of(factors, scalar)


def test_product_formatting():
    p = CyclotomicProduct.of({3: 1, 6: 2}, 1)
    assert p.pretty() == "Φ₃(q)Φ₆(q)²"
    assert str(CyclotomicProduct.of({3: 1, 6: 2}, 3)) == "3 · Φ3(q)^1 · Φ6(q)^2"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=0, max_size=4), st.integers(-3, 3), st.integers(1, 9))
def test_factor_into_cyclotomics_inverts_expand(ns, shift, scalar):
    prod = CyclotomicProduct.of(ns, scalar, shift)
    assert factor_into_cyclotomics(prod.expand()) == prod


def test_factor_into_cyclotomics_rejects_non_products():
    assert factor_into_cyclotomics(q**2 + 2) is None


@settings(max_examples=80, deadline=None)
@given(
    st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4),
    st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4),
)
def test_laurent_ring_axioms(a, b):
    A, B = LaurentPoly(a), LaurentPoly(b)
    assert A + B == B + A
    assert A * B == B * A
    assert (A + B) * B == A * B + B * B
    assert all(c != 0 for _, c in A.items())
    if not B.is_zero():
        assert (A * B).exact_div(B) == A


def test_laurent_exact_rationals():
    half = LaurentPoly.constant(Fraction(1, 2))
    assert (half * 2) == LaurentPoly.constant(1)
    assert (q + 1)(Fraction(1, 3)) == Fraction(4, 3)
    with pytest.raises(ArithmeticError):
        (q**2 + 1).exact_div(q + 1)


def test_laurent_negative_exponents():
    p = LaurentPoly.monomial(-3) * (q + 1)
    assert p.valuation == -3 and p.degree == -2
    assert p(2) == Fraction(3, 8)


@pytest.mark.parametrize("qv, n, expected", [(2, 6, None), (2, 12, 13), (3, 2, None), (2, 1, None), (7, 2, None)])
def test_zsigmondy_examples(qv, n, expected):
    assert zsigmondy(qv, n) == expected


def test_zsigmondy_matches_brute_force():
    for qv in range(2, 21):
        for n in range(1, 31):
            r = zsigmondy(qv, n)
            assert r == brute_primitive(qv, n), (qv, n)
            if r is not None and n >= 2:
                assert r % n == 1
