import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartier_lab.errors import InputError, NonSplitDenominator, PrecisionExhausted
from cartier_lab.exactalg import (
    NEG_INF,
    FieldElem,
    PolarPart,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    from_partial_fractions,
    p_power_decompose,
    partial_fractions,
    poly_gcd,
    solve_artin_schreier_series,
)

from conftest import polynomials, prime_and_rational, primes


def rf(p, num, den=(1,)):
    return RationalFunction(Polynomial(p, num), Polynomial(p, den))


# -- field ---------------------------------------------------------------------


@settings(max_examples=1000)
@given(primes.flatmap(lambda p: st.tuples(st.just(p), *[st.integers(0, p - 1)] * 3)))
def test_field_axioms(data):
    p, a, b, c = data
    a, b, c = FieldElem(a, p), FieldElem(b, p), FieldElem(c, p)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * a.inverse() == 1
        assert b / a * a == b


def test_field_rejects_composite_and_normalizes():
    with pytest.raises(InputError):
        FieldElem(1, 9)
    x = FieldElem(-1, 7)
    assert x.residue == 6 and 0 <= x.residue < x.modulus
    with pytest.raises(AttributeError):
        x.residue = 3
    with pytest.raises(ZeroDivisionError):
        FieldElem(0, 5).inverse()


# -- polynomials ---------------------------------------------------------------


def test_polynomial_canonical_form():
    assert Polynomial(5, [1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial(5, [5, 10]).degree == NEG_INF
    assert Polynomial(3, [2, 0, 1]).terms() == {0: 2, 2: 1}
    assert str(Polynomial(3, [1, 1, 0, 2])) == "2*x^3 + x + 1"


@settings(max_examples=200)
@given(primes.flatmap(lambda p: st.tuples(polynomials(p), polynomials(p))))
def test_polynomial_division_and_gcd(pair):
    a, b = pair
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()


def test_roots_and_taylor_shift():
    f = Polynomial(7, [6, 0, 1])  # x^2 - 1
    assert sorted(f.roots()) == [1, 6]
    g = f.taylor_shift(1)  # f(x + 1)
    assert g == Polynomial(7, [0, 2, 1])


# -- rational functions --------------------------------------------------------


def test_rational_normalization():
    h = rf(5, [0, 2], [0, 0, 3])  # 2x / 3x^2 = 4/x
    assert h.num == Polynomial(5, [4]) and h.den == Polynomial(5, [0, 1])
    assert h.order_at(0) == -1 and h.order_at_infinity() == 1
    with pytest.raises(ZeroDivisionError):
        rf(5, [1], [0])


def test_partial_fractions_char2_example():
    h = RationalFunction(Polynomial(2, [1]), Polynomial(2, [0, 0, 1]) * Polynomial(2, [1, 1]) ** 2)
    poly, parts = partial_fractions(h)
    assert poly.is_zero()
    assert [(q.center, q.coeffs) for q in parts] == [(0, {2: 1}), (1, {2: 1})]


def test_partial_fractions_trivial_cases():
    for p in (2, 3, 7):
        poly, parts = partial_fractions(RationalFunction(Polynomial.monomial(p, 3)))
        assert poly == Polynomial.monomial(p, 3) and parts == []
    h = RationalFunction.monomial(3, -1) + RationalFunction.monomial(3, -2, 2)
    assert [(q.center, q.coeffs) for q in partial_fractions(h)[1]] == [(0, {1: 1, 2: 2})]


def test_partial_fractions_non_split():
    h = rf(3, [1], [1, 0, 1])  # x^2 + 1 is irreducible over F_3
    with pytest.raises(NonSplitDenominator) as info:
        partial_fractions(h)
    assert info.value.degree == 2
    assert info.value.factor == Polynomial(3, [1, 0, 1])


@settings(max_examples=500)
@given(prime_and_rational())
def test_partial_fractions_recombine(case):
    _, h = case
    poly, parts = partial_fractions(h)
    assert from_partial_fractions(poly, parts) == h
    assert all(q.pole_order >= 1 for q in parts)


@pytest.mark.parametrize(
    "p, h, expected",
    [
        (3, RationalFunction.monomial(3, 4), {1: RationalFunction.x(3)}),
        (3, RationalFunction.monomial(3, -1), {2: RationalFunction.monomial(3, -1)}),
        (
            3,
            rf(3, [1], [1, 1]),
            {0: rf(3, [1], [1, 1]), 1: rf(3, [2], [1, 1]), 2: rf(3, [1], [1, 1])},
        ),
    ],
)
def test_p_power_decompose_examples(p, h, expected):
    comps = p_power_decompose(h)
    for i, comp in enumerate(comps):
        assert comp == expected.get(i, RationalFunction.zero(p))


@settings(max_examples=500)
@given(prime_and_rational())
def test_p_power_decompose_reconstructs_uniquely(case):
    p, h = case
    comps = p_power_decompose(h)
    x = RationalFunction.x(p)
    total = RationalFunction.zero(p)
    for i, comp in enumerate(comps):
        total = total + comp ** p * x ** i
    assert total == h
    assert all(c.is_zero() for c in p_power_decompose(h - total))


# -- series --------------------------------------------------------------------


def series(p, coeffs, start, absprec):
    return TruncatedSeries(p, coeffs, start, absprec)


def test_series_normalization_and_precision():
    s = series(5, [0, 0, 3, 1], 1, 8)
    assert s.valuation == 3 and s.coeffs == (3, 1) and s.precision == 5
    with pytest.raises(PrecisionExhausted):
        s.coefficient(8)
    z = series(5, [0, 0], 0, 4)
    assert z.is_zero() and z.valuation == 4


def test_series_pessimistic_precision():
    a = series(3, [1, 1], 0, 5)
    b = series(3, [1], 2, 4)
    assert (a + b).absprec == 4
    # valuation 0 times O(u^4) keeps 4; valuation 2 times O(u^5) keeps 7
    assert (a * b).absprec == 4


def test_series_inverse_and_infinity_expansion():
    a = series(7, [1, 3, 2], 0, 10)
    one = a * a.inverse()
    assert one.coeffs == (1,) and one.absprec == 10
    h = rf(7, [1], [1, 1])  # 1/(x+1) = u - u^2 + u^3 - ... in u = 1/x
    s = TruncatedSeries.at_infinity(h, 6)
    assert [s.coefficient(e) for e in range(6)] == [0, 1, 6, 1, 6, 1]


def residual_valuation(y, f):
    return (y.frobenius() - y - f).valuation


def test_solve_as_zero_gives_constants():
    for p in (2, 3, 5):
        for zeta in range(p):
            y = solve_artin_schreier_series(TruncatedSeries.zero(p, 10), zeta, 10)
            assert y.coeffs == ((zeta,) if zeta else ())


def test_solve_as_char2_example():
    f = series(2, [1, 1], 3, 20)  # u^3 + u^4, treated as exact to u^20
    y = solve_artin_schreier_series(f, 0, 7)
    assert [y.coefficient(e) for e in range(7)] == [0, 0, 0, 1, 1, 0, 1]
    assert residual_valuation(y, f.truncate(7)) >= 7


def test_solve_as_residual_doubles_in_char2():
    f = series(2, [1], 3, 40)
    y0 = TruncatedSeries.constant(2, 0, 40)
    r0 = y0.frobenius() - y0 - f
    y1 = y0 + r0
    assert residual_valuation(y1, f) >= 6
    y2 = y1 + (y1.frobenius() - y1 - f)
    assert residual_valuation(y2, f) >= 12


def test_solve_as_precision_exhausted():
    with pytest.raises(PrecisionExhausted):
        solve_artin_schreier_series(series(3, [1], 1, 5), 0, 9)


@settings(max_examples=200)
@given(primes.flatmap(lambda p: st.tuples(st.just(p), st.lists(st.integers(0, p - 1), min_size=1, max_size=6))))
def test_solve_as_residual_and_distinct_roots(case):
    p, coeffs = case
    prec = 12
    f = series(p, coeffs, 1, prec)
    roots = [solve_artin_schreier_series(f, z, prec) for z in range(p)]
    for y in roots:
        assert residual_valuation(y, f) >= prec
    assert len({y.coefficient(0) for y in roots}) == p
