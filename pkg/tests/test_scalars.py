from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from babytkk.scalars import I, ONE, ZERO, GaussRational, ZeroDivisionInField, binom, parse_scalar

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gauss = st.builds(GaussRational, rationals, rationals)


def to_sympy(z: GaussRational):
    return sympy.Rational(z.re.numerator, z.re.denominator) + sympy.I * sympy.Rational(z.im.numerator, z.im.denominator)


def test_examples():
    assert GaussRational(1, 1) * GaussRational(1, -1) == GaussRational(2)
    assert I.inverse() == -I
    assert GaussRational(Fraction(1, 2)) + GaussRational(Fraction(1, 3)) == GaussRational(Fraction(5, 6))


def test_binom_examples():
    assert binom(3, 2) == 3
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    for q in (0, 5, Fraction(-7, 3), Fraction(1, 2)):
        assert binom(q, 0) == 1


@given(rationals, st.integers(1, 12))
def test_binom_pascal(q, i):
    assert binom(q, i) == binom(q - 1, i) + binom(q - 1, i - 1)


@given(st.integers(0, 11), st.integers(1, 12))
def test_binom_vanishes_below(q, i):
    if q < i:
        assert binom(q, i) == 0


@given(rationals, st.integers(0, 8))
def test_binom_matches_sympy(q, i):
    assert sympy.Rational(binom(q, i)) == sympy.binomial(sympy.Rational(q.numerator, q.denominator), i)


@settings(max_examples=300)
@given(gauss, gauss)
def test_field_ops_match_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(-a) == -to_sympy(a)
    if b:
        assert sympy.expand(to_sympy(a / b) * to_sympy(b)) == to_sympy(a)


@settings(max_examples=1000)
@given(gauss, gauss)
def test_division_roundtrip(a, b):
    if b:
        assert (a * b) / b == a


def test_zero_inverse():
    with pytest.raises(ZeroDivisionInField):
        ZERO.inverse()


@given(gauss)
def test_str_parse_roundtrip(z):
    assert parse_scalar(str(z)) == z


def test_parse_forms():
    assert parse_scalar("2+I") == GaussRational(2, 1)
    assert parse_scalar("-3/2*I") == GaussRational(0, Fraction(-3, 2))
    assert parse_scalar("1") == ONE
    with pytest.raises(ValueError):
        parse_scalar("1.5")


def test_normalized_and_hashable():
    a = GaussRational(Fraction(2, 4), Fraction(-3, -6))
    b = GaussRational(Fraction(1, 2), Fraction(1, 2))
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
