from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from babytkk import conformal as cf
from babytkk import tkk, toroidal, twist
from babytkk.lattice import JordanElement, window_points
from babytkk.parsing import DomainError, ParseError, format_element, parse_element
from babytkk.scalars import GaussRational

SYMBOLS = {
    "tkk": (tkk.TkkElement, tkk.basis_window(3)),
    "toroidal": (toroidal.ToroidalElement, toroidal.basis_window(2)),
    "affine": (cf.AffineElement, cf.affine_basis_window(2)),
    "twisted": (twist.TwistedElement, twist.basis_window(2)),
    "conformal": (cf.ConformalElement, [(j, g) for g in cf.generator_window(2) for j in range(3)
                                        if not (g == cf.K1 and j)]),
    "jordan": (JordanElement, window_points(3, only_S=True)),
}

coeffs = st.builds(
    GaussRational,
    st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6)),
    st.sampled_from([Fraction(0)] * 3 + [Fraction(1), Fraction(-1), Fraction(3, 2), Fraction(-2, 5)]),
).filter(bool)


@st.composite
def elements(draw):
    alg = draw(st.sampled_from(sorted(SYMBOLS)))
    cls, syms = SYMBOLS[alg]
    terms = draw(st.lists(st.tuples(st.sampled_from(syms), coeffs), max_size=4))
    return cls(dict(terms))


@settings(max_examples=400)
@given(elements())
def test_roundtrip(e):
    text = format_element(e)
    assert parse_element(text, e.algebra) == e
    assert format_element(parse_element(text, e.algebra)) == text


def test_examples():
    assert parse_element("x+(1,0)") == tkk.xp(1, 0)
    e = parse_element("2*h(0,1) - (1/2+1I)*C1(2,4)", "tkk")
    assert len(e) == 2
    assert e == tkk.h(0, 1) * 2 - tkk.C1(2, 4) * GaussRational(Fraction(1, 2), 1)
    assert str(parse_element("tw(E14+E23,0,1)(1/2)", "twisted")) == "tw(E14+E23,0,1)(1/2)"
    assert str(parse_element("t1^2*t2^4*k2", "toroidal")) == "-1/2*t1^2*t2^4*k1"
    assert str(parse_element("0", "tkk")) == "0"
    assert parse_element("I*h(0,0)", "tkk") == parse_element("1I*h(0,0)", "tkk")


def test_domain_vs_syntax_errors():
    with pytest.raises(DomainError):
        parse_element("x+(1,1)", "tkk")
    with pytest.raises(DomainError):
        parse_element("tw(E13,0,1)(0)", "twisted")
    with pytest.raises(DomainError):
        parse_element("k1(3/2)", "twisted")
    with pytest.raises(ParseError) as info:
        parse_element("x+(1,0) + ", "tkk")
    assert info.value.pos == 10
    with pytest.raises(ParseError):
        parse_element("h(0,0) h(1,0)", "tkk")
    assert not isinstance(DomainError("x"), ParseError)
