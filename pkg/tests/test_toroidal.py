import random
from fractions import Fraction

import sympy

from babytkk import toroidal
from babytkk.sp4 import BASIS, basis_element, bracket_basis, sp4_bracket, trace_basis, trace_form
from babytkk.toroidal import K, ToroidalElement, toroidal_bracket, x

# independent definitions of the basis as sympy matrices
_ENTRIES = {
    "E11-E33": [(1, 1, 1), (3, 3, -1)],
    "E22-E44": [(2, 2, 1), (4, 4, -1)],
    "E13": [(1, 3, 1)],
    "E31": [(3, 1, 1)],
    "E24": [(2, 4, 1)],
    "E42": [(4, 2, 1)],
    "E12-E43": [(1, 2, 1), (4, 3, -1)],
    "E21-E34": [(2, 1, 1), (3, 4, -1)],
    "E14+E23": [(1, 4, 1), (2, 3, 1)],
    "E41+E32": [(4, 1, 1), (3, 2, 1)],
}


def M(name):
    m = sympy.zeros(4, 4)
    for i, j, v in _ENTRIES[name]:
        m[i - 1, j - 1] = v
    return m


def as_matrix(coeffs):
    out = sympy.zeros(4, 4)
    for name, c in coeffs:
        out += M(name) * sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
    return out


def test_bracket_matches_matrix_commutator():
    for a in BASIS:
        for b in BASIS:
            assert as_matrix(bracket_basis(a, b)) == M(a) * M(b) - M(b) * M(a)
            assert trace_basis(a, b) == (M(a) * M(b)).trace()


def test_sp4_examples():
    assert sp4_bracket(basis_element("E13"), basis_element("E31")) == basis_element("E11-E33")
    assert trace_form(basis_element("E13"), basis_element("E31")) == 1
    assert trace_basis("E12-E43", "E21-E34") == 2


def test_trace_symmetric_invariant():
    for a in BASIS:
        for b in BASIS:
            assert trace_basis(a, b) == trace_basis(b, a)
            for c in BASIS:
                lhs = sum(v * trace_basis(n, c) for n, v in bracket_basis(a, b))
                rhs = sum(v * trace_basis(a, n) for n, v in bracket_basis(b, c))
                assert lhs == rhs


def test_canonicalize_K():
    assert not K(2, 0, "k1")
    assert K(2, 4, "k2") == ToroidalElement({("KA", 2, 4): Fraction(-1, 2)})
    assert K(0, 0, "k1") == ToroidalElement({("k1",): 1})
    for m1 in range(-2, 3):
        for m2 in range(-2, 3):
            # the defining relation
            assert not (K(m1, m2, "k1") * m1 + K(m1, m2, "k2") * m2)


def test_canonicalize_K_idempotent():
    # every canonical central symbol is its own canonical form
    for s in toroidal.basis_window(2):
        if s[0] == "KA":
            assert K(s[1], s[2], "k1") == ToroidalElement({s: 1})
        elif s[0] == "KB":
            assert K(s[1], 0, "k2") == ToroidalElement({s: 1})
        elif s[0] == "k1":
            assert K(0, 0, "k1") == ToroidalElement({s: 1})


def test_bracket_examples():
    assert toroidal_bracket(x("E13", 1, 1), x("E31", -1, -1)) == x("E11-E33") + K(0, 0, "k1") + K(0, 0, "k2")
    assert toroidal_bracket(x("E13", 2, 0), x("E31", -2, 0)) == x("E11-E33") + K(0, 0, "k1") * 2
    for s in toroidal.basis_window(1):
        assert not toroidal_bracket(K(0, 0, "k1"), ToroidalElement({s: 1}))


def test_grading_examples():
    assert toroidal.toroidal_grading(("x", "E13", 3, 1)) == -3
    assert toroidal.toroidal_grading(("k1",)) == 0
    assert toroidal.toroidal_grading(("KA", -2, 5)) == 2


def test_jacobi_and_grading_random():
    rng = random.Random(3)
    pool = [ToroidalElement({s: 1}) for s in toroidal.basis_window(3)]
    br = toroidal_bracket
    for _ in range(1500):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert br(a, b) == -br(b, a)
        assert not (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)))
        deg = sum(toroidal.toroidal_grading(next(iter(e.terms))) for e in (a, b))
        for s in br(a, b).terms:
            assert toroidal.toroidal_grading(s) == deg
