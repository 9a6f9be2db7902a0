import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from babytkk import tkk
from babytkk.tkk import C1, C2, DomainError, TkkElement, h, tkk_bracket, xm, xp

WIN2 = tkk.basis_window(2)


def E(sym):
    return TkkElement({sym: 1})


def test_canonical_central():
    assert tkk.canonicalize_central(2, (2, 4)) == C1(2, 4) * Fraction(-1, 2)
    assert C2(4, 0) == TkkElement({("C2", 4, 0): 1})
    assert C1(0, 0) == TkkElement({("C1", 0, 0): 1})
    assert not C1(2, 0)
    with pytest.raises(DomainError):
        C1(1, 2)


def test_bracket_examples():
    # C1(2,0) vanishes by the central relation, so only h(2,0) survives
    assert tkk_bracket(xp(1, 0), xm(1, 0)) == h(2, 0)
    assert tkk_bracket(xp(1, 0), xm(0, 1)) == h(1, 1)
    assert not tkk_bracket(h(1, 1), h(1, 1))
    assert tkk_bracket(h(0, 0), xp(0, 0)) == xp(0, 0) * 2


def test_domain_errors():
    with pytest.raises(DomainError):
        xp(1, 1)
    with pytest.raises(DomainError):
        TkkElement({("C2", 2, 2): 1})


def test_grading_and_triangular_examples():
    assert tkk.grading_weights(("x+", 1, 0)) == (1, 0) and tkk.grading_degree(("x+", 1, 0)) == -1
    assert tkk.grading_weights(("C1", 2, 4)) == (2, 4)
    assert tkk.grading_weights(("h", 0, 0)) == (0, 0)
    assert tkk.triangular_part(("x+", 0, 5)) == "plus"
    assert tkk.triangular_part(("h", 0, -3)) == "zero"
    assert tkk.triangular_part(("x-", 2, 1)) == "plus"


def test_antisymmetry_window2():
    for a in WIN2:
        for b in WIN2:
            assert tkk_bracket(E(a), E(b)) == -tkk_bracket(E(b), E(a))


def test_jacobi_window1_exhaustive():
    win = [E(s) for s in tkk.basis_window(1)]
    assert len(win) == 21
    for a in win:
        for b in win:
            ab = tkk_bracket(a, b)
            for c in win:
                total = tkk_bracket(ab, c) + tkk_bracket(tkk_bracket(b, c), a) + tkk_bracket(tkk_bracket(c, a), b)
                assert not total


def test_jacobi_random_window4():
    rng = random.Random(7)
    pool = [E(s) for s in tkk.basis_window(4)]
    for _ in range(2000):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert not (tkk_bracket(a, tkk_bracket(b, c)) + tkk_bracket(b, tkk_bracket(c, a)) + tkk_bracket(c, tkk_bracket(a, b)))


def test_grading_additive_and_central():
    for a in WIN2:
        for b in WIN2:
            r = tkk_bracket(E(a), E(b))
            for s in r.terms:
                assert (s[1], s[2]) == (a[1] + b[1], a[2] + b[2])
            if a[0] in tkk.CENTRAL:
                assert not r


def test_triangular_closure():
    win = tkk.basis_window(1)
    for a in win:
        for b in win:
            pa, pb = tkk.triangular_part(a), tkk.triangular_part(b)
            if pa == pb:
                for s in tkk_bracket(E(a), E(b)).terms:
                    assert tkk.triangular_part(s) == pa


symbols = st.sampled_from(tkk.basis_window(3))
small = st.integers(-3, 3).filter(bool)
elements = st.lists(st.tuples(symbols, small), min_size=1, max_size=3).map(lambda t: TkkElement(dict(t)))


@settings(max_examples=200, deadline=None)
@given(elements, elements, elements)
def test_bilinear_jacobi_on_combinations(a, b, c):
    assert tkk_bracket(a, b) == -tkk_bracket(b, a)
    assert not (tkk_bracket(a, tkk_bracket(b, c)) + tkk_bracket(b, tkk_bracket(c, a)) + tkk_bracket(c, tkk_bracket(a, b)))
    assert tkk_bracket(a + b, c) == tkk_bracket(a, c) + tkk_bracket(b, c)
