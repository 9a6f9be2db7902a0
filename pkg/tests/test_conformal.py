from fractions import Fraction

from babytkk import conformal as cf
from babytkk import toroidal
from babytkk.conformal import K1, K2, AffineElement, ConformalElement, aff, conf, nth_product
from babytkk.evaluate import check_conformal_jacobi, check_conformal_partial, check_conformal_skew


def tk1(s, D=0):
    return conf(("tk1", s), D=D)


def test_partial_examples():
    assert cf.partial(conf("E13", 1)) == conf("E13", 1, D=1)
    assert not cf.partial(conf(K1))
    assert cf.partial(conf(K2, D=2)) == conf(K2, D=3)


def test_product_examples():
    assert nth_product(conf("E13", 1), 1, conf("E31", -1)) == conf(K1)
    assert nth_product(conf("E13", 1), 0, conf("E31", 1)) == conf("E11-E33", 2) + tk1(2, D=1) * Fraction(1, 2)
    assert not nth_product(conf("E13"), 2, conf("E31"))
    assert nth_product(conf("E13", 1, D=1), 2, conf("E31", -1)) == conf(K1) * -2


def test_reduce_examples():
    assert cf.reduce_affine(conf("E13", 0, D=1), 3) == aff("E13", 0, 2) * -3
    assert not cf.reduce_affine(conf(K1), 5)
    assert not cf.reduce_affine(conf(K2, D=2), 1)


def test_affine_bracket_examples():
    k1 = AffineElement({(K1, -1): 1})
    assert cf.affine_bracket(aff("E13", 0, 2), aff("E31", 0, -2)) == aff("E11-E33", 0, 0) + k1 * 2
    for s in cf.affine_basis_window(1):
        assert not cf.affine_bracket(k1, AffineElement({s: 1}))
    assert cf.affine_bracket(aff("E13", 1, 0), aff("E31", 1, 0)) == aff("E11-E33", 2, 0)


def test_i_g_examples():
    assert cf.i_g(aff("E13", 3, -2)) == toroidal.x("E13", -2, 3)
    assert cf.i_g(aff(("tk1", 2), 0, 0)) == toroidal.ToroidalElement({("KA", 1, 2): 1})
    assert cf.i_g(AffineElement({(K1, -1): 1})) == toroidal.ToroidalElement({("k1",): 1})


def test_grading_examples():
    assert cf.conformal_grading((0, ("x", "E13", 5))) == 1
    assert cf.conformal_grading((0, ("tk1", 3))) == 0
    assert cf.conformal_grading((2, K2)) == 3


def test_grading_transport():
    # deg a(p) for a in C_g(n) equals the toroidal degree -m1 of its image
    for s in cf.affine_basis_window(2):
        (t,) = cf.i_g(AffineElement({s: 1})).terms
        assert cf.affine_grading(s) == toroidal.toroidal_grading(t)


def _gens(bound, D=0):
    out = []
    for g in cf.generator_window(bound):
        for j in range(D + 1):
            if g == K1 and j:
                continue
            out.append(ConformalElement({(j, g): 1}))
    return out


def test_skew_symmetry_and_partial_rules():
    gens = _gens(2)
    for a in gens:
        for b in gens:
            assert check_conformal_skew("conformal", a, b)
            assert check_conformal_partial("conformal", a, b)


def test_jacobi_generators_window1():
    gens = _gens(1)
    # |t2-exponent| <= 1 on a spread of triples (every a, b against a fixed c slice)
    cs = gens[::5]
    for a in gens:
        for b in gens[::3]:
            for c in cs:
                assert check_conformal_jacobi("conformal", a, b, c)


def test_ig_is_bijective_hom_window1():
    win = [AffineElement({s: 1}) for s in cf.affine_basis_window(1)]
    for a in win:
        assert cf.i_g_inv(cf.i_g(a)) == a
        for b in win:
            assert cf.i_g(cf.affine_bracket(a, b)) == toroidal.toroidal_bracket(cf.i_g(a), cf.i_g(b))
