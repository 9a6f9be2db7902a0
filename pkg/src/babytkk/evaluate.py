"""Bracket and map evaluation on parsed elements, and the named identity
checks shared by the verification suites.

Each check takes elements and returns True when the identity holds.  A failed
check is recorded as its name, algebra and printed arguments; :func:`recheck`
parses those strings back and re-evaluates, so every reported counterexample
can be reproduced from the report alone.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from babytkk import conformal as cf
from babytkk import tkk, toroidal, twist
from babytkk.lattice import jordan_mul
from babytkk.parsing import format_element, parse_element

BRACKETS = {
    "tkk": tkk.tkk_bracket,
    "toroidal": toroidal.toroidal_bracket,
    "affine": cf.affine_bracket,
    "twisted": twist.twisted_bracket,
}

MAPS = {
    "phi": ("tkk", twist.phi),
    "phi-inv": ("twisted", twist.phi_inv),
    "ig": ("affine", cf.i_g),
    "ig-inv": ("toroidal", cf.i_g_inv),
    "sigma": ("conformal", twist.sigma_c),
}


def eval_bracket(algebra: str, lhs: str, rhs: str) -> str:
    """Printed bracket of two parsed elements.

    For ``conformal`` the result lists every nonzero n-product; for
    ``jordan`` it is the Jordan product.
    """
    if algebra not in BRACKETS and algebra not in ("conformal", "jordan"):
        raise ValueError(f"unknown algebra {algebra!r}")
    a, b = parse_element(lhs, algebra), parse_element(rhs, algebra)
    if algebra == "jordan":
        return format_element(jordan_mul(a, b))
    if algebra == "conformal":
        parts = []
        for n in range(cf.product_bound(a, b) + 1):
            p = cf.nth_product(a, n, b)
            if p:
                parts.append(f"({n}): {format_element(p)}")
        return "; ".join(parts) if parts else "0"
    return format_element(BRACKETS[algebra](a, b))


def apply_map(name: str, text: str) -> str:
    if name not in MAPS:
        raise ValueError(f"unknown map {name!r}; expected one of {sorted(MAPS)}")
    algebra, fn = MAPS[name]
    return format_element(fn(parse_element(text, algebra)))


# --- identity checks -----------------------------------------------------------

def check_antisymmetry(algebra, a, b) -> bool:
    br = BRACKETS[algebra]
    return br(a, b) + br(b, a) == 0


def check_jacobi(algebra, a, b, c) -> bool:
    br = BRACKETS[algebra]
    return br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)) == 0


def check_ig_hom(algebra, a, b) -> bool:
    return cf.i_g(cf.affine_bracket(a, b)) == toroidal.toroidal_bracket(cf.i_g(a), cf.i_g(b))


def check_ig_inverse(algebra, a) -> bool:
    if algebra == "affine":
        return cf.i_g_inv(cf.i_g(a)) == a
    return cf.i_g(cf.i_g_inv(a)) == a


def check_phi_hom(algebra, a, b) -> bool:
    return twist.phi(tkk.tkk_bracket(a, b)) == twist.twisted_bracket(twist.phi(a), twist.phi(b))


def check_phi_inverse(algebra, a) -> bool:
    if algebra == "tkk":
        return twist.phi_inv(twist.phi(a)) == a
    return twist.phi(twist.phi_inv(a)) == a


def check_grading(algebra, a) -> bool:
    """Every term of phi(a) has twisted degree half the TKK degree (a is a
    single basis symbol)."""
    (sym,) = a.terms
    target = Fraction(tkk.grading_degree(sym), 2)
    return all(twist.twisted_grading(s) == target for s in twist.phi(a).terms)


def check_sigma_involution(algebra, a) -> bool:
    return twist.sigma_c(twist.sigma_c(a)) == a


def check_sigma_partial(algebra, a) -> bool:
    return twist.sigma_c(cf.partial(a)) == cf.partial(twist.sigma_c(a))


def check_sigma_graded(algebra, a) -> bool:
    (sym,) = a.terms
    d = cf.conformal_grading(sym)
    return all(cf.conformal_grading(s) == d for s in twist.sigma_c(a).terms)


def check_sigma_products(algebra, a, b) -> bool:
    sa, sb = twist.sigma_c(a), twist.sigma_c(b)
    return all(
        twist.sigma_c(cf.nth_product(a, n, b)) == cf.nth_product(sa, n, sb)
        for n in range(cf.product_bound(a, b) + 1)
    )


def check_sigma_t_hom(algebra, a, b) -> bool:
    return twist.sigma_t(toroidal.toroidal_bracket(a, b)) == toroidal.toroidal_bracket(twist.sigma_t(a), twist.sigma_t(b))


def sigma_t_table(sym) -> toroidal.ToroidalElement:
    """The explicit action of i_g sigma-hat i_g^{-1} on the toroidal algebra,
    written out case by case (an oracle independent of the conformal route)."""
    T = toroidal.ToroidalElement
    kind = sym[0]
    if kind != "x":
        return T({sym: 1})
    _, name, m, n = sym
    if name in ("E12-E43", "E21-E34"):
        return T({sym: 1})
    if name == "E14+E23":
        return T({("x", "E41+E32", m, n + 1): -1})
    if name == "E41+E32":
        return T({("x", "E14+E23", m, n - 1): -1})
    if name == "E11-E33":
        return T({("x", "E22-E44", m, n): -1}) + toroidal.K(m, n, "k2")
    if name == "E22-E44":
        return T({("x", "E11-E33", m, n): -1}) + toroidal.K(m, n, "k2")
    shift = {"E13": ("E42", 1), "E24": ("E31", 1), "E31": ("E24", -1), "E42": ("E13", -1)}
    target, dn = shift[name]
    return T({("x", target, m, n + dn): 1})


def check_sigma_t_table(algebra, a) -> bool:
    """i_g sigma-hat i_g^{-1} against the explicit table, term by term."""
    want = toroidal.ToroidalElement.zero()
    for s, c in a.terms.items():
        want = want + sigma_t_table(s) * c
    return twist.sigma_t(a) == want


def _divided_partial(e, j):
    for _ in range(j):
        e = cf.partial(e)
    return e * Fraction(1, factorial(j))


def check_conformal_skew(algebra, a, b) -> bool:
    """a_(n) b = -sum_j (-1)^(n+j) D^(j)/j! (b_(n+j) a)."""
    top = cf.product_bound(a, b) + 1
    for n in range(top):
        rhs = cf.ConformalElement.zero()
        for j in range(top - n + 1):
            rhs = rhs + _divided_partial(cf.nth_product(b, n + j, a), j) * (-(-1) ** (n + j))
        if cf.nth_product(a, n, b) != rhs:
            return False
    return True


def check_conformal_partial(algebra, a, b) -> bool:
    """(Da)_(n) b = -n a_(n-1) b and a_(n) Db = D(a_(n) b) + n a_(n-1) b."""
    top = cf.product_bound(a, b) + 2
    for n in range(top):
        prev = cf.nth_product(a, n - 1, b) if n else cf.ConformalElement.zero()
        if cf.nth_product(cf.partial(a), n, b) != prev * (-n):
            return False
        if cf.nth_product(a, n, cf.partial(b)) != cf.partial(cf.nth_product(a, n, b)) + prev * n:
            return False
    return True


def check_conformal_jacobi(algebra, a, b, c) -> bool:
    """a_(m)(b_(n) c) - b_(n)(a_(m) c) = sum_j binom(m, j) (a_(j) b)_(m+n-j) c."""
    top = max(cf.product_bound(a, b), cf.product_bound(a, c), cf.product_bound(b, c)) + 2
    for m in range(top):
        for n in range(top):
            lhs = cf.nth_product(a, m, cf.nth_product(b, n, c)) - cf.nth_product(b, n, cf.nth_product(a, m, c))
            rhs = cf.ConformalElement.zero()
            for j in range(m + 1):
                rhs = rhs + cf.nth_product(cf.nth_product(a, j, b), m + n - j, c) * comb(m, j)
            if lhs != rhs:
                return False
    return True


CHECKS = {
    "antisymmetry": check_antisymmetry,
    "jacobi": check_jacobi,
    "ig-hom": check_ig_hom,
    "ig-inverse": check_ig_inverse,
    "phi-hom": check_phi_hom,
    "phi-inverse": check_phi_inverse,
    "grading": check_grading,
    "sigma-involution": check_sigma_involution,
    "sigma-partial": check_sigma_partial,
    "sigma-graded": check_sigma_graded,
    "sigma-products": check_sigma_products,
    "sigma-t-hom": check_sigma_t_hom,
    "sigma-t-table": check_sigma_t_table,
    "conformal-skew": check_conformal_skew,
    "conformal-partial": check_conformal_partial,
    "conformal-jacobi": check_conformal_jacobi,
}


def counterexample(check: str, algebra: str, args) -> dict:
    return {"check": check, "algebra": algebra, "args": [format_element(a) for a in args]}


def recheck(ce: dict) -> bool:
    """Re-evaluate a recorded counterexample; True when the identity holds."""
    fn = CHECKS[ce["check"]]
    args = [parse_element(t, ce["algebra"]) for t in ce["args"]]
    return fn(ce["algebra"], *args)


__all__ = [
    "BRACKETS",
    "CHECKS",
    "MAPS",
    "apply_map",
    "counterexample",
    "eval_bracket",
    "recheck",
]
