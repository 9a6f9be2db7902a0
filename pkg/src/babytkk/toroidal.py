"""The 2-toroidal algebra of type C2 with a canonical central basis.

Symbols:

* ``("x", name, m1, m2)`` -- name (x) t1^m1 t2^m2
* ``("KA", m, s)`` with s != 0 -- t1^m t2^s k1
* ``("KB", m)`` -- t1^m k2
* ``("k1",)`` -- k1 at bidegree (0, 0)

The relation m1 t^(m1,m2) k1 + m2 t^(m1,m2) k2 = 0 is solved for the
k2-symbol when m2 != 0; when m2 = 0 and m1 != 0 it kills the k1-symbol.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from babytkk.linear import LinComb, add_into
from babytkk.scalars import as_scalar
from babytkk.sp4 import BASIS, bracket_basis, trace_basis

_KRANK = {"x": 0, "KA": 1, "KB": 2, "k1": 3}
_BIDX = {n: i for i, n in enumerate(BASIS)}


def check_symbol(sym) -> None:
    kind = sym[0]
    if kind == "x":
        if sym[1] not in _BIDX or len(sym) != 4:
            raise ValueError(f"bad toroidal symbol {sym!r}")
    elif kind == "KA":
        if sym[2] == 0:
            raise ValueError("KA(m, s) needs s != 0")
    elif kind not in ("KB", "k1"):
        raise ValueError(f"bad toroidal symbol {sym!r}")


class ToroidalElement(LinComb):
    __slots__ = ()
    algebra = "toroidal"

    def __init__(self, terms=None):
        super().__init__(terms)
        for s in self.terms:
            check_symbol(s)

    @staticmethod
    def sort_key(sym):
        if sym[0] == "x":
            return (0, sym[2], sym[3], _BIDX[sym[1]])
        return (_KRANK[sym[0]],) + tuple(sym[1:])


def central(m1: int, m2: int, which: str) -> dict:
    """t1^m1 t2^m2 k_which in canonical symbols (as a dict)."""
    if which not in ("k1", "k2"):
        raise ValueError("which must be 'k1' or 'k2'")
    if m2 != 0:
        if which == "k1":
            return {("KA", m1, m2): as_scalar(1)}
        if m1 == 0:
            return {}
        return {("KA", m1, m2): as_scalar(Fraction(-m1, m2))}
    if which == "k2":
        return {("KB", m1): as_scalar(1)}
    if m1 != 0:
        return {}
    return {("k1",): as_scalar(1)}


def canonicalize_K(m1: int, m2: int, which: str) -> ToroidalElement:
    return ToroidalElement._wrap(central(m1, m2, which))


@lru_cache(maxsize=None)
def _bracket_cached(a, b):
    return tuple(bracket_symbols(a, b).items())


def bracket_symbols(a, b) -> dict:
    if a[0] != "x" or b[0] != "x":
        return {}
    _, x, m1, m2 = a
    _, y, n1, n2 = b
    s1, s2 = m1 + n1, m2 + n2
    acc = {("x", name, s1, s2): as_scalar(c) for name, c in bracket_basis(x, y)}
    tr = trace_basis(x, y)
    if tr:
        if m1:
            add_into(acc, central(s1, s2, "k1"), tr * m1)
        if m2:
            add_into(acc, central(s1, s2, "k2"), tr * m2)
    return acc


def toroidal_bracket(u: ToroidalElement, v: ToroidalElement) -> ToroidalElement:
    if not isinstance(u, ToroidalElement) or not isinstance(v, ToroidalElement):
        raise TypeError("toroidal_bracket takes two ToroidalElements")
    acc: dict = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            add_into(acc, _bracket_cached(a, b), c * d)
    return ToroidalElement._wrap(acc)


def toroidal_grading(sym) -> int:
    """Degree -m1 (the t1-exponent, negated)."""
    kind = sym[0]
    if kind == "x":
        return -sym[2]
    if kind in ("KA", "KB"):
        return -sym[1]
    return 0


def x(name: str, m1: int = 0, m2: int = 0) -> ToroidalElement:
    return ToroidalElement({("x", name, m1, m2): 1})


def K(m1: int, m2: int, which: str) -> ToroidalElement:
    return canonicalize_K(m1, m2, which)


def basis_window(bound: int) -> list:
    rng = range(-bound, bound + 1)
    out = [("x", name, m1, m2) for name in BASIS for m1 in rng for m2 in rng]
    out += [("KA", m, s) for m in rng for s in rng if s]
    out += [("KB", m) for m in rng]
    out.append(("k1",))
    return sorted(out, key=ToroidalElement.sort_key)
