"""The Lie conformal algebra C_g, its affinization, and the map i_g onto the
toroidal algebra.

Generators of g (the D-free part) are tuples:

* ``("x", name, n)`` -- name (x) t2^n
* ``("k2",)``
* ``("tk1", s)`` with s != 0 -- t2^s k1

plus the standalone ``("k1",)``, which is killed by the derivation.  A
conformal basis symbol is ``(j, gen)`` meaning D^j (x) gen; ``k1`` only occurs
as ``(0, ("k1",))``.

Affine symbols are ``(gen, m)`` for the image of gen (x) t^m.  Canonical form
has no D-powers and keeps ``k1`` only at index -1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from babytkk import toroidal as tor
from babytkk.linear import LinComb, add_into
from babytkk.scalars import as_scalar, binom
from babytkk.sp4 import BASIS, bracket_basis, trace_basis

K1 = ("k1",)
K2 = ("k2",)
_BIDX = {n: i for i, n in enumerate(BASIS)}


def _gen_key(gen):
    kind = gen[0]
    if kind == "x":
        return (0, gen[2], _BIDX[gen[1]])
    if kind == "k2":
        return (1,)
    if kind == "tk1":
        return (2, gen[1])
    return (3,)


def check_gen(gen) -> None:
    kind = gen[0]
    if kind == "x":
        if len(gen) != 3 or gen[1] not in _BIDX:
            raise ValueError(f"bad generator {gen!r}")
    elif kind == "tk1":
        if len(gen) != 2 or gen[1] == 0:
            raise ValueError("t2^s k1 needs s != 0")
    elif gen not in (K1, K2):
        raise ValueError(f"bad generator {gen!r}")


def is_central_gen(gen) -> bool:
    return gen[0] != "x"


class ConformalElement(LinComb):
    __slots__ = ()
    algebra = "conformal"

    def __init__(self, terms=None):
        super().__init__(terms)
        for j, gen in self.terms:
            check_gen(gen)
            if j < 0 or (gen == K1 and j != 0):
                raise ValueError(f"bad conformal symbol {(j, gen)!r}")

    @staticmethod
    def sort_key(sym):
        return (sym[0], _gen_key(sym[1]))


class AffineElement(LinComb):
    __slots__ = ()
    algebra = "affine"

    def __init__(self, terms=None):
        super().__init__(terms)
        for gen, m in self.terms:
            check_gen(gen)
            if gen == K1 and m != -1:
                raise ValueError("k1(m) is zero unless m = -1")

    @staticmethod
    def sort_key(sym):
        return (sym[1], _gen_key(sym[0]))


# --- the conformal algebra -------------------------------------------------

def partial(e: ConformalElement) -> ConformalElement:
    d = {}
    for (j, gen), c in e.terms.items():
        if gen != K1:
            d[(j + 1, gen)] = c
    return ConformalElement._wrap(d)


def _base_product(a, n, b) -> dict:
    """n-product of two D-free generators, read off the defining table."""
    if is_central_gen(a) or is_central_gen(b):
        return {}
    _, x, m = a
    _, y, mm = b
    s = m + mm
    tr = trace_basis(x, y)
    if n == 0:
        acc = {(0, ("x", name, s)): as_scalar(c) for name, c in bracket_basis(x, y)}
        if tr:
            if s != 0:
                acc[(1, ("tk1", s))] = as_scalar(Fraction(m, s) * tr)
            elif m:
                acc[(0, K2)] = as_scalar(m * tr)
        return acc
    if n == 1 and tr:
        return {(0, ("tk1", s) if s else K1): as_scalar(tr)}
    return {}


@lru_cache(maxsize=None)
def _product_cached(a, n, b):
    return tuple(product_symbols(a, n, b).items())


def product_symbols(a, n: int, b) -> dict:
    """a_(n) b for conformal symbols a = (j, gen), b = (k, gen')."""
    if n < 0:
        raise ValueError("n-products need n >= 0")
    (j, ga), (k, gb) = a, b
    if is_central_gen(ga) or is_central_gen(gb):
        return {}
    if j > 0:
        # (D a)_n b = -n a_(n-1) b
        if n == 0:
            return {}
        return add_into({}, _product_cached((j - 1, ga), n - 1, b), -n)
    if k > 0:
        # a_n (D b) = D(a_n b) + n a_(n-1) b
        inner = _product_cached(a, n, (k - 1, gb))
        acc = {}
        add_into(acc, (((jj + 1, g), c) for (jj, g), c in inner if g != K1))
        if n > 0:
            add_into(acc, _product_cached(a, n - 1, (k - 1, gb)), n)
        return acc
    return _base_product(ga, n, gb)


def nth_product(a: ConformalElement, n: int, b: ConformalElement) -> ConformalElement:
    if n < 0:
        raise ValueError("n-products need n >= 0")
    acc: dict = {}
    for sa, c in a.terms.items():
        for sb, d in b.terms.items():
            add_into(acc, _product_cached(sa, n, sb), c * d)
    return ConformalElement._wrap(acc)


def product_bound(a: ConformalElement, b: ConformalElement) -> int:
    """Largest n for which a_(n) b can be nonzero."""
    ja = max((j for j, _ in a.terms), default=0)
    jb = max((j for j, _ in b.terms), default=0)
    return ja + jb + 1


def conformal_grading(sym) -> int:
    j, gen = sym
    if gen == K1:
        return 0
    if gen[0] == "tk1":
        return j
    return j + 1


# --- affinization ----------------------------------------------------------

def _falling(q, j) -> Fraction:
    out = Fraction(1)
    for k in range(j):
        out *= q - k
    return out


def reduce_symbol(sym, m) -> dict:
    """(D^j gen)(m) = (-1)^j m(m-1)...(m-j+1) gen(m-j), with k1(m) = 0 unless m = -1."""
    j, gen = sym
    if gen == K1:
        return {(K1, -1): as_scalar(1)} if (j == 0 and m == -1) else {}
    c = _falling(m, j) * (-1) ** j
    if not c:
        return {}
    return {(gen, m - j): as_scalar(c)}


def reduce_affine(e: ConformalElement, m: int) -> AffineElement:
    acc: dict = {}
    for sym, c in e.terms.items():
        add_into(acc, reduce_symbol(sym, m), c)
    return AffineElement._wrap(acc)


@lru_cache(maxsize=None)
def _affine_cached(a, b):
    return tuple(affine_bracket_symbols(a, b).items())


def affine_bracket_symbols(a, b) -> dict:
    (ga, m), (gb, n) = a, b
    acc: dict = {}
    ca, cb = (0, ga), (0, gb)
    for i in range(2):
        prod = _product_cached(ca, i, cb)
        if not prod:
            continue
        coeff = binom(m, i)
        if not coeff:
            continue
        for sym, c in prod:
            add_into(acc, reduce_symbol(sym, m + n - i), c * coeff)
    return acc


def affine_bracket(u: AffineElement, v: AffineElement) -> AffineElement:
    if not isinstance(u, AffineElement) or not isinstance(v, AffineElement):
        raise TypeError("affine_bracket takes two AffineElements")
    acc: dict = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            add_into(acc, _affine_cached(a, b), c * d)
    return AffineElement._wrap(acc)


def affine_grading(sym) -> int:
    """deg a(p) = n - 1 - p for a of conformal degree n."""
    gen, p = sym
    return conformal_grading((0, gen)) - 1 - p


# --- i_g -----------------------------------------------------------------------

def i_g_symbol(sym):
    gen, m = sym
    kind = gen[0]
    if kind == "x":
        return ("x", gen[1], m, gen[2])
    if kind == "k2":
        return ("KB", m)
    if kind == "tk1":
        return ("KA", m + 1, gen[1])
    return ("k1",)


def i_g_inv_symbol(sym):
    kind = sym[0]
    if kind == "x":
        return (("x", sym[1], sym[3]), sym[2])
    if kind == "KB":
        return (K2, sym[1])
    if kind == "KA":
        return (("tk1", sym[2]), sym[1] - 1)
    return (K1, -1)


def i_g(u: AffineElement) -> tor.ToroidalElement:
    return tor.ToroidalElement._wrap({i_g_symbol(s): c for s, c in u.terms.items()})


def i_g_inv(v: tor.ToroidalElement) -> AffineElement:
    return AffineElement._wrap({i_g_inv_symbol(s): c for s, c in v.terms.items()})


# --- constructors ----------------------------------------------------------------

def gen_x(name: str, n: int = 0):
    return ("x", name, n)


def conf(name_or_gen, n: int = 0, D: int = 0) -> ConformalElement:
    """D^D (x) (name (x) t2^n), or D^D (x) gen when given a generator tuple."""
    gen = name_or_gen if isinstance(name_or_gen, tuple) else gen_x(name_or_gen, n)
    return ConformalElement({(D, gen): 1})


def aff(name_or_gen, n: int = 0, m: int = 0) -> AffineElement:
    gen = name_or_gen if isinstance(name_or_gen, tuple) else gen_x(name_or_gen, n)
    return AffineElement({(gen, m): 1})


def generator_window(bound: int) -> list:
    """D-free generators with |t2-exponent| <= bound (k1 included)."""
    rng = range(-bound, bound + 1)
    gens = [("x", name, n) for n in rng for name in BASIS]
    gens.append(K2)
    gens += [("tk1", s) for s in rng if s]
    gens.append(K1)
    return gens


def affine_basis_window(bound: int) -> list:
    rng = range(-bound, bound + 1)
    out = [(g, m) for g in generator_window(bound) if g != K1 for m in rng]
    out.append((K1, -1))
    return sorted(out, key=AffineElement.sort_key)
