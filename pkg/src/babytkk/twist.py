"""The involution sigma of C_g, the twisted affinization, and the isomorphism
phi from the baby TKK algebra onto it.

Twisted basis symbols:

* ``("tw", fam, n, j, q)`` -- ((fam (x) t2^n)^(j))(q), q in j/2 + Z, where fam
  is one of the six families in :data:`FAMILIES` (the two sigma-fixed families
  only occur with j = 0)
* ``("k2", m)``, ``("tk1", s, m)`` (s != 0), ``("K1c",)`` = k1(-1)

Indices q are :class:`fractions.Fraction`.  Every other eigencomponent is
rewritten into these families via (sigma a)^(j) = (-1)^j a^(j).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from babytkk import conformal as cf
from babytkk import tkk
from babytkk import toroidal as tor
from babytkk.conformal import K1, K2, ConformalElement
from babytkk.linear import LinComb, add_into
from babytkk.scalars import I, as_scalar, binom

HALF = Fraction(1, 2)
FAMILIES = ("E13", "E31", "E12-E43", "E21-E34", "E11-E33", "E14+E23")
FIXED_FAMILIES = ("E12-E43", "E21-E34")
_FRANK = {f: i for i, f in enumerate(FAMILIES)}


class ParityError(ValueError):
    """An element was evaluated at an index whose parity does not match its
    sigma-eigenvalue."""


def _is_int(q) -> bool:
    return Fraction(q).denominator == 1


def parity(q) -> int:
    q = Fraction(q)
    if q.denominator == 1:
        return 0
    if q.denominator == 2:
        return 1
    raise ParityError(f"index {q} is not in (1/2)Z")


def check_symbol(sym) -> None:
    kind = sym[0]
    if kind == "tw":
        _, fam, n, j, q = sym
        if fam not in _FRANK or j not in (0, 1):
            raise ValueError(f"bad twisted symbol {sym!r}")
        if fam in FIXED_FAMILIES and j != 0:
            raise ValueError(f"{fam} is sigma-fixed: only j = 0 occurs")
        if parity(q) != j:
            raise ParityError(f"index {q} does not match eigencomponent j = {j}")
    elif kind == "k2":
        if not _is_int(sym[1]):
            raise ParityError("k2(m) needs an integer index")
    elif kind == "tk1":
        if sym[1] == 0 or not _is_int(sym[2]):
            raise ValueError(f"bad twisted symbol {sym!r}")
    elif sym != ("K1c",):
        raise ValueError(f"bad twisted symbol {sym!r}")


class TwistedElement(LinComb):
    __slots__ = ()
    algebra = "twisted"

    def __init__(self, terms=None):
        terms = {_norm(s): c for s, c in dict(terms or {}).items()}
        super().__init__(terms)
        for s in self.terms:
            check_symbol(s)

    @staticmethod
    def sort_key(sym):
        kind = sym[0]
        if kind == "tw":
            return (0, sym[4], sym[2], _FRANK[sym[1]], sym[3])
        if kind == "k2":
            return (1, Fraction(sym[1]), 0)
        if kind == "tk1":
            return (2, Fraction(sym[2]), sym[1])
        return (3, Fraction(0), 0)


def _norm(sym):
    if sym[0] == "tw":
        return sym[:4] + (Fraction(sym[4]),)
    if sym[0] == "k2":
        return ("k2", int(sym[1]))
    if sym[0] == "tk1":
        return ("tk1", sym[1], int(sym[2]))
    return sym


# --- sigma on C_g ---------------------------------------------------------------

def _central_cn(n: int) -> dict:
    """The central correction k2 (n = 0) or (1/n) D t2^n k1 (n != 0)."""
    if n == 0:
        return {(0, K2): as_scalar(1)}
    return {(1, ("tk1", n)): as_scalar(Fraction(1, n))}


_SHIFT = {"E13": ("E42", 1), "E31": ("E24", -1), "E24": ("E31", 1), "E42": ("E13", -1)}


@lru_cache(maxsize=None)
def sigma_gen(gen) -> tuple:
    """sigma on a D-free generator, as items of a conformal dict."""
    if cf.is_central_gen(gen):
        return (((0, gen), as_scalar(1)),)
    _, name, n = gen
    if name in _SHIFT:
        target, dn = _SHIFT[name]
        return (((0, ("x", target, n + dn)), as_scalar(1)),)
    if name in FIXED_FAMILIES:
        return (((0, gen), as_scalar(1)),)
    if name == "E14+E23":
        return (((0, ("x", "E41+E32", n + 1)), as_scalar(-1)),)
    if name == "E41+E32":
        return (((0, ("x", "E14+E23", n - 1)), as_scalar(-1)),)
    other = "E22-E44" if name == "E11-E33" else "E11-E33"
    acc = {(0, ("x", other, n)): as_scalar(-1)}
    add_into(acc, _central_cn(n))
    return tuple(acc.items())


def _sigma_symbol(sym) -> dict:
    j, gen = sym
    acc: dict = {}
    for (k, g), c in sigma_gen(gen):
        if j and g == K1:
            continue
        add_into(acc, (((k + j, g), c),))
    return acc


def sigma_c(e: ConformalElement) -> ConformalElement:
    acc: dict = {}
    for sym, c in e.terms.items():
        add_into(acc, _sigma_symbol(sym), c)
    return ConformalElement._wrap(acc)


def eigcomp(e: ConformalElement, j: int) -> ConformalElement:
    """(e + (-1)^j sigma(e)) / 2."""
    s = sigma_c(e)
    return (e + s * (-1) ** j) * HALF


def sigma_affine(u: cf.AffineElement) -> cf.AffineElement:
    """The induced map a(m) -> sigma(a)(m) on the affinization."""
    acc: dict = {}
    for (gen, m), c in u.terms.items():
        for sym, d in sigma_gen(gen):
            add_into(acc, cf.reduce_symbol(sym, m), c * d)
    return cf.AffineElement._wrap(acc)


def sigma_t(v: tor.ToroidalElement) -> tor.ToroidalElement:
    """i_g o sigma-hat o i_g^{-1} on the toroidal algebra."""
    return cf.i_g(sigma_affine(cf.i_g_inv(v)))


# --- eigencomponents in the canonical families ----------------------------------

@lru_cache(maxsize=None)
def eig_canon(gen, j: int) -> tuple:
    """gen^(j) as items ((D-power, target), coeff); target is a family triple
    ``(fam, n, j)`` or a central generator."""
    if cf.is_central_gen(gen):
        return (((0, gen), as_scalar(1)),) if j == 0 else ()
    _, name, n = gen
    sign = as_scalar((-1) ** j)
    if name in ("E13", "E31", "E11-E33", "E14+E23"):
        return (((0, (name, n, j)), as_scalar(1)),)
    if name in FIXED_FAMILIES:
        return (((0, (name, n, 0)), as_scalar(1)),) if j == 0 else ()
    if name == "E42":
        return (((0, ("E13", n - 1, j)), sign),)
    if name == "E24":
        return (((0, ("E31", n + 1, j)), sign),)
    if name == "E41+E32":
        return (((0, ("E14+E23", n - 1, j)), -sign),)
    # E22-E44 = c_n - sigma(E11-E33)
    acc = {(0, ("E11-E33", n, j)): -sign}
    if j == 0:
        add_into(acc, _central_cn(n))
    return tuple(acc.items())


def _falling(q, k) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= q - i
    return out


def _target_at(target, q) -> dict:
    if isinstance(target[0], str) and target[0] in _FRANK:
        fam, n, j = target
        return {("tw", fam, n, j, Fraction(q)): as_scalar(1)}
    if not _is_int(q):
        raise ParityError(f"sigma-fixed central element evaluated at non-integer index {q}")
    q = int(q)
    if target == K1:
        return {("K1c",): as_scalar(1)} if q == -1 else {}
    if target == K2:
        return {("k2", q): as_scalar(1)}
    return {("tk1", target[1], q): as_scalar(1)}


@lru_cache(maxsize=None)
def _reduce_symbol(sym, q) -> tuple:
    """(sym^(j))(q) in twisted basis symbols, j the parity of q."""
    k, gen = sym
    j = parity(q)
    if gen == K1:
        if k or j:
            return ()
        return tuple(_target_at(K1, q).items())
    acc: dict = {}
    c = _falling(q, k) * (-1) ** k
    if not c:
        return ()
    q1 = q - k
    for (kk, target), d in eig_canon(gen, j):
        c2 = _falling(q1, kk) * (-1) ** kk
        if c2:
            add_into(acc, _target_at(target, q1 - kk), d * c * c2)
    return tuple(acc.items())


def _reduce_dict(terms, q) -> dict:
    acc: dict = {}
    for sym, c in terms:
        add_into(acc, _reduce_symbol(sym, q), c)
    return acc


def twisted_reduce(a: ConformalElement, q) -> "TwistedElement":
    """Evaluate an element of the sigma-eigenspace selected by q at index q."""
    q = Fraction(q)
    j = parity(q)
    if eigcomp(a, 1 - j):
        raise ParityError(f"element {a} is not in the (-1)^{j} eigenspace required by index {q}")
    return TwistedElement._wrap(_reduce_dict(a.terms.items(), q))


# --- twisted bracket ---------------------------------------------------------------

@lru_cache(maxsize=None)
def representative(sym) -> tuple:
    """(conformal element items, index) represented by a twisted symbol."""
    kind = sym[0]
    if kind == "tw":
        _, fam, n, j, q = sym
        rep = eigcomp(ConformalElement._wrap({(0, ("x", fam, n)): as_scalar(1)}), j)
        return tuple(rep.terms.items()), Fraction(q)
    if kind == "k2":
        return (((0, K2), as_scalar(1)),), Fraction(sym[1])
    if kind == "tk1":
        return (((0, ("tk1", sym[1])), as_scalar(1)),), Fraction(sym[2])
    return (((0, K1), as_scalar(1)),), Fraction(-1)


@lru_cache(maxsize=None)
def _twisted_cached(a, b) -> tuple:
    return tuple(twisted_bracket_symbols(a, b).items())


def twisted_bracket_symbols(a, b) -> dict:
    ra, q = representative(a)
    rb, qq = representative(b)
    bound = max(s[0] for s, _ in ra) + max(s[0] for s, _ in rb) + 1
    acc: dict = {}
    for i in range(bound + 1):
        coeff = binom(q, i)
        if not coeff:
            continue
        prod: dict = {}
        for sa, c in ra:
            for sb, d in rb:
                add_into(prod, cf._product_cached(sa, i, sb), c * d)
        if prod:
            add_into(acc, _reduce_dict(prod.items(), q + qq - i), coeff)
    return acc


def twisted_bracket(u: TwistedElement, v: TwistedElement) -> TwistedElement:
    if not isinstance(u, TwistedElement) or not isinstance(v, TwistedElement):
        raise TypeError("twisted_bracket takes two TwistedElements")
    acc: dict = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            add_into(acc, _twisted_cached(a, b), c * d)
    return TwistedElement._wrap(acc)


def twisted_grading(sym) -> Fraction:
    """n - 1 - q for a symbol built from an element of conformal degree n."""
    kind = sym[0]
    if kind == "tw":
        return -Fraction(sym[4])
    if kind == "k2":
        return Fraction(-sym[1])
    if kind == "tk1":
        return Fraction(-1 - sym[2])
    return Fraction(0)


# --- phi --------------------------------------------------------------------------

def _split(v: int) -> tuple[int, int]:
    r = v & 1
    return (v - r) // 2, r


@lru_cache(maxsize=None)
def phi_symbol(sym) -> tuple:
    kind, M, N = sym
    m, j = _split(M)
    n, k = _split(N)
    q = Fraction(m) + Fraction(j, 2)
    if kind == "x+":
        if k == 0:
            return ((("tw", "E13", n, j, q), as_scalar(2)),)
        return ((("tw", "E12-E43", n + 1, 0, q), I),)
    if kind == "x-":
        if k == 0:
            return ((("tw", "E31", n, j, q), as_scalar(2)),)
        return ((("tw", "E21-E34", n, 0, q), -I),)
    if kind == "h":
        if k == 0:
            return ((("tw", "E11-E33", n, j, q), as_scalar(2)),)
        return ((("tw", "E14+E23", n, j, q), I * 2),)
    if kind == "C1":
        if n == 0:
            return ((("K1c",), as_scalar(HALF)),)
        return ((("tk1", n, m - 1), as_scalar(HALF)),)
    return ((("k2", m), as_scalar(HALF)),)


@lru_cache(maxsize=None)
def phi_inv_symbol(sym) -> tuple:
    kind = sym[0]
    if kind == "tw":
        _, fam, n, j, q = sym
        m = int(q - Fraction(j, 2))
        M = 2 * m + j
        table = {
            "E13": ("x+", 2 * n, as_scalar(HALF)),
            "E12-E43": ("x+", 2 * n - 1, -I),
            "E31": ("x-", 2 * n, as_scalar(HALF)),
            "E21-E34": ("x-", 2 * n + 1, I),
            "E11-E33": ("h", 2 * n, as_scalar(HALF)),
            "E14+E23": ("h", 2 * n + 1, -I * HALF),
        }
        k, N, c = table[fam]
        return (((k, M, N), c),)
    if kind == "k2":
        return ((("C2", 2 * sym[1], 0), as_scalar(2)),)
    if kind == "tk1":
        return ((("C1", 2 * (sym[2] + 1), 2 * sym[1]), as_scalar(2)),)
    return ((("C1", 0, 0), as_scalar(2)),)


def phi(u: tkk.TkkElement) -> TwistedElement:
    if not isinstance(u, tkk.TkkElement):
        raise TypeError("phi takes a TkkElement")
    acc: dict = {}
    for s, c in u.terms.items():
        add_into(acc, phi_symbol(s), c)
    return TwistedElement._wrap(acc)


def phi_inv(v: TwistedElement) -> tkk.TkkElement:
    if not isinstance(v, TwistedElement):
        raise TypeError("phi_inv takes a TwistedElement")
    acc: dict = {}
    for s, c in v.terms.items():
        add_into(acc, phi_inv_symbol(s), c)
    return tkk.TkkElement._wrap(acc)


def field_coeff(name: str, n: int, r: int, m: int) -> tkk.TkkElement:
    """phi^{-1}((name (x) t2^n)^(r)(m + r/2)): a coefficient of the twisted
    generating field of name (x) t2^n, read in the TKK algebra."""
    a = ConformalElement._wrap({(0, ("x", name, n)): as_scalar(1)})
    q = Fraction(m) + Fraction(r, 2)
    return phi_inv(twisted_reduce(eigcomp(a, r), q))


# --- helpers for sweeps ---------------------------------------------------------------

def tw(fam: str, n: int, j: int, q) -> TwistedElement:
    return TwistedElement({("tw", fam, n, j, Fraction(q)): 1})


def basis_window(bound: int) -> list:
    """Images under phi of the TKK window basis (a twisted window)."""
    return sorted({s for t in tkk.basis_window(bound) for s, _ in phi_symbol(t)}, key=TwistedElement.sort_key)
