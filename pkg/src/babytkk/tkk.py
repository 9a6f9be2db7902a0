"""The baby TKK algebra, implemented as a canonical-form bracket on symbols.

Basis symbols are tuples ``(kind, m, n)``:

* ``("x+", m, n)``, ``("x-", m, n)`` for (m, n) in S
* ``("h", m, n)`` for any (m, n) (the coroot symbols alpha-check(m, n))
* ``("C1", 2a, 2b)`` with b != 0, plus ``("C1", 0, 0)``
* ``("C2", 2a, 0)``

The central relation m*C1(m, n) + n*C2(m, n) = 0 (at even points) is solved
for C2 whenever n != 0; at (2a, 0) with a != 0 it forces C1 to vanish.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from babytkk.lattice import in_S, in_S0, omega
from babytkk.linear import LinComb, add_into
from babytkk.scalars import as_scalar

KINDS = ("x+", "x-", "h", "C1", "C2")
CENTRAL = ("C1", "C2")
_RANK = {k: i for i, k in enumerate(KINDS)}


class DomainError(ValueError):
    """A well-formed symbol that names no basis element (or the zero vector
    where a basis element is required)."""


def check_symbol(sym) -> None:
    kind, m, n = sym
    if kind not in _RANK:
        raise DomainError(f"unknown TKK symbol kind {kind!r}")
    if kind in ("x+", "x-") and not in_S((m, n)):
        raise DomainError(f"{kind}({m},{n}): ({m},{n}) lies in Sperp, where x± vanish")
    if kind == "C1" and not (in_S0((m, n)) and (n != 0 or m == 0)):
        raise DomainError(f"C1({m},{n}) is not a canonical central symbol")
    if kind == "C2" and not (in_S0((m, n)) and n == 0):
        raise DomainError(f"C2({m},{n}) is not a canonical central symbol")


class TkkElement(LinComb):
    __slots__ = ()
    algebra = "tkk"

    def __init__(self, terms=None):
        super().__init__(terms)
        for s in self.terms:
            check_symbol(s)

    @staticmethod
    def sort_key(sym):
        return (_RANK[sym[0]], sym[1], sym[2])


def _central(i: int, p) -> dict:
    """C_i(p) in the canonical basis; zero off S0 by definition."""
    if not in_S0(p):
        return {}
    m, n = p
    if i == 1:
        if n == 0 and m != 0:
            return {}
        return {("C1", m, n): as_scalar(1)}
    if n == 0:
        return {("C2", m, n): as_scalar(1)}
    return {("C1", m, n): as_scalar(Fraction(-m, n))}


def canonicalize_central(i: int, p) -> TkkElement:
    """Rewrite C_i(p) for an even point p into canonical central symbols."""
    if i not in (1, 2):
        raise ValueError("central index must be 1 or 2")
    if not in_S0(p):
        raise DomainError(f"C{i}{tuple(p)}: central symbols need both coordinates even")
    return TkkElement._wrap(_central(i, p))


def _pairing_central(rho, s, scale) -> dict:
    """scale * sum_i (rho . e_i) C_i(s)."""
    acc: dict = {}
    if rho[0]:
        add_into(acc, _central(1, s), scale * rho[0])
    if rho[1]:
        add_into(acc, _central(2, s), scale * rho[1])
    return acc


def _h(s, c) -> dict:
    return {("h",) + tuple(s): as_scalar(c)} if c else {}


def _x(kind, s, c) -> dict:
    if not c or not in_S(s):
        return {}
    return {(kind,) + tuple(s): as_scalar(c)}


def _r1(rho, tau) -> dict:
    s = (rho[0] + tau[0], rho[1] + tau[1])
    rs, ts = in_S(rho), in_S(tau)
    if not rs and not ts:
        return _pairing_central(rho, s, -4)
    if rs and ts and in_S(s):
        return _pairing_central(rho, s, 4)
    if (not rs and ts) or (rs and ts):
        return _h(s, 2 * omega(tau))
    # rho in S, tau not in S: the mirror image of the previous case
    return _h(s, -2 * omega(rho))


def _r2(rho, tau, kind) -> dict:
    s = (rho[0] + tau[0], rho[1] + tau[1])
    if in_S(rho):
        return _x(kind, s, 2 if kind == "x+" else -2)
    return _x(kind, s, 2 * omega(tau))


def _r3(rho, tau) -> dict:
    """[x+(rho), x-(tau)]."""
    s = (rho[0] + tau[0], rho[1] + tau[1])
    if not in_S(s):
        return _h(s, omega(tau))
    acc = _h(s, 1)
    add_into(acc, _pairing_central(rho, s, 2))
    return acc


def _neg(d: dict) -> dict:
    return {k: -v for k, v in d.items()}


@lru_cache(maxsize=None)
def _bracket_cached(a, b):
    return tuple(bracket_symbols(a, b).items())


def bracket_symbols(a, b) -> dict:
    """Bracket of two canonical basis symbols as a dict symbol -> coeff."""
    ka, kb = a[0], b[0]
    if ka in CENTRAL or kb in CENTRAL:
        return {}
    rho, tau = (a[1], a[2]), (b[1], b[2])
    if ka == "h" and kb == "h":
        return _r1(rho, tau)
    if ka == "h":
        return _r2(rho, tau, kb)
    if kb == "h":
        return _neg(_r2(tau, rho, ka))
    if ka == kb:
        return {}
    if ka == "x+":
        return _r3(rho, tau)
    return _neg(_r3(tau, rho))


def tkk_bracket(u: TkkElement, v: TkkElement) -> TkkElement:
    if not isinstance(u, TkkElement) or not isinstance(v, TkkElement):
        raise TypeError("tkk_bracket takes two TkkElements")
    acc: dict = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            add_into(acc, _bracket_cached(a, b), c * d)
    return TkkElement._wrap(acc)


def grading_weights(sym) -> tuple[int, int]:
    """Eigenvalues of ad d1, ad d2 on a basis symbol."""
    return (sym[1], sym[2])


def grading_degree(sym) -> int:
    """Degree for the Z-grading by -ad d1."""
    return -sym[1]


def triangular_part(sym) -> str:
    kind, m, _ = sym
    if m > 0:
        return "plus"
    if m < 0:
        return "minus"
    if kind == "x+":
        return "plus"
    if kind == "x-":
        return "minus"
    return "zero"


# convenience constructors ----------------------------------------------------

def symbol(kind: str, m: int, n: int) -> TkkElement:
    """Basis element by kind; C1/C2 at any even point are canonicalized."""
    if kind in CENTRAL:
        return canonicalize_central(1 if kind == "C1" else 2, (m, n))
    sym = (kind, m, n)
    check_symbol(sym)
    return TkkElement._wrap({sym: as_scalar(1)})


def xp(m, n):
    return symbol("x+", m, n)


def xm(m, n):
    return symbol("x-", m, n)


def h(m, n):
    return symbol("h", m, n)


def C1(m, n):
    return symbol("C1", m, n)


def C2(m, n):
    return symbol("C2", m, n)


def basis_window(bound: int) -> list:
    """All canonical basis symbols with both coordinates in [-bound, bound]."""
    out = []
    rng = range(-bound, bound + 1)
    for m in rng:
        for n in rng:
            if in_S((m, n)):
                out.append(("x+", m, n))
                out.append(("x-", m, n))
            out.append(("h", m, n))
            if in_S0((m, n)):
                if n != 0 or m == 0:
                    out.append(("C1", m, n))
                if n == 0:
                    out.append(("C2", m, n))
    return sorted(out, key=TkkElement.sort_key)
