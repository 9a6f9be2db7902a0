"""The non-lattice semilattice S in Z^2, the sign function Omega, and the
Jordan algebra spanned by monomials x^p, p in S."""

from __future__ import annotations

from enum import Enum

from babytkk.linear import LinComb, add_into


class Stratum(str, Enum):
    S0 = "S0"
    S1 = "S1"
    S2 = "S2"
    SPERP = "Sperp"


def stratum(p) -> Stratum:
    """Parity class of a lattice point: S0 even/even, S1 odd/even,
    S2 even/odd, Sperp odd/odd."""
    m, n = p
    return (Stratum.S0, Stratum.S2, Stratum.S1, Stratum.SPERP)[2 * (m & 1) + (n & 1)]


def in_semilattice(p) -> Stratum:
    return stratum(p)


def in_S(p) -> bool:
    return not (p[0] & 1 and p[1] & 1)


def in_S0(p) -> bool:
    return not (p[0] & 1 or p[1] & 1)


def omega(p) -> int:
    """(-1)^m - (-1)^n over 2: -1 on S1, 1 on S2, 0 elsewhere."""
    m, n = p
    return ((-1) ** (m & 1) - (-1) ** (n & 1)) // 2


def dot(a, b) -> int:
    return a[0] * b[0] + a[1] * b[1]


class JordanElement(LinComb):
    """Linear combination of monomials x^p, keyed by the point p in S."""

    __slots__ = ()
    algebra = "jordan"

    def __init__(self, terms=None):
        super().__init__(terms)
        for p in self.terms:
            if not in_S(p):
                raise ValueError(f"x^{p} is not a Jordan monomial: {p} lies in Sperp")


def monomial(m: int, n: int, coeff=1) -> JordanElement:
    return JordanElement({(m, n): coeff})


def jordan_mul(a: JordanElement, b: JordanElement) -> JordanElement:
    """x^p . x^q = x^(p+q) when p+q is in S, else 0."""
    acc: dict = {}
    for p, c in a.terms.items():
        for q, d in b.terms.items():
            s = (p[0] + q[0], p[1] + q[1])
            if in_S(s):
                add_into(acc, ((s, c * d),))
    return JordanElement._wrap(acc)


def window_points(bound: int, only_S: bool = False):
    pts = [(m, n) for m in range(-bound, bound + 1) for n in range(-bound, bound + 1)]
    return [p for p in pts if in_S(p)] if only_S else pts


__all__ = [
    "Stratum",
    "stratum",
    "in_semilattice",
    "in_S",
    "in_S0",
    "omega",
    "dot",
    "JordanElement",
    "monomial",
    "jordan_mul",
    "window_points",
]
