"""sp4 in its fixed 10-element basis, realized by exact 4x4 matrices.

Products are computed as matrix commutators and re-expressed in the basis
through a precomputed coordinate table.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from babytkk.scalars import ZERO, GaussRational, as_scalar

# name -> list of (row, col, entry), 1-based as in E_{i,j}
_DEFS = {
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
BASIS = tuple(_DEFS)
_INDEX = {name: i for i, name in enumerate(BASIS)}

Matrix = tuple  # 4x4 tuple of tuples of Fraction


def matrix_of(name: str) -> Matrix:
    rows = [[Fraction(0)] * 4 for _ in range(4)]
    for i, j, v in _DEFS[name]:
        rows[i - 1][j - 1] = Fraction(v)
    return tuple(tuple(r) for r in rows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(4)), Fraction(0)) for j in range(4))
        for i in range(4)
    )


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(a[i][j] - b[i][j] for j in range(4)) for i in range(4))


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(4)), Fraction(0))


_J = ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0))


def is_symplectic(a: Matrix) -> bool:
    """X^T J + J X = 0 for the form J = [[0, 1], [-1, 0]] in 2x2 blocks."""
    J = tuple(tuple(Fraction(x) for x in r) for r in _J)
    at = tuple(tuple(a[j][i] for j in range(4)) for i in range(4))
    s = matmul(at, J)
    t = matmul(J, a)
    return all(s[i][j] + t[i][j] == 0 for i in range(4) for j in range(4))


# Coordinates: each basis matrix has a "pivot" entry not shared by any other
# basis element (its first listed entry), so decomposition reads pivots off.
_PIVOTS = {name: (_DEFS[name][0][0] - 1, _DEFS[name][0][1] - 1) for name in BASIS}


def coordinates(a: Matrix) -> dict:
    """Express an sp4 matrix in the basis; raises if a is not in sp4."""
    out = {}
    for name in BASIS:
        i, j = _PIVOTS[name]
        if a[i][j]:
            out[name] = a[i][j]
    rebuilt = [[Fraction(0)] * 4 for _ in range(4)]
    for name, c in out.items():
        for i, j, v in _DEFS[name]:
            rebuilt[i - 1][j - 1] += c * v
    if tuple(tuple(r) for r in rebuilt) != a:
        raise AssertionError("matrix is not in the span of the sp4 basis")
    return out


def _check_basis() -> None:
    pivots = set(_PIVOTS.values())
    assert len(pivots) == len(BASIS)
    for name in BASIS:
        assert is_symplectic(matrix_of(name)), name
        for other in BASIS:
            if other != name:
                i, j = _PIVOTS[name]
                assert matrix_of(other)[i][j] == 0


_check_basis()


@lru_cache(maxsize=None)
def bracket_basis(x: str, y: str) -> tuple:
    """[x, y] for basis names, as a tuple of (name, Fraction)."""
    a, b = matrix_of(x), matrix_of(y)
    return tuple(sorted(coordinates(matsub(matmul(a, b), matmul(b, a))).items(), key=lambda kv: _INDEX[kv[0]]))


@lru_cache(maxsize=None)
def trace_basis(x: str, y: str) -> Fraction:
    return trace(matmul(matrix_of(x), matrix_of(y)))


class Sp4Element:
    """Coefficient vector over the fixed basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: as_scalar(v) for k, v in (coeffs or {}).items() if v}
        for k in self.coeffs:
            if k not in _INDEX:
                raise KeyError(f"{k!r} is not an sp4 basis name")

    def __eq__(self, other):
        return isinstance(other, Sp4Element) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            d[k] = d.get(k, ZERO) + v
        return Sp4Element(d)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        return Sp4Element({k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return "Sp4Element(" + " + ".join(f"{v}*{k}" for k, v in self.items()) + ")"

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _INDEX[kv[0]])


def basis_element(name: str) -> Sp4Element:
    return Sp4Element({name: 1})


def sp4_bracket(x: Sp4Element, y: Sp4Element) -> Sp4Element:
    d: dict = {}
    for a, c in x.coeffs.items():
        for b, e in y.coeffs.items():
            for name, v in bracket_basis(a, b):
                d[name] = d.get(name, ZERO) + c * e * v
    return Sp4Element(d)


def trace_form(x: Sp4Element, y: Sp4Element) -> GaussRational:
    total = ZERO
    for a, c in x.coeffs.items():
        for b, e in y.coeffs.items():
            t = trace_basis(a, b)
            if t:
                total = total + c * e * t
    return total


__all__ = [
    "BASIS",
    "Sp4Element",
    "basis_element",
    "sp4_bracket",
    "trace_form",
    "bracket_basis",
    "trace_basis",
    "matrix_of",
    "coordinates",
    "is_symplectic",
]
