"""Finite formal linear combinations of hashable basis symbols over Q(i)."""

from __future__ import annotations

from babytkk.scalars import ZERO, GaussRational, as_scalar


def add_into(acc: dict, terms, scale=None) -> dict:
    """Accumulate ``scale * terms`` into ``acc`` in place, dropping zeros."""
    items = terms.items() if isinstance(terms, dict) else terms
    for sym, c in items:
        if scale is not None:
            c = c * scale
        if not c:
            continue
        new = acc.get(sym, ZERO) + c
        if new:
            acc[sym] = new
        else:
            acc.pop(sym, None)
    return acc


class LinComb:
    """Immutable map symbol -> nonzero coefficient.

    Subclasses fix the algebra (and so the symbol language); mixing two
    different subclasses in arithmetic is a type error.
    """

    __slots__ = ("terms", "_hash")
    algebra = "generic"

    def __init__(self, terms=None):
        d = {}
        if terms:
            add_into(d, ((s, as_scalar(c)) for s, c in dict(terms).items()))
        self.terms = d
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict):
        obj = object.__new__(cls)
        obj.terms = d
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, sym, coeff=1):
        return cls({sym: coeff})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {self.algebra} and {getattr(other, 'algebra', type(other).__name__)} elements")

    def __add__(self, other):
        self._check(other)
        return self._wrap(add_into(dict(self.terms), other.terms))

    def __sub__(self, other):
        self._check(other)
        return self._wrap(add_into(dict(self.terms), other.terms, scale=-1))

    def __neg__(self):
        return self._wrap({s: -c for s, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            return NotImplemented
        scalar = as_scalar(scalar)
        if not scalar:
            return self.zero()
        return self._wrap({s: c * scalar for s, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0])))

    def __len__(self):
        return len(self.terms)

    def coeff(self, sym) -> GaussRational:
        return self.terms.get(sym, ZERO)

    @staticmethod
    def sort_key(sym):
        return sym

    def map_linear(self, fn, target=None):
        """Extend ``fn: symbol -> LinComb of class target`` linearly."""
        target = target or type(self)
        acc: dict = {}
        for sym, c in self.terms.items():
            img = fn(sym)
            if type(img) is not target:
                raise TypeError(f"map produced {type(img).__name__}, expected {target.__name__}")
            add_into(acc, img.terms, c)
        return target._wrap(acc)

    def __str__(self):
        from babytkk.parsing import format_element

        return format_element(self)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"
