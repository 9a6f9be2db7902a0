"""A generic induced (Verma-type) module engine.

A module is described by an ambient Lie algebra on hashable symbols plus a
triangular split of its basis:

* ``part(sym)`` is ``"minus"``, ``"zero"`` or ``"plus"``
* ``"plus"`` symbols kill the generating vector, ``"zero"`` symbols act on it
  by ``weight(sym)``, and ``"minus"`` symbols act freely

Vectors are dicts mapping PBW monomials (nondecreasing tuples of minus symbols
under ``order``) to coefficients; ``()`` is the generating vector.
"""

from __future__ import annotations

from babytkk.linear import add_into
from babytkk.scalars import ONE, as_scalar


class InducedModule:
    def __init__(self, bracket, part, weight, order, degree=None):
        self.bracket = bracket
        self.part = part
        self.weight = weight
        self.order = order
        self.degree = degree
        self._memo: dict = {}

    # --- the action ---------------------------------------------------------

    def act_mono(self, sym, mono: tuple) -> dict:
        key = (sym, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = self._act(sym, mono)
        self._memo[key] = out
        return out

    def _act(self, sym, mono):
        p = self.part(sym)
        if not mono:
            if p == "plus":
                return {}
            if p == "zero":
                w = as_scalar(self.weight(sym))
                return {(): w} if w else {}
            return {(sym,): ONE}
        head, rest = mono[0], mono[1:]
        if p == "minus" and self.order(sym) <= self.order(head):
            return {(sym,) + mono: ONE}
        # sym * head * rest = head * (sym * rest) + [sym, head] * rest
        acc: dict = {}
        for m, c in self.act_mono(sym, rest).items():
            add_into(acc, self.act_mono(head, m), c)
        for s, c in self.bracket(sym, head).items():
            add_into(acc, self.act_mono(s, rest), c)
        return acc

    def act(self, sym, vec: dict) -> dict:
        acc: dict = {}
        for m, c in vec.items():
            add_into(acc, self.act_mono(sym, m), c)
        return acc

    def act_element(self, elem: dict, vec: dict) -> dict:
        """Apply a linear combination of ambient symbols."""
        acc: dict = {}
        for s, c in elem.items():
            add_into(acc, self.act(s, vec), c)
        return acc

    def act_word(self, word, vec: dict) -> dict:
        """Apply word[-1] first, as for the product word[0] word[1] ... ."""
        for s in reversed(word):
            vec = self.act(s, vec)
            if not vec:
                break
        return vec

    def mono_degree(self, mono) -> int:
        return sum(self.degree(s) for s in mono)


def pbw_monomials(gens_by_degree: dict, d: int, order) -> list:
    """All nondecreasing monomials of total degree d.

    ``gens_by_degree`` maps a positive degree to the list of minus symbols
    of that degree.
    """
    gens = sorted((s for k in gens_by_degree for s in gens_by_degree[k]), key=order)
    deg = {s: k for k in gens_by_degree for s in gens_by_degree[k]}
    out: list = []

    def rec(start, remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for i in range(start, len(gens)):
            s = gens[i]
            k = deg[s]
            if k <= remaining:
                prefix.append(s)
                rec(i, remaining - k, prefix)
                prefix.pop()

    rec(0, d, [])
    return out


__all__ = ["InducedModule", "pbw_monomials"]
