"""The affine algebra sl2-hat, its level-l vacuum windows, and the sl2-hat
subalgebras sitting inside the baby TKK algebra and the affinization of C_g.

sl2-hat symbols: ``("e", m)``, ``("f", m)``, ``("h", m)``, ``("K",)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from babytkk import conformal as cf
from babytkk import tkk
from babytkk.linalg import RowReducer
from babytkk.linear import add_into
from babytkk.modules.forms import gram_ranks
from babytkk.modules.verma import InducedModule, pbw_monomials
from babytkk.scalars import ONE, as_scalar
from babytkk.sp4 import bracket_basis, trace_basis

KHAT = ("K",)
_LETTERS = {"e": 0, "f": 1, "h": 2}


@lru_cache(maxsize=None)
def _sl2_bracket_cached(a, b):
    return tuple(sl2_bracket_symbols(a, b).items())


def sl2_bracket_symbols(a, b) -> dict:
    if a == KHAT or b == KHAT:
        return {}
    (x, m), (y, n) = a, b
    s = m + n
    one = ONE
    if x == y:
        if x == "h" and s == 0 and m:
            return {KHAT: as_scalar(2 * m)}
        return {}
    if (x, y) == ("e", "f"):
        out = {("h", s): one}
        if s == 0 and m:
            out[KHAT] = as_scalar(m)
        return out
    if (x, y) == ("f", "e"):
        return {k: -v for k, v in sl2_bracket_symbols(b, a).items()}
    if x == "h":
        return {(y, s): as_scalar(2 if y == "e" else -2)}
    return {k: -v for k, v in sl2_bracket_symbols(b, a).items()}


def sl2_bracket(a, b) -> dict:
    return dict(_sl2_bracket_cached(a, b))


def sl2_omega(sym):
    """The Chevalley anti-involution e(m) <-> f(-m), h(m) -> h(-m)."""
    if sym == KHAT:
        return sym, 1
    x, m = sym
    return ({"e": "f", "f": "e", "h": "h"}[x], -m), 1


# --- vacuum module ------------------------------------------------------------

def sl2_vacuum(level) -> InducedModule:
    return InducedModule(
        bracket=sl2_bracket,
        part=lambda s: "zero" if s == KHAT else ("plus" if s[1] >= 0 else "minus"),
        weight=lambda s: level,
        order=lambda s: (s[1], _LETTERS[s[0]]),
        degree=lambda s: -s[1],
    )


def sl2_minus_by_degree(N: int) -> dict:
    return {d: [(x, -d) for x in ("e", "f", "h")] for d in range(1, N + 1)}


def verma_basis(N: int) -> dict:
    order = lambda s: (s[1], _LETTERS[s[0]])  # noqa: E731
    gens = sl2_minus_by_degree(N)
    return {d: pbw_monomials(gens, d, order) for d in range(N + 1)}


def _mono_order(mono):
    return tuple((s[1], _LETTERS[s[0]]) for s in mono)


def closure_submodule(module: InducedModule, seeds: list, N: int, ops) -> dict:
    """Span, per degree <= N, of the submodule generated by ``seeds``.

    ``ops`` lists the ambient symbols used as generators.  Applying raising
    operators before lowering ones never overshoots the final degree, so
    closing under single-generator moves inside degree <= N is exact.
    """
    spans: dict = {}
    queue = []
    for v in seeds:
        queue.append(v)
    while queue:
        v = queue.pop()
        d = module.mono_degree(next(iter(v)))
        rr = spans.setdefault(d, RowReducer(_mono_order))
        if not rr.add(v):
            continue
        for s in ops:
            w = module.act(s, v)
            if not w:
                continue
            dw = module.mono_degree(next(iter(w)))
            if dw <= N:
                queue.append(w)
    return {d: rr for d, rr in spans.items()}


def sl2_vacuum_windows(level: int, N: int) -> dict:
    """Graded dimensions of V(l,0) and two independent computations of the
    irreducible quotient L(l,0) in degrees <= N."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    mod = sl2_vacuum(level)
    basis = verma_basis(N)
    verma = {d: len(b) for d, b in basis.items()}
    seed_mono = tuple([("e", -1)] * (level + 1))
    seeds = []
    if level + 1 <= N:
        seeds.append({seed_mono: ONE})
    ops = [(x, m) for m in range(-N, N + 1) for x in ("e", "f", "h")]
    spans = closure_submodule(mod, seeds, N, ops)
    closure = {d: verma[d] - (len(spans[d]) if d in spans else 0) for d in range(N + 1)}
    gram = gram_ranks(mod, basis, sl2_omega)
    return {
        "level": level,
        "verma": verma,
        "closure_quotient": closure,
        "gram_rank": gram,
        "agree": closure == gram,
    }


# --- embeddings -----------------------------------------------------------------

ROOTS = ("2e1", "-2e1", "2e2", "-2e2", "e1-e2", "-e1+e2")
ROOT_VECTOR = {
    "2e1": "E13",
    "-2e1": "E31",
    "2e2": "E24",
    "-2e2": "E42",
    "e1-e2": "E12-E43",
    "-e1+e2": "E21-E34",
}
NEGATIVE = {"2e1": "-2e1", "-2e1": "2e1", "2e2": "-2e2", "-2e2": "2e2", "e1-e2": "-e1+e2", "-e1+e2": "e1-e2"}


def c_beta(beta: str) -> Fraction:
    """tr(e_beta e_{-beta})."""
    return trace_basis(ROOT_VECTOR[beta], ROOT_VECTOR[NEGATIVE[beta]])


def coroot(beta: str) -> dict:
    """beta-check as sp4 coordinates: the multiple of [e_beta, e_-beta] that
    acts on e_beta by 2."""
    e, f = ROOT_VECTOR[beta], ROOT_VECTOR[NEGATIVE[beta]]
    h0 = dict(bracket_basis(e, f))
    scale = None
    acc: dict = {}
    for name, c in h0.items():
        for nm, d in bracket_basis(name, e):
            acc[nm] = acc.get(nm, 0) + c * d
    scale = acc.get(e)
    if not scale or any(v for k, v in acc.items() if k != e):
        raise AssertionError(f"{beta}: [e, f] is not a coroot direction")
    return {name: Fraction(2) * c / scale for name, c in h0.items()}


@dataclass
class Sl2Embedding:
    kind: str
    params: tuple
    ambient: str  # "tkk" or "affine"
    level_scale: Fraction
    _e: object = field(repr=False)
    _f: object = field(repr=False)
    _h: object = field(repr=False)
    k: object = field(repr=False)

    def e(self, m):
        return self._e(m)

    def f(self, m):
        return self._f(m)

    def h(self, m):
        return self._h(m)

    def bracket(self, u, v):
        return tkk.tkk_bracket(u, v) if self.ambient == "tkk" else cf.affine_bracket(u, v)

    def image(self, sym):
        if sym == KHAT:
            return self.k
        x, m = sym
        return {"e": self.e, "f": self.f, "h": self.h}[x](m)

    def relation_failures(self, bound: int = 3) -> list:
        """Pairs (a, b) of sl2-hat symbols with |modes| <= bound on which the
        image of [a, b] differs from the ambient bracket of the images."""
        syms = [(x, m) for m in range(-bound, bound + 1) for x in ("e", "f", "h")] + [KHAT]
        bad = []
        zero = self.k * 0
        for a in syms:
            for b in syms:
                lhs = zero
                for s, c in sl2_bracket(a, b).items():
                    lhs = lhs + self.image(s) * c
                if self.bracket(self.image(a), self.image(b)) != lhs:
                    bad.append((a, b))
        return bad

    def describe(self) -> str:
        p = ",".join(str(x) for x in self.params)
        return f"{self.kind}({p})" if p else self.kind


def _tkk(kind, m, n):
    return tkk.symbol(kind, m, n)


def _tkk_zero():
    return tkk.TkkElement()


def sl2_embedding(kind: str, *params, check: bool = True, bound: int = 3) -> Sl2Embedding:
    """Build the sl2-hat subalgebra of the given kind.

    kinds: ``"A"`` (n), ``"B"`` (n), ``"I"`` (beta, n), ``"a0"``, ``"a1"``.
    """
    if kind == "A":
        (n,) = params

        def h(m):
            out = _tkk("h", m, 0)
            if m % 2 == 0:
                out = out + tkk.C2(m, 0) * (4 * n)
            return out

        emb = Sl2Embedding(
            "A", (n,), "tkk", Fraction(2),
            lambda m: _tkk("x+", m, 2 * n), lambda m: _tkk("x-", m, -2 * n), h, tkk.C1(0, 0) * 2,
        )
    elif kind == "B":
        (n,) = params
        emb = Sl2Embedding(
            "B", (n,), "tkk", Fraction(4),
            lambda m: _tkk("x+", 2 * m, 2 * n + 1),
            lambda m: _tkk("x-", 2 * m, -2 * n - 1),
            lambda m: _tkk("h", 2 * m, 0) + tkk.C2(2 * m, 0) * (4 * n + 2),
            tkk.C1(0, 0) * 4,
        )
    elif kind == "a0":
        emb = Sl2Embedding(
            "a0", (), "tkk", Fraction(2),
            lambda m: _tkk("x+", 0, m), lambda m: _tkk("x-", 0, m), lambda m: _tkk("h", 0, m), tkk.C2(0, 0) * 2,
        )
    elif kind == "a1":
        emb = Sl2Embedding(
            "a1", (), "tkk", Fraction(4),
            lambda m: _tkk("x-", 1, 2 * m),
            lambda m: _tkk("x+", -1, 2 * m),
            lambda m: tkk.C1(0, 2 * m) * 2 - _tkk("h", 0, 2 * m),
            tkk.C2(0, 0) * 4,
        )
    elif kind == "I":
        beta, n = params
        if beta not in ROOT_VECTOR:
            raise ValueError(f"unknown root {beta!r}; expected one of {ROOTS}")
        cb = c_beta(beta)
        e_name, f_name = ROOT_VECTOR[beta], ROOT_VECTOR[NEGATIVE[beta]]
        cor = coroot(beta)

        def h(m):
            terms = {(("x", name, 0), m): c for name, c in cor.items()}
            if n:
                add_into(terms, {(cf.K2, m): as_scalar(n * cb)})
            return cf.AffineElement(terms)

        emb = Sl2Embedding(
            "I", (beta, n), "affine", cb,
            lambda m: cf.aff(e_name, n, m), lambda m: cf.aff(f_name, -n, m), h,
            cf.AffineElement({(cf.K1, -1): cb}),
        )
    else:
        raise ValueError(f"unknown embedding kind {kind!r}")
    if check:
        bad = emb.relation_failures(bound)
        if bad:
            raise AssertionError(f"{emb.describe()}: sl2-hat relations fail on {bad[:3]}")
    return emb


def all_embeddings(n_values=(-1, 0, 1)) -> list:
    out = []
    for n in n_values:
        out.append(("A", (n,)))
        out.append(("B", (n,)))
        for beta in ROOTS:
            out.append(("I", (beta, n)))
    out.append(("a0", ()))
    out.append(("a1", ()))
    return out
