"""Text form of elements: printing and parsing.

Grammar::

    element := "0" | term (("+" | "-") term)*
    term    := [scalar "*"] symbol
    scalar  := rational | rational "I" | "I" | "(" rational ("+"|"-") rational "I" ")"

Symbols, per algebra (``NAME`` is an sp4 basis name; names containing a sign
are parenthesized outside ``tw``):

* tkk: ``x+(m,n)``, ``x-(m,n)``, ``h(m,n)``, ``C1(m,n)``, ``C2(m,n)``
* jordan: ``x^(m,n)``
* toroidal: ``NAME*t1^a*t2^b``, ``t1^m*t2^s*k1``, ``t1^m*t2^s*k2``, ``k2@m``, ``k1``
* conformal: ``NAME*t2^n``, ``k2``, ``tk1(s)``, ``k1``, and ``D^j(...)`` of these
* affine: ``(NAME*t2^n)(m)``, ``k2(m)``, ``tk1(s)(m)``, ``k1(-1)``
* twisted: ``tw(NAME,n,j)(q)``, ``k2(m)``, ``tk1(s)(m)``, ``k1(-1)``
"""

from __future__ import annotations

import re
from fractions import Fraction

from babytkk import conformal as cf
from babytkk import lattice, tkk, toroidal, twist
from babytkk.linear import add_into
from babytkk.scalars import GaussRational, as_scalar
from babytkk.sp4 import BASIS

ALGEBRAS = ("tkk", "twisted", "affine", "toroidal", "conformal", "jordan")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text[:pos]}<HERE>{text[pos:]}")


DomainError = tkk.DomainError


# --- printing ------------------------------------------------------------------------

def _name(name: str, paren: bool = True) -> str:
    return f"({name})" if paren and ("+" in name or "-" in name) else name


def format_symbol(algebra: str, sym) -> str:
    if algebra == "tkk":
        kind, m, n = sym
        return f"{kind}({m},{n})"
    if algebra == "jordan":
        return f"x^({sym[0]},{sym[1]})"
    if algebra == "toroidal":
        kind = sym[0]
        if kind == "x":
            return f"{_name(sym[1])}*t1^{sym[2]}*t2^{sym[3]}"
        if kind == "KA":
            return f"t1^{sym[1]}*t2^{sym[2]}*k1"
        if kind == "KB":
            return f"k2@{sym[1]}"
        return "k1"
    if algebra == "conformal":
        j, gen = sym
        inner = _format_gen(gen)
        return f"D^{j}({inner})" if j else inner
    if algebra == "affine":
        gen, m = sym
        if gen[0] == "x":
            return f"({_format_gen(gen)})({m})"
        return f"{_format_gen(gen)}({m})"
    if algebra == "twisted":
        kind = sym[0]
        if kind == "tw":
            _, fam, n, j, q = sym
            return f"tw({fam},{n},{j})({q})"
        if kind == "k2":
            return f"k2({sym[1]})"
        if kind == "tk1":
            return f"tk1({sym[1]})({sym[2]})"
        return "k1(-1)"
    raise ValueError(f"unknown algebra {algebra!r}")


def _format_gen(gen) -> str:
    if gen[0] == "x":
        return f"{_name(gen[1])}*t2^{gen[2]}"
    if gen[0] == "tk1":
        return f"tk1({gen[1]})"
    return gen[0]


def _format_coeff(c: GaussRational) -> str:
    """Coefficient text for a term whose sign has been pulled out."""
    if not c.im:
        return "" if c.re == 1 else f"{c.re}*"
    if not c.re:
        return f"{c.im}I*"
    sign = "+" if c.im > 0 else "-"
    return f"({c.re}{sign}{abs(c.im)}I)*"


def _is_negative(c: GaussRational) -> bool:
    return c.re < 0 or (c.re == 0 and c.im < 0)


def format_element(e) -> str:
    algebra = e.algebra
    syms = sorted(e.terms, key=type(e).sort_key)
    if not syms:
        return "0"
    parts = []
    for i, s in enumerate(syms):
        c = as_scalar(e.terms[s])
        neg = _is_negative(c)
        body = _format_coeff(-c if neg else c) + format_symbol(algebra, s)
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


# --- parsing ----------------------------------------------------------------------------

_INT = r"[+-]?\d+"
_RAT = r"[+-]?\d+(?:/\d+)?"
_NAMES = "|".join(re.escape(n) for n in sorted(BASIS, key=len, reverse=True))
_PNAME = rf"(?:\((?P<pname>{_NAMES})\)|(?P<name>E\d\d))"
_UNSIGNED_RAT = r"\d+(?:/\d+)?"

_SCALAR_RE = re.compile(
    rf"\s*(?:\((?P<cre>{_RAT})\s*(?P<csign>[+-])\s*(?P<cim>{_UNSIGNED_RAT})?\s*I\s*\)"
    rf"|(?P<im>{_UNSIGNED_RAT})?\s*I(?![A-Za-z0-9(])|(?P<re>{_UNSIGNED_RAT}))\s*\*\s*"
)
_BARE_I_RE = re.compile(r"\s*(?P<im>{0})?\s*I\s*\*".format(_UNSIGNED_RAT))

_SYMBOLS = {
    "tkk": [
        ("tkk", re.compile(rf"(?P<kind>x\+|x-|h|C1|C2)\(\s*(?P<m>{_INT})\s*,\s*(?P<n>{_INT})\s*\)")),
    ],
    "jordan": [
        ("jordan", re.compile(rf"x\^\(\s*(?P<m>{_INT})\s*,\s*(?P<n>{_INT})\s*\)")),
    ],
    "toroidal": [
        ("tx", re.compile(rf"{_PNAME}\*t1\^(?P<a>{_INT})\*t2\^(?P<b>{_INT})")),
        ("tk", re.compile(rf"t1\^(?P<a>{_INT})\*t2\^(?P<b>{_INT})\*(?P<k>k1|k2)")),
        ("tkb", re.compile(rf"k2@(?P<m>{_INT})")),
        ("tk1", re.compile(r"k1(?![(@\w])")),
    ],
    "conformal": [
        ("cD", re.compile(r"D\^(?P<j>\d+)\(")),
        ("cx", re.compile(rf"{_PNAME}\*t2\^(?P<n>{_INT})")),
        ("ctk1", re.compile(rf"tk1\((?P<s>{_INT})\)")),
        ("ck", re.compile(r"(?P<k>k1|k2)(?![(@\w])")),
    ],
    "affine": [
        ("ax", re.compile(rf"\({_PNAME}\*t2\^(?P<n>{_INT})\)\((?P<m>{_INT})\)")),
        ("ak2", re.compile(rf"k2\((?P<m>{_INT})\)")),
        ("atk1", re.compile(rf"tk1\((?P<s>{_INT})\)\((?P<m>{_INT})\)")),
        ("ak1", re.compile(rf"k1\((?P<m>{_INT})\)")),
    ],
    "twisted": [
        ("tw", re.compile(
            rf"tw\(\s*(?P<fam>{_NAMES})\s*,\s*(?P<n>{_INT})\s*,\s*(?P<j>{_INT})\s*\)\((?P<q>{_RAT})\)")),
        ("wk2", re.compile(rf"k2\((?P<m>{_RAT})\)")),
        ("wtk1", re.compile(rf"tk1\((?P<s>{_INT})\)\((?P<m>{_RAT})\)")),
        ("wk1", re.compile(rf"k1\((?P<m>{_RAT})\)")),
    ],
}

_CLASSES = {
    "tkk": tkk.TkkElement,
    "jordan": lattice.JordanElement,
    "toroidal": toroidal.ToroidalElement,
    "conformal": cf.ConformalElement,
    "affine": cf.AffineElement,
    "twisted": twist.TwistedElement,
}


def _one(sym) -> dict:
    return {sym: as_scalar(1)}


def _name_of(m) -> str:
    return m.group("pname") or m.group("name")


def _check_name(name: str, text: str, pos: int) -> str:
    if name not in BASIS:
        raise ParseError(f"unknown sp4 basis name {name!r}", text, pos)
    return name


def _domain(fn, *args) -> dict:
    try:
        return fn(*args)
    except DomainError:
        raise
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def _build(kind: str, m, text: str, pos: int) -> dict:
    """Canonical dict for a matched symbol."""
    g = m.groupdict()
    if kind == "tkk":
        k, a, b = g["kind"], int(g["m"]), int(g["n"])
        if k in tkk.CENTRAL:
            return dict(tkk.canonicalize_central(1 if k == "C1" else 2, (a, b)).terms)
        sym = (k, a, b)
        tkk.check_symbol(sym)
        return _one(sym)
    if kind == "jordan":
        p = (int(g["m"]), int(g["n"]))
        if not lattice.in_S(p):
            raise DomainError(f"x^{p}: the point lies in Sperp")
        return _one(p)
    if kind == "tx":
        return _one(("x", _check_name(_name_of(m), text, pos), int(g["a"]), int(g["b"])))
    if kind == "tk":
        return toroidal.central(int(g["a"]), int(g["b"]), g["k"])
    if kind == "tkb":
        return _one(("KB", int(g["m"])))
    if kind == "tk1":
        return _one(("k1",))
    if kind == "cx":
        return _one((0, ("x", _check_name(_name_of(m), text, pos), int(g["n"]))))
    if kind == "ctk1":
        s = int(g["s"])
        if s == 0:
            raise DomainError("tk1(0) is not a generator; use k1")
        return _one((0, ("tk1", s)))
    if kind == "ck":
        return _one((0, (g["k"],)))
    if kind == "ax":
        return _one((("x", _check_name(_name_of(m), text, pos), int(g["n"])), int(g["m"])))
    if kind == "ak2":
        return _one((cf.K2, int(g["m"])))
    if kind == "atk1":
        s = int(g["s"])
        if s == 0:
            raise DomainError("tk1(0) is not a generator; use k1")
        return _one((("tk1", s), int(g["m"])))
    if kind == "ak1":
        return _one((cf.K1, -1)) if int(g["m"]) == -1 else {}
    if kind == "tw":
        sym = ("tw", g["fam"], int(g["n"]), int(g["j"]), Fraction(g["q"]))
        _domain(twist.check_symbol, sym)
        return _one(sym)
    if kind == "wk2":
        sym = ("k2", Fraction(g["m"]))
        _domain(twist.check_symbol, sym)
        return _one(("k2", int(sym[1])))
    if kind == "wtk1":
        sym = ("tk1", int(g["s"]), Fraction(g["m"]))
        _domain(twist.check_symbol, sym)
        return _one(("tk1", sym[1], int(sym[2])))
    if kind == "wk1":
        q = Fraction(g["m"])
        if q.denominator != 1:
            raise DomainError(f"k1 is sigma-fixed: index {q} must be an integer")
        return _one(("K1c",)) if q == -1 else {}
    raise AssertionError(kind)


def _match_symbol(algebra: str, text: str, pos: int):
    """Returns (dict, new position)."""
    for kind, rx in _SYMBOLS[algebra]:
        m = rx.match(text, pos)
        if not m:
            continue
        if kind == "cD":
            j = int(m.group("j"))
            inner, end = _match_symbol_inner_conformal(text, m.end())
            if end >= len(text) or text[end] != ")":
                raise ParseError("expected ')'", text, end)
            out = {}
            for (jj, gen), c in inner.items():
                if gen == cf.K1:
                    continue  # D k1 = 0
                out[(jj + j, gen)] = c
            if j == 0:
                out = inner
            return out, end + 1
        return _build(kind, m, text, pos), m.end()
    raise ParseError(f"expected a {algebra} symbol", text, pos)


def _match_symbol_inner_conformal(text, pos):
    for kind, rx in _SYMBOLS["conformal"][1:]:
        m = rx.match(text, pos)
        if m:
            return _build(kind, m, text, pos), m.end()
    raise ParseError("expected a conformal generator", text, pos)


def _match_scalar(text: str, pos: int):
    m = _SCALAR_RE.match(text, pos)
    if not m:
        return None, pos
    if m.group("cre") is not None:
        im = Fraction(m.group("cim")) if m.group("cim") else Fraction(1)
        if m.group("csign") == "-":
            im = -im
        return GaussRational(Fraction(m.group("cre")), im), m.end()
    if m.group("re") is not None:
        return as_scalar(Fraction(m.group("re"))), m.end()
    im = Fraction(m.group("im")) if m.group("im") else Fraction(1)
    return GaussRational(0, im), m.end()


def _skip(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def parse_terms(text: str, algebra: str) -> dict:
    if algebra not in _SYMBOLS:
        raise ValueError(f"unknown algebra {algebra!r}; expected one of {ALGEBRAS}")
    pos = _skip(text, 0)
    if text[pos:].strip() == "0":
        return {}
    acc: dict = {}
    first = True
    while True:
        pos = _skip(text, pos)
        sign = 1
        if pos < len(text) and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = _skip(text, pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        if pos >= len(text):
            raise ParseError("unexpected end of input", text, pos)
        coeff, pos = _match_scalar(text, pos)
        if coeff is None:
            coeff = as_scalar(1)
        terms, pos = _match_symbol(algebra, text, pos)
        add_into(acc, terms, coeff * sign)
        first = False
        pos = _skip(text, pos)
        if pos >= len(text):
            return acc


def parse_element(text: str, algebra: str | None = None):
    """Parse text into a canonical element; tries every algebra when none is
    named (first success wins, in the order of :data:`ALGEBRAS`)."""
    if algebra is not None:
        return _CLASSES[algebra]._wrap(parse_terms(text, algebra))
    errors = []
    for alg in ALGEBRAS:
        try:
            return _CLASSES[alg]._wrap(parse_terms(text, alg))
        except ParseError as exc:
            errors.append(exc)
    raise max(errors, key=lambda e: e.pos)


def roundtrip(e) -> bool:
    return parse_element(format_element(e), e.algebra) == e
