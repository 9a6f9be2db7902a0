"""Highest-weight modules V(lambda, mu, c) of the baby TKK algebra, their
windows, contravariant Gram ranks and integrability checks.

Windows are cut by the *principal degree* pdeg = -2m - a, where a = +1 for
x+, -1 for x- and 0 otherwise.  Every minus-part generator has pdeg >= 1 (the
d1-degree alone leaves the infinitely many x-(0, n) and their powers in
degree 0), so each (degree, loop band) slice is finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial

from babytkk import tkk
from babytkk.lattice import in_S
from babytkk.modules.forms import gram_matrix, in_radical, rank_of
from babytkk.modules.verma import InducedModule, pbw_monomials
from babytkk.scalars import ZERO, GaussRational, as_scalar, parse_scalar

_KRANK = {"x-": 0, "x+": 1, "h": 2, "C1": 3, "C2": 4}


@dataclass(frozen=True)
class WeightData:
    lam: tuple
    mu: tuple
    c: tuple

    @classmethod
    def make(cls, lam, mu, c) -> "WeightData":
        cs = tuple(parse_scalar(x) if isinstance(x, str) else as_scalar(x) for x in c)
        return cls(tuple(int(x) for x in lam), tuple(int(x) for x in mu), cs)

    @property
    def level(self) -> int:
        return sum(self.lam) + sum(self.mu)

    def inverted(self) -> "WeightData":
        """The triple with every c_i replaced by 1/c_i (the weight lambda o omega)."""
        return WeightData(self.lam, self.mu, tuple(x.inverse() for x in self.c))

    def power_sum(self, coeffs, k: int) -> GaussRational:
        total = ZERO
        for a, x in zip(coeffs, self.c):
            if a:
                total = total + x ** k * a
        return total


def validate_triple(w: WeightData, level=None) -> tuple[bool, list]:
    diags = []
    r = len(w.c)
    if not (len(w.lam) == len(w.mu) == r) or r == 0:
        diags.append("lambda, mu and c must have the same positive length")
        return False, diags
    if any(x < 0 for x in w.lam + w.mu):
        diags.append("lambda_i and mu_i must be nonnegative integers")
    for i, (a, b) in enumerate(zip(w.lam, w.mu)):
        if a + b <= 0:
            diags.append(f"lambda_{i + 1} + mu_{i + 1} = 0")
    if any(not x for x in w.c):
        diags.append("evaluation points must be nonzero")
    if len(set(w.c)) != r:
        diags.append("evaluation points are not distinct")
    if level is not None and w.level != level:
        diags.append(f"sum of lambda_i + mu_i is {w.level}, not {level}")
    return not diags, diags


def triples_equivalent(w1: WeightData, w2: WeightData) -> bool:
    if len(w1.c) != len(w2.c):
        return False
    rows1 = list(zip(w1.lam, w1.mu, w1.c))
    rows2 = list(zip(w2.lam, w2.mu, w2.c))
    key = lambda t: (t[0], t[1], t[2].re, t[2].im)  # noqa: E731
    if len(rows1) <= 7:
        return any([rows1[i] for i in p] == rows2 for p in permutations(range(len(rows1))))
    return sorted(rows1, key=key) == sorted(rows2, key=key)


def in_H(sym) -> bool:
    kind, m, n = sym
    if m != 0:
        return False
    if kind == "h":
        return True
    if kind == "C1":
        return n % 2 == 0
    return kind == "C2" and n == 0


def highest_weight_action(w: WeightData, sym) -> GaussRational:
    """Scalar by which an element of the Cartan part acts on v."""
    if not in_H(sym):
        raise ValueError(f"{sym} is not in the Cartan part")
    kind, _, n = sym
    if kind == "h":
        return w.power_sum(w.lam, n)
    if kind == "C2":
        return ZERO
    k = n // 2
    # 2 C1(0, 2k) = alpha(0, 2k) + (2 C1(0, 2k) - alpha(0, 2k))
    return (w.power_sum(w.lam, 2 * k) + w.power_sum(w.mu, k)) * Fraction(1, 2)


def element_action(w: WeightData, elem: tkk.TkkElement) -> GaussRational:
    total = ZERO
    for s, c in elem.terms.items():
        total = total + highest_weight_action(w, s) * c
    return total


# --- the module -------------------------------------------------------------------

def pdeg(sym) -> int:
    kind, m, _ = sym
    a = 1 if kind == "x+" else -1 if kind == "x-" else 0
    return -2 * m - a


def pbw_key(sym):
    """PBW order: principal degree, then kind, then loop weight."""
    return (pdeg(sym), _KRANK[sym[0]], sym[1], sym[2])


def tkk_omega(sym):
    """omega(x+-(rho)) = x-+(-rho); omega(h(rho)) = h(-rho), with a sign
    -1 when rho lies in Sperp; omega(C_i(p)) = C_i(-p)."""
    kind, m, n = sym
    if kind == "x+":
        return ("x-", -m, -n), 1
    if kind == "x-":
        return ("x+", -m, -n), 1
    if kind == "h":
        return ("h", -m, -n), (1 if in_S((m, n)) else -1)
    return (kind, -m, -n), 1


def omega_element(e: tkk.TkkElement) -> tkk.TkkElement:
    acc = {}
    for s, c in e.terms.items():
        t, sign = tkk_omega(s)
        acc[t] = c * sign
    return tkk.TkkElement._wrap(acc)


def omega_failures(bound: int) -> list:
    """Pairs on which omega fails to be an anti-automorphism."""
    syms = tkk.basis_window(bound)
    bad = []
    for a in syms:
        for b in syms:
            ua, ub = tkk.TkkElement({a: 1}), tkk.TkkElement({b: 1})
            lhs = omega_element(tkk.tkk_bracket(ua, ub))
            rhs = tkk.tkk_bracket(omega_element(ub), omega_element(ua))
            if lhs != rhs:
                bad.append((a, b))
    return bad


def _tkk_bracket_dict(a, b) -> dict:
    return dict(tkk._bracket_cached(a, b))


def tkk_verma(w: WeightData) -> InducedModule:
    return InducedModule(
        bracket=_tkk_bracket_dict,
        part=tkk.triangular_part,
        weight=lambda s: highest_weight_action(w, s),
        order=pbw_key,
        degree=pdeg,
    )


def minus_generators(N: int, W: int) -> dict:
    """Minus-part basis symbols with pdeg <= N and loop weight in [-W, W]."""
    out: dict = {}
    for sym in _minus_candidates(N, W):
        d = pdeg(sym)
        if 1 <= d <= N:
            out.setdefault(d, []).append(sym)
    for d in out:
        out[d].sort(key=pbw_key)
    return out


def _minus_candidates(N, W):
    for m in range(-(N // 2) - 1, 1):
        for n in range(-W, W + 1):
            for kind in ("x+", "x-", "h"):
                if kind != "h" and not in_S((m, n)):
                    continue
                sym = (kind, m, n)
                if tkk.triangular_part(sym) == "minus":
                    yield sym
            if m < 0 and m % 2 == 0 and n % 2 == 0:
                if n != 0:
                    yield ("C1", m, n)
                else:
                    yield ("C2", m, 0)


def plus_generators(N: int, W: int) -> dict:
    """omega-images of the minus generators: plus-part symbols lowering pdeg
    by k <= N, loop weight in [-W, W]."""
    out: dict = {}
    for d, syms in minus_generators(N, W).items():
        out[d] = [tkk_omega(s)[0] for s in syms]
    return out


@dataclass
class ModuleWindow:
    weights: WeightData
    N: int
    W: int
    module: InducedModule
    basis: dict  # degree -> list of PBW monomials
    gram: dict = field(default_factory=dict)  # degree -> dense matrix

    def dims(self) -> dict:
        return {d: len(b) for d, b in self.basis.items()}

    def gram_rank(self, d: int) -> int:
        if d not in self.gram:
            monos = self.basis[d]
            self.gram[d] = gram_matrix(self.module, monos, monos, tkk_omega)
        return rank_of(self.gram[d])


def build_verma_window(w: WeightData, N: int, W: int, module: InducedModule | None = None) -> ModuleWindow:
    if N < 0 or W < 0:
        raise ValueError("window parameters must be nonnegative")
    ok, diags = validate_triple(w)
    if not ok:
        raise ValueError("invalid triple: " + "; ".join(diags))
    gens = minus_generators(N, W)
    basis = {d: pbw_monomials(gens, d, pbw_key) for d in range(N + 1)}
    return ModuleWindow(w, N, W, module or tkk_verma(w), basis)


def gram_rank_stabilized(w: WeightData, N: int, bands) -> list:
    """Rows (degree, band, verma_dim, gram_rank, stabilized, quotient_dim_bound).

    ``stabilized`` compares with the previous band; it is None for the first.
    """
    bands = list(bands)
    if sorted(bands) != bands:
        raise ValueError("bands must be increasing")
    module = tkk_verma(w)
    rows = []
    prev: dict = {}
    for W in bands:
        win = build_verma_window(w, N, W, module)
        for d in range(N + 1):
            r = win.gram_rank(d)
            stab = None if d not in prev else (prev[d] == r)
            rows.append({
                "degree": d,
                "band": W,
                "verma_dim": len(win.basis[d]),
                "gram_rank": r,
                "stabilized": stab,
                "quotient_dim_bound": r,
            })
            prev[d] = r
    return rows


def contravariance_failures(w: WeightData, N: int, W: int, gens) -> list:
    """Check <g.w', u> = <w', omega(g).u> with w' in V(lambda o omega) and
    u in V(lambda), for window monomials of matching degree."""
    left = tkk_verma(w.inverted())
    right = tkk_verma(w)
    win = build_verma_window(w, N, W, right)
    bad = []

    def pairing(vec_left: dict, u: dict):
        total = ZERO
        for mono, c in vec_left.items():
            val = _pair(right, mono, u)
            if val:
                total = total + val * c
        return total

    for g in gens:
        t, sign = tkk_omega(g)
        shift = pdeg(g)
        for d, monos in win.basis.items():
            d2 = d + shift
            if d2 < 0 or d2 > N:
                continue
            for a in monos:
                ga = left.act(g, {a: as_scalar(1)})
                for b in win.basis[d2]:
                    lhs = pairing(ga, {b: as_scalar(1)})
                    ob = right.act(t, {b: as_scalar(1)})
                    rhs = pairing({a: as_scalar(1)}, ob) * sign
                    if lhs != rhs:
                        bad.append((g, a, b))
    return bad


def _pair(module, row, vec):
    for s in row:
        t, c = tkk_omega(s)
        vec = module.act(t, vec)
        if c != 1:
            vec = {k: v * c for k, v in vec.items()}
        if not vec:
            return 0
    return vec.get((), 0)


# --- integrability -------------------------------------------------------------------

def _multisets_with_sum(p: int, total: int, hi: int, lo: int):
    """Nonincreasing tuples of length p with entries in [lo, hi] and given sum."""
    if p == 0:
        if total == 0:
            yield ()
        return
    for a in range(min(hi, total - lo * (p - 1)), lo - 1, -1):
        if a * p < total:
            break
        for rest in _multisets_with_sum(p - 1, total - a, a, lo):
            yield (a,) + rest


def _multinomial(parts: tuple) -> int:
    out = factorial(len(parts))
    counts: dict = {}
    for x in parts:
        counts[x] = counts.get(x, 0) + 1
    for c in counts.values():
        out //= factorial(c)
    return out


def field_power_coefficient(module: InducedModule, kind: str, n: int, p: int, M: int, vec: dict, hi: int) -> dict:
    """Coefficient of z^(-M-p) in x_kind(z, n)^p applied to vec.

    The x's commute, so the coefficient is a sum over multisets
    {m_1 >= ... >= m_p} with sum M, weighted by multinomials.  ``hi`` bounds
    the modes that do not kill vec outright; it also bounds the smallest mode
    from below through the fixed sum, so the sum is finite and complete.
    """
    acc: dict = {}
    lo = M - hi * (p - 1)
    for parts in _multisets_with_sum(p, M, hi, lo):
        if any(not in_S((m, n)) for m in parts):
            continue
        v = vec
        for m in parts:  # largest (most raising) first
            v = module.act((kind, m, n), v)
            if not v:
                break
        if v:
            mult = _multinomial(parts)
            for k, c in v.items():
                acc[k] = acc.get(k, ZERO) + c * mult
    return {k: c for k, c in acc.items() if c}


def _raising_ops(max_k: int, band: int) -> dict:
    return plus_generators(max_k, band)


def integrability_check(window: ModuleWindow, level: int, n_range=None, test_band: int | None = None,
                        max_result_degree: int | None = None) -> dict:
    """Apply the window-expressible coefficients of x+-(z, 2n)^(l+1) and
    x+-(z, 2n+1)^(2l+1) to every window basis vector and test that the
    results lie in the maximal proper submodule; also test local nilpotency
    of the degree-one real root vectors on v."""
    mod = window.module
    N, W = window.N, window.W
    if n_range is None:
        n_range = range(-W, W + 1)
    cap = N if max_result_degree is None else max_result_degree
    checks = 0
    violations = []
    zero_results = 0
    for idx in n_range:
        p = level + 1 if idx % 2 == 0 else 2 * level + 1
        tb = test_band if test_band is not None else W + p * abs(idx)
        raising = _raising_ops(cap, tb)
        for kind in ("x+", "x-"):
            a = 1 if kind == "x+" else -1
            for d, monos in window.basis.items():
                for u in monos:
                    # result pdeg = d - 2M - a p must lie in [0, cap]
                    base = d - a * p
                    hi = (d + 1) // 2 + 1
                    for M in range(-((cap - base) // 2), base // 2 + 1):
                        rdeg = base - 2 * M
                        if rdeg < 0 or rdeg > cap:
                            continue
                        r = field_power_coefficient(mod, kind, idx, p, M, {u: as_scalar(1)}, hi)
                        checks += 1
                        if not r:
                            zero_results += 1
                            continue
                        if not in_radical(mod, r, raising):
                            violations.append({"field": f"{kind}(z,{idx})^{p}", "power": -M - p,
                                               "vector": list(u)})
    nil = nilpotency_check(window, level, cap)
    return {
        "checks": checks,
        "zero_in_verma": zero_results,
        "violations": violations,
        "nilpotency": nil,
        "ok": not violations and not nil["violations"],
    }


def nilpotency_check(window: ModuleWindow, level: int, cap: int) -> dict:
    """For each minus-part real root vector x of pdeg 1 in band, with
    y = omega(x) and h = [y, x]: h acts on v by a nonnegative integer a and
    x^(a+1) v lies in the radical."""
    mod = window.module
    w = window.weights
    checks = 0
    violations = []
    for x in minus_generators(1, window.W).get(1, []):
        y, _ = tkk_omega(x)
        hx = tkk.tkk_bracket(tkk.TkkElement({y: 1}), tkk.TkkElement({x: 1}))
        a = element_action(w, hx)
        checks += 1
        if not a.is_real() or a.re.denominator != 1 or a.re < 0:
            violations.append({"root_vector": list(x), "weight": str(a)})
            continue
        k = int(a.re) + 1
        if k * pdeg(x) > cap + 2:
            continue
        vec = {(): as_scalar(1)}
        for _ in range(k):
            vec = mod.act(x, vec)
        raising = _raising_ops(k * pdeg(x), window.W + k * abs(x[2]))
        if not in_radical(mod, vec, raising):
            violations.append({"root_vector": list(x), "power": k})
    return {"checks": checks, "violations": violations}
