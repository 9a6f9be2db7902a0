"""The level-l vacuum module of the affinization of C_g and windows of the
ideal generated by ((e_beta (x) t2^n)_(-1))^(c_beta l + 1) 1.

Window degree: the grading deg a(p) = n - 1 - p, except that the factors
(t2^s k1)(-1), of degree 0, count as 1 so that every window is finite.  The
window degree only selects monomials; slices are reported by true degree.
"""

from __future__ import annotations

from babytkk import conformal as cf
from babytkk import twist
from babytkk.linalg import RowReducer
from babytkk.linear import add_into
from babytkk.modules.sl2 import ROOT_VECTOR, ROOTS, c_beta
from babytkk.modules.verma import InducedModule, pbw_monomials
from babytkk.scalars import ONE
from babytkk.sp4 import BASIS

K1_SYM = (cf.K1, -1)


def t2_weight(gen) -> int:
    if gen[0] == "x":
        return gen[2]
    if gen[0] == "tk1":
        return gen[1]
    return 0


def window_degree(sym) -> int:
    return max(1, cf.affine_grading(sym))


def true_degree(mono) -> int:
    return sum(cf.affine_grading(s) for s in mono)


def _order(sym):
    return (window_degree(sym), cf.AffineElement.sort_key(sym))


def _affine_bracket_dict(a, b) -> dict:
    return dict(cf._affine_cached(a, b))


def cg_vacuum(level) -> InducedModule:
    def part(sym):
        if sym == K1_SYM:
            return "zero"
        return "plus" if sym[1] >= 0 else "minus"

    return InducedModule(
        bracket=_affine_bracket_dict,
        part=part,
        weight=lambda s: level,
        order=_order,
        degree=window_degree,
    )


def minus_generators(N: int, W: int) -> dict:
    out: dict = {}
    rng = range(-W, W + 1)
    gens = [("x", name, n) for name in BASIS for n in rng]
    gens.append(cf.K2)
    gens += [("tk1", s) for s in rng if s]
    for g in gens:
        for m in range(-N - 1, 0):
            sym = (g, m)
            d = window_degree(sym)
            if d <= N:
                out.setdefault(d, []).append(sym)
    for d in out:
        out[d].sort(key=_order)
    return out


def vacuum_basis(N: int, W: int) -> dict:
    gens = minus_generators(N, W)
    return {d: pbw_monomials(gens, d, _order) for d in range(N + 1)}


def ideal_generator(beta: str, n: int, level: int) -> tuple:
    """The PBW monomial ((e_beta (x) t2^n)(-1))^(c_beta l + 1)."""
    k = int(c_beta(beta)) * level + 1
    return tuple([(("x", ROOT_VECTOR[beta], n), -1)] * k)


def sigma_vector(module: InducedModule, vec: dict) -> dict:
    """sigma(a1(n1) ... ak(nk) 1) = sigma(a1)(n1) ... sigma(ak)(nk) 1."""
    acc: dict = {}
    for mono, c in vec.items():
        v = {(): ONE}
        for sym in reversed(mono):
            img = twist.sigma_affine(cf.AffineElement._wrap({sym: ONE}))
            v = module.act_element(img.terms, v)
            if not v:
                break
        add_into(acc, v, c)
    return acc


def _proportional(u: dict, v: dict):
    """Scalar c with u = c v, or None."""
    if not v or set(u) != set(v):
        return None
    k = next(iter(v))
    c = u[k] / v[k]
    return c if all(u[s] == v[s] * c for s in v) else None


def sigma_invariance(level: int, W: int, module: InducedModule | None = None) -> list:
    """For each generator with |n| <= W, the generator its sigma-image is a
    multiple of (searched over |n'| <= W + 1)."""
    mod = module or cg_vacuum(level)
    rows = []
    for beta in ROOTS:
        for n in range(-W, W + 1):
            g = ideal_generator(beta, n, level)
            img = sigma_vector(mod, {g: ONE})
            hit = None
            for b2 in ROOTS:
                for n2 in range(-W - 1, W + 2):
                    c = _proportional(img, {ideal_generator(b2, n2, level): ONE})
                    if c is not None:
                        hit = (b2, n2, c)
                        break
                if hit:
                    break
            rows.append({
                "beta": beta,
                "n": n,
                "exponent": len(g),
                "image": None if hit is None else {"beta": hit[0], "n": hit[1], "scale": str(hit[2])},
            })
    return rows


def _mono_key(mono):
    return tuple(_order(s) for s in mono)


def ideal_window(level: int, N: int, W: int) -> dict:
    """Generators, sigma-invariance and closure bounds of the ideal window."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    mod = cg_vacuum(level)
    basis = vacuum_basis(N, W)
    inwin = {m for b in basis.values() for m in b}
    # slices are reported by true degree; the window degree only cuts
    verma = {d: 0 for d in range(N + 1)}
    for m in inwin:
        verma[true_degree(m)] += 1
    gens = []
    for beta in ROOTS:
        for n in range(-W, W + 1):
            g = ideal_generator(beta, n, level)
            gens.append({"beta": beta, "n": n, "c_beta": int(c_beta(beta)), "exponent": len(g)})
    seeds = [{ideal_generator(g["beta"], g["n"], level): ONE} for g in gens]
    ops = [(("x", name, n), m) for name in BASIS for n in range(-W, W + 1) for m in range(-N, N + 2)]
    ops += [(cf.K2, m) for m in range(-N, N + 2)]
    ops += [(("tk1", s), m) for s in range(-W, W + 1) if s for m in range(-N - 1, N + 2)]
    spans: dict = {}
    queue = [v for v in seeds if all(m in inwin for m in v)]
    while queue:
        v = queue.pop()
        d = true_degree(next(iter(v)))
        rr = spans.setdefault(d, RowReducer(_mono_key))
        if not rr.add(v):
            continue
        for s in ops:
            w = mod.act(s, v)
            if w and all(m in inwin for m in w):
                queue.append(w)
    ideal = {d: (len(spans[d]) if d in spans else 0) for d in range(N + 1)}
    return {
        "level": level,
        "N": N,
        "W": W,
        "generators": gens,
        "sigma": sigma_invariance(level, W, mod),
        "verma": verma,
        "ideal_lower": ideal,
        "quotient_upper": {d: verma[d] - ideal[d] for d in verma},
    }


def exponent_table(level: int) -> dict:
    return {beta: int(c_beta(beta)) * level + 1 for beta in ROOTS}


__all__ = [
    "cg_vacuum",
    "ideal_generator",
    "ideal_window",
    "sigma_invariance",
    "exponent_table",
    "vacuum_basis",
    "true_degree",
]
