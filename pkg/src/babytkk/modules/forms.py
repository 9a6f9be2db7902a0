"""Contravariant pairings on induced modules and radical membership.

For an anti-involution omega swapping the plus and minus parts, the pairing
of a PBW monomial Y' with a vector u is the coefficient of the generating
vector in omega(Y') u.  Its right kernel in a fixed degree is the degree
slice of the maximal proper graded submodule, so its rank is the dimension of
the irreducible quotient in that degree (restricted to the probed rows).

``omega`` maps a symbol to a pair (symbol, coefficient).
"""

from __future__ import annotations

from babytkk.linalg import RowReducer
from babytkk.linear import add_into
from babytkk.modules.verma import InducedModule
from babytkk.scalars import ONE


def _apply_omega_factor(module: InducedModule, omega, sym, vec: dict) -> dict:
    t, c = omega(sym)
    out = module.act(t, vec)
    if c != 1:
        out = {k: v * c for k, v in out.items()}
    return out


def pair(module: InducedModule, omega, row: tuple, vec: dict):
    """Coefficient of the generating vector in omega(row) vec.

    omega(y1 ... yk) = omega(yk) ... omega(y1), so y1 is applied first.
    """
    for s in row:
        vec = _apply_omega_factor(module, omega, s, vec)
        if not vec:
            return 0
    return vec.get((), 0)


def gram_matrix(module: InducedModule, rows: list, cols: list, omega) -> list:
    """Dense matrix [pair(row, col)], sharing work across common row prefixes."""
    mat = []
    for u in cols:
        cache: dict = {(): {u: ONE}}

        def vec_for(prefix):
            hit = cache.get(prefix)
            if hit is None:
                prev = vec_for(prefix[:-1])
                hit = _apply_omega_factor(module, omega, prefix[-1], prev) if prev else {}
                cache[prefix] = hit
            return hit

        mat.append([vec_for(r).get((), 0) for r in rows])
    # transpose so rows index Y'
    return [list(col) for col in zip(*mat)] if mat else [[] for _ in rows]


def rank_of(mat: list) -> int:
    rr = RowReducer()
    for row in mat:
        rr.add({j: c for j, c in enumerate(row) if c})
    return len(rr)


def gram_ranks(module: InducedModule, basis: dict, omega) -> dict:
    """Rank per degree of the pairing on a PBW basis (rows = columns)."""
    return {d: rank_of(gram_matrix(module, monos, monos, omega)) for d, monos in basis.items()}


def in_radical(module: InducedModule, vec: dict, raising_by_degree: dict, key=None) -> bool:
    """Necessary test for membership in the maximal proper submodule.

    Pushes vec down to degree 0 with every raising symbol supplied
    (``raising_by_degree[k]`` lowers the degree by k), reducing each level to
    a basis on the way.  A nonzero component along the generating vector
    proves vec is not in the radical; if the raising symbols span the plus
    part up to the relevant degree the test is also sufficient.
    """
    if not vec:
        return True
    levels: dict = {}
    d0 = module.mono_degree(next(iter(vec)))
    levels.setdefault(d0, RowReducer(key)).add(vec)
    for d in range(d0, 0, -1):
        rr = levels.get(d)
        if rr is None:
            continue
        for b in rr.basis():
            for k, syms in raising_by_degree.items():
                if k > d:
                    continue
                for s in syms:
                    w = module.act(s, b)
                    if w:
                        levels.setdefault(d - k, RowReducer(key)).add(w)
    base = levels.get(0)
    if base is None:
        return True
    return all(not row.get(()) for row in base.basis())


def sum_vectors(vecs) -> dict:
    acc: dict = {}
    for v in vecs:
        add_into(acc, v)
    return acc
