"""Exact row reduction over Q(i) for sparse vectors (dicts key -> scalar)."""

from __future__ import annotations

from babytkk.scalars import ZERO, as_scalar


class RowReducer:
    """Incrementally maintained echelon basis of a span of sparse vectors.

    Pivots are chosen by a caller-supplied key order so results are
    deterministic.
    """

    def __init__(self, key=None):
        self._key = key or (lambda k: k)
        self.rows: dict = {}  # pivot key -> row normalized to 1 at pivot

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = dict(vec)
        while v:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            for p in hits:
                c = v.get(p)
                if c is None:
                    continue
                for k, a in self.rows[p].items():
                    new = v.get(k, ZERO) - c * a
                    if new:
                        v[k] = new
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert vec; True iff it was independent of the current span."""
        v = self.reduce({k: as_scalar(c) for k, c in vec.items() if c})
        if not v:
            return False
        p = min(v, key=self._key)
        inv = v[p].inverse()
        row = {k: c * inv for k, c in v.items()}
        # keep existing rows reduced against the new pivot
        for q, r in self.rows.items():
            c = r.get(p)
            if c:
                for k, a in row.items():
                    new = r.get(k, ZERO) - c * a
                    if new:
                        r[k] = new
                    else:
                        r.pop(k, None)
        self.rows[p] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows, key=self._key)]


def rank_sparse(vectors, key=None) -> int:
    rr = RowReducer(key)
    for v in vectors:
        rr.add(v)
    return len(rr)


def rank(matrix) -> int:
    """Rank of a dense matrix given as a list of rows."""
    return rank_sparse(({j: c for j, c in enumerate(row) if c} for row in matrix))
