"""Exact rank of sparse rational matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

SparseRow = Mapping[Hashable, Fraction]


def rank(rows: Iterable[SparseRow]) -> int:
    """
    Rank of a matrix given as sparse rows ``{column: value}``.

    Incremental row reduction: each incoming row is reduced against the stored
    pivot rows and kept if anything survives.  Exact over Q.
    """
    pivots: dict[Hashable, dict[Hashable, Fraction]] = {}
    order: dict[Hashable, int] = {}

    def col_key(c):
        if c not in order:
            order[c] = len(order)
        return order[c]

    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r, key=col_key)
            p = pivots.get(c)
            if p is None:
                inv = 1 / r[c]
                pivots[c] = {k: v * inv for k, v in r.items()}
                break
            f = r[c]
            for k, v in p.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)
