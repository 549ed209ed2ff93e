"""
Irreducible components of X_H(e_theta) in type A.

Each corner ``(hbar(j), j)`` of the modified stair shape gives the component
``X(w)`` where ``w`` is the longest permutation with ``w(hbar(j)) = 1`` and
``w(j) = n``.

>>> from minhess.hess import HessFn
>>> [format_perm(c.word) for c in components(HessFn((2, 2, 3, 5, 6, 6, 7, 8)))]
['8 1 7 6 5 4 3 2', '7 6 5 8 1 4 3 2', '7 6 5 4 8 1 3 2', '7 6 5 4 3 2 1 8']
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import fixed_points
from .hess import Corner, HessFn, corners
from .rootsys import highest_root
from .symgroup import (
    Permutation,
    act_on_root,
    bruhat_leq,
    check_guard,
    enumerate_perms,
    format_perm,
    inverse,
    length,
)

__all__ = [
    "Component",
    "w_beta",
    "w_beta_bruteforce",
    "components",
    "components_bruteforce",
    "bruhat_maximal",
]


@dataclass(frozen=True)
class Component:
    corner: Corner
    word: Permutation
    dimension: int

    def to_json(self) -> dict:
        return {"corner": list(self.corner), "word": list(self.word), "dimension": self.dimension}


def w_beta(n: int, beta: tuple[int, int]) -> Permutation:
    """1 at position i, n at position j, the rest ``n-1, ..., 2`` left to right."""
    i, j = beta
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"({i},{j}) is not a root for n={n}")
    fill = iter(range(n - 1, 1, -1))
    return tuple(1 if k == i else n if k == j else next(fill) for k in range(1, n + 1))


def w_beta_bruteforce(n: int, beta: tuple[int, int]) -> Permutation:
    """Bruhat-maximum of ``{w : w^-1 theta = beta}``, by enumeration."""
    check_guard(n)
    theta = highest_root(n)
    cands = [w for w in enumerate_perms(n) if act_on_root(inverse(w), theta) == tuple(beta)]
    top = bruhat_maximal(cands)
    if len(top) != 1:
        raise AssertionError(f"no unique maximum for beta={beta}: {top}")
    return top[0]


def bruhat_maximal(elements) -> list[Permutation]:
    """
    Bruhat-maximal members of a finite set.

    Candidates are visited by decreasing length; a candidate is maximal iff it
    lies below none of the maxima already found, since anything above it in the
    set sits below some maximum of strictly larger length.
    """
    elems = sorted(set(elements), key=lambda w: (-length(w), w))
    maxima: list[Permutation] = []
    for w in elems:
        if not any(bruhat_leq(w, m) for m in maxima):
            maxima.append(w)
    return sorted(maxima)


def components(h: HessFn) -> list[Component]:
    n = h.n
    out = []
    for c in corners(h):
        w = w_beta(n, (c.i, c.j))
        out.append(Component(c, w, length(w)))
    return out


def components_bruteforce(h: HessFn) -> set[Permutation]:
    """Bruhat-maximal T-fixed points, ignoring corners entirely."""
    return set(bruhat_maximal(fixed_points(h).perms))


def describe(comps: list[Component]) -> str:
    return "\n".join(format_perm(c.word) for c in comps)

