"""
The root system of type A_{n-1}.

A root is an ordered pair ``(i, j)`` standing for ``t_i - t_j``; it is positive
when ``i < j``.  The simple roots are ``(k, k+1)`` and the highest root is
``(1, n)``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from .hess import HessFn

__all__ = [
    "Root",
    "highest_root",
    "simple_roots",
    "positive_roots",
    "all_roots",
    "simple_coords",
    "root_leq",
    "delta_H",
    "parse_root",
]


class Root(NamedTuple):
    i: int
    j: int

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def __neg__(self) -> "Root":
        return Root(self.j, self.i)

    def to_text(self) -> str:
        return f"t{self.i}-t{self.j}"

    def to_json(self) -> list[int]:
        return [self.i, self.j]


def _check_root(r: tuple[int, int], n: int) -> Root:
    i, j = r
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"({i},{j}) is not a root of A_{n - 1}")
    return Root(i, j)


def parse_root(text: str) -> Root:
    """Parse ``"t1-t3"`` into ``Root(1, 3)``."""
    left, _, right = text.strip().partition("-")
    if not (left.startswith("t") and right.startswith("t")):
        raise ValueError(f"cannot parse root {text!r}")
    return Root(int(left[1:]), int(right[1:]))


def highest_root(n: int) -> Root:
    if n < 2:
        raise ValueError("type A_{n-1} needs n >= 2")
    return Root(1, n)


def simple_roots(n: int) -> list[Root]:
    return [Root(k, k + 1) for k in range(1, n)]


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def all_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def simple_coords(r: tuple[int, int], n: int) -> list[int]:
    """Coefficients of ``r`` in the simple-root basis (length ``n - 1``)."""
    i, j = _check_root(r, n)
    out = [0] * (n - 1)
    if i < j:
        for k in range(i, j):
            out[k - 1] = 1
    else:
        for k in range(j, i):
            out[k - 1] = -1
    return out


def root_leq(beta: tuple[int, int], gamma: tuple[int, int], n: int) -> bool:
    """``beta <= gamma`` iff ``gamma - beta`` is a nonnegative sum of simple roots."""
    cb = simple_coords(beta, n)
    cg = simple_coords(gamma, n)
    return all(g >= b for b, g in zip(cb, cg))


def delta_H(h: "HessFn") -> frozenset[Root]:
    """Hessenberg roots: ``t_k - t_l`` with ``k <= h(l)``."""
    n = h.n
    return frozenset(
        Root(k, l) for l in range(1, n + 1) for k in range(1, h(l) + 1) if k != l
    )
