"""
Hessenberg functions, stair shapes, the modified function and its corners.

>>> h = HessFn.parse("2,2,3,5,6,6,7,8")
>>> modified(h).values
(2, 2, 2, 5, 6, 6, 6, 7)
>>> [tuple(c) for c in corners(h)]
[(2, 1), (5, 4), (6, 5), (7, 8)]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "InvalidHessenbergFunction",
    "HessFn",
    "ModifiedHessFn",
    "Corner",
    "validate",
    "dim_H",
    "modified",
    "corners",
    "stair_boxes",
    "all_hessenberg_functions",
    "render_stair",
]


class InvalidHessenbergFunction(ValueError):
    pass


@dataclass(frozen=True)
class HessFn:
    """A Hessenberg function ``h = (h(1), ..., h(n))``."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(a) for a in self.values)
        object.__setattr__(self, "values", v)
        n = len(v)
        if n < 2:
            raise InvalidHessenbergFunction(f"need n >= 2, got {v}")
        for j, hj in enumerate(v, start=1):
            if hj < j:
                raise InvalidHessenbergFunction(f"h({j})={hj} < {j}")
            if hj > n:
                raise InvalidHessenbergFunction(f"h({j})={hj} > n={n}")
            if j > 1 and hj < v[j - 2]:
                raise InvalidHessenbergFunction(
                    f"not weakly increasing: h({j - 1})={v[j - 2]} > h({j})={hj}"
                )

    @classmethod
    def parse(cls, text: str) -> "HessFn":
        try:
            vals = [int(a) for a in text.replace(" ", "").split(",") if a]
        except ValueError:
            raise InvalidHessenbergFunction(f"cannot parse {text!r}") from None
        return cls(tuple(vals))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        # h(0) = 0 by convention
        return 0 if j == 0 else self.values[j - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(map(str, self.values))

    def to_json(self) -> list[int]:
        return list(self.values)

    def pointwise_leq(self, other: "HessFn") -> bool:
        return self.n == other.n and all(a <= b for a, b in zip(self, other))


def validate(values: Sequence[int]) -> HessFn:
    return HessFn(tuple(values))


@dataclass(frozen=True)
class ModifiedHessFn:
    values: tuple[int, ...]

    def __call__(self, j: int) -> int:
        return 0 if j == 0 else self.values[j - 1]

    @property
    def n(self) -> int:
        return len(self.values)


class Corner(NamedTuple):
    i: int
    j: int


def dim_H(h: HessFn) -> int:
    """Dimension of the trace-zero matrices with ``a_ij = 0`` for ``i > h(j)``."""
    return sum(h) - 1


def modified(h: HessFn) -> ModifiedHessFn:
    out = []
    for j in range(1, h.n + 1):
        if h(j - 1) == j - 1 and h(j) == j:
            out.append(j - 1)
        else:
            out.append(h(j))
    return ModifiedHessFn(tuple(out))


def corners(h: HessFn) -> list[Corner]:
    """Corners ``(hbar(j), j)`` with ``hbar(j-1) < hbar(j)``, ordered by column."""
    hb = modified(h)
    return [Corner(hb(j), j) for j in range(1, h.n + 1) if hb(j - 1) < hb(j)]


def stair_boxes(h: HessFn) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for j in range(1, h.n + 1) for i in range(1, h(j) + 1))


def all_hessenberg_functions(n: int) -> list[HessFn]:
    """Every Hessenberg function for ``n``, in lexicographic order."""
    if n < 2:
        raise InvalidHessenbergFunction("need n >= 2")
    out: list[HessFn] = []

    def rec(prefix: list[int]) -> None:
        j = len(prefix) + 1
        if j > n:
            out.append(HessFn(tuple(prefix)))
            return
        lo = max(j, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            rec(prefix)
            prefix.pop()

    rec([])
    return out


def render_stair(h: HessFn, mark_corners: bool = False) -> str:
    """
    ASCII picture of the stair shape; ``#`` marks boxes with ``i <= h(j)``.

    With ``mark_corners`` the modified shape is drawn instead and corners are
    shown as ``*``.
    """
    n = h.n
    if mark_corners:
        hb = modified(h)
        cs = set(corners(h))
        height = hb
    else:
        cs = set()
        height = h
    rows = []
    for i in range(1, n + 1):
        cells = []
        for j in range(1, n + 1):
            if (i, j) in cs:
                cells.append("*")
            elif i <= height(j):
                cells.append("#")
            else:
                cells.append(".")
        rows.append(" ".join(cells))
    return "\n".join(rows)
