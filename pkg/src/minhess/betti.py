"""
Fixed points, Euler numbers and Poincare polynomials of X_H(e_theta) in type A.

The closed-form routines (:func:`poincare`, :func:`euler_number`,
:func:`dimension`) never enumerate S_n.  The oracles
(:func:`poincare_bruteforce`, :func:`fixed_points`) do, and are guarded.

>>> from minhess.hess import HessFn
>>> h = HessFn((2, 4, 5, 5, 5))
>>> str(poincare(h))
'1 + 4t^2 + 9t^4 + 15t^6 + 20t^8 + 21t^10 + 16t^12 + 8t^14 + 2t^16'
>>> euler_number(h), dimension(h)
(96, 8)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial

from .hess import HessFn, dim_H
from .poly import UniPoly
from .rootsys import delta_H, highest_root
from .symgroup import (
    Permutation,
    act_on_root,
    check_guard,
    enumerate_perms,
    identity,
    inverse,
    lengths,
    right_multiply_reflection,
)

__all__ = [
    "FixedPointSet",
    "is_fixed",
    "fixed_points",
    "fixed_points_by_roots",
    "q_values",
    "q_poly",
    "flag_poincare",
    "poincare",
    "poincare_bruteforce",
    "dimension",
    "euler_number",
    "euler_simply_laced",
    "parabolic_subgroup",
    "StructuralReport",
    "structural_checks",
]


@dataclass(frozen=True)
class FixedPointSet:
    n: int
    perms: frozenset[Permutation]

    def __len__(self) -> int:
        return len(self.perms)

    def __contains__(self, w: object) -> bool:
        return w in self.perms

    def __iter__(self):
        return iter(sorted(self.perms))


def is_fixed(w: Permutation, h: HessFn) -> bool:
    """``w^-1(1) <= h(w^-1(n))``: position of 1 at most h(position of n)."""
    n = len(w)
    return w.index(1) + 1 <= h(w.index(n) + 1)


def fixed_points(h: HessFn) -> FixedPointSet:
    check_guard(h.n)
    return FixedPointSet(h.n, frozenset(w for w in enumerate_perms(h.n) if is_fixed(w, h)))


def fixed_points_by_roots(h: HessFn) -> FixedPointSet:
    """Same set, straight from ``w^-1 theta in Delta_H``; used to cross-check."""
    check_guard(h.n)
    roots = delta_H(h)
    theta = highest_root(h.n)
    return FixedPointSet(
        h.n,
        frozenset(w for w in enumerate_perms(h.n) if act_on_root(inverse(w), theta) in roots),
    )


def q_values(h: HessFn) -> list[int]:
    """``q_H(i)`` for ``i = 0 .. 2n-3``."""
    n = h.n
    q = [0] * (2 * n - 2)
    for j in range(1, n + 1):
        for k in range(2, h(n + 1 - j) + 1):
            q[j + k - 3] += 1
    return q


def q_poly(h: HessFn) -> UniPoly:
    return UniPoly.from_list(q_values(h), step=2)


def flag_poincare(m: int) -> UniPoly:
    """``prod_{l=1}^{m-1} (1 + t^2 + ... + t^(2l))``: Poincare polynomial of Flags(C^m)."""
    out = UniPoly.one()
    for l in range(1, m):
        out = out * UniPoly.from_list([1] * (l + 1), step=2)
    return out


def poincare(h: HessFn) -> UniPoly:
    """Closed-form Poincare polynomial ``q_H(t) * prod_{l=1}^{n-3} [l+1]_{t^2}``."""
    # empty product for n <= 3
    return q_poly(h) * flag_poincare(h.n - 2)


def poincare_bruteforce(h: HessFn) -> UniPoly:
    """``sum t^(2 l(w))`` over the T-fixed points; factorial time."""
    check_guard(h.n)
    counts: dict[int, int] = {}
    for w, l in lengths(h.n).items():
        if is_fixed(w, h):
            counts[2 * l] = counts.get(2 * l, 0) + 1
    return UniPoly(counts)


def dimension(h: HessFn) -> int:
    n = h.n
    return (n - 1) * (n - 2) // 2 + max(h(j) - j for j in range(1, n + 1))


def euler_number(h: HessFn) -> int:
    """``(n-2)! (dim H - n + 1)``."""
    n = h.n
    return factorial(n - 2) * (dim_H(h) - n + 1)


def euler_simply_laced(size_w: int, dim_g: int, rank: int, dim_h: int, strict: bool = True) -> Fraction:
    """
    ``|W| (dim H - rank) / (dim g - rank)`` for a simply-laced group.

    With ``strict`` a non-integral value raises, since an Euler number has to
    be a whole number of fixed points.
    """
    if dim_g <= rank:
        raise ValueError("need dim g > rank")
    val = Fraction(size_w * (dim_h - rank), dim_g - rank)
    if strict and val.denominator != 1:
        raise ValueError(f"non-integral Euler number {val}")
    return val


def parabolic_subgroup(n: int, i: int) -> list[Permutation]:
    """
    Elements generated by ``s_k``, ``k != i``: permutations mapping
    ``{1..i}`` onto itself.
    """
    left = range(1, i + 1)
    right = range(i + 1, n + 1)
    return [a + b for a in permutations(left) for b in permutations(right)]


@dataclass
class StructuralReport:
    n: int
    h: tuple[int, ...]
    codim: int
    parabolic_ok: bool = True
    codim_ok: bool = True
    upward_closed_ok: bool = True
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.parabolic_ok and self.codim_ok and self.upward_closed_ok

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "h": list(self.h),
            "codim": self.codim,
            "parabolic": self.parabolic_ok,
            "codim_bound": self.codim_ok,
            "upward_closed": self.upward_closed_ok,
            "witnesses": self.witnesses,
            "ok": self.ok,
        }


def structural_checks(h: HessFn) -> StructuralReport:
    """
    Parabolic containment, the codimension bound ``n - 1``, and Bruhat
    upward-closedness of the non-fixed set.

    Upward closure is checked on the generating relations ``w < w s_r``
    (``l(w s_r) > l(w)``), which generate Bruhat order.
    """
    n = h.n
    check_guard(n)
    fixed = fixed_points(h)
    codim = n * (n - 1) // 2 - dimension(h)
    rep = StructuralReport(n=n, h=h.values, codim=codim)

    for i in range(1, n):
        for w in parabolic_subgroup(n, i):
            if w not in fixed:
                rep.parabolic_ok = False
                rep.witnesses.append(f"parabolic P_{i}: {w} not fixed")
                break

    if codim > n - 1 or codim < 0:
        rep.codim_ok = False
        rep.witnesses.append(f"codim {codim} exceeds {n - 1}")

    lens = lengths(n)
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for w, lw in lens.items():
        if w in fixed:
            continue
        for r in pairs:
            v = right_multiply_reflection(w, r)
            if lens[v] > lw and v in fixed:
                rep.upward_closed_ok = False
                rep.witnesses.append(f"upward closure: {w} not fixed but {v} > {w} is")
                break
        if not rep.upward_closed_ok:
            break

    if identity(n) not in fixed:
        rep.parabolic_ok = False
        rep.witnesses.append("identity not fixed")
    return rep
