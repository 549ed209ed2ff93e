"""
Cohomology presentations.

H*(Flags(C^n)) is modelled as the coinvariant algebra Q[x1..xn]/(e1..en), with
normal forms supported on staircase monomials ``x^a``, ``a_k <= n - k``, and with
the Schubert basis given by Schubert polynomials.  H*(X_H(e_theta)) is the
quotient by the span J_H of Schubert classes of non-fixed permutations.

>>> str(schubert_polynomial((3, 1, 2)))
'x1^2'
>>> str(coinvariant_normal_form(MultiPoly.var(3, 3)))
'-x1 - x2'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from . import linalg
from .betti import fixed_points, poincare
from .gkm import DEFAULT_DEGREE_CAP, cochain_dimension, hess_gkm_graph
from .hess import HessFn
from .poly import MultiPoly, UniPoly, revlex_key
from .symgroup import (
    Permutation,
    bruhat_leq,
    check_guard,
    compose,
    enumerate_perms,
    format_perm,
    inverse,
    inversion_roots,
    length,
    lengths,
    longest,
    reduced_word,
)

__all__ = [
    "SchubertVector",
    "schubert_polynomial",
    "from_lehmer_code",
    "staircase_monomials",
    "coinvariant_normal_form",
    "to_schubert_basis",
    "schubert_product",
    "QuotientRing",
    "quotient_ring",
    "IdealReport",
    "ideal_property_check",
    "TanisakiReport",
    "tanisaki_check",
    "diag_restriction",
    "RankReport",
    "equivariant_rank_check",
]


@dataclass(frozen=True)
class SchubertVector:
    """A class ``sum c_w sigma(w)`` in H*(Flags(C^n))."""

    n: int
    coeffs: dict[Permutation, Fraction] = field(default_factory=dict)

    def support(self) -> set[Permutation]:
        return {w for w, c in self.coeffs.items() if c}

    def __getitem__(self, w: Permutation) -> Fraction:
        return self.coeffs.get(w, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertVector):
            return NotImplemented
        a = {w: c for w, c in self.coeffs.items() if c}
        b = {w: c for w, c in other.coeffs.items() if c}
        return self.n == other.n and a == b

    def restrict(self, keep) -> "SchubertVector":
        return SchubertVector(self.n, {w: c for w, c in self.coeffs.items() if c and w in keep})

    def to_json(self) -> list:
        return [[format_perm(w), str(c)] for w, c in sorted(self.coeffs.items()) if c]

    def __str__(self) -> str:
        if not self.support():
            return "0"
        return " + ".join(
            (f"s[{format_perm(w)}]" if c == 1 else f"{c}*s[{format_perm(w)}]")
            for w, c in sorted(self.coeffs.items())
            if c
        )


@lru_cache(maxsize=None)
def schubert_polynomial(w: Permutation) -> MultiPoly:
    """
    Divided differences applied to ``x1^(n-1) x2^(n-2) ... x_(n-1)`` along the
    lexicographically smallest reduced word of ``w^-1 w0``.
    """
    n = len(w)
    top = MultiPoly.monomial([n - 1 - k for k in range(n)])
    word = reduced_word(compose(inverse(w), longest(n)))
    p = top
    for i in reversed(word):
        p = p.divided_difference(i)
    return p


def from_lehmer_code(code) -> Permutation:
    remaining = list(range(1, len(code) + 1))
    return tuple(remaining.pop(c) for c in code)


def staircase_monomials(n: int) -> list[tuple[int, ...]]:
    """Exponents ``a`` with ``a_k <= n - k``; a basis of the coinvariant algebra."""
    out: list[tuple[int, ...]] = [()]
    for k in range(1, n + 1):
        out = [e + (a,) for e in out for a in range(n - k + 1)]
    return out


@lru_cache(maxsize=None)
def _reducer(n: int, k: int) -> tuple[int, list[tuple[int, ...]]]:
    """
    Tail of ``h_{n-k+1}(x_1..x_k)`` with its leading term ``x_k^(n-k+1)`` removed.

    Under lex with ``x_n > ... > x_1`` these polynomials, for ``k = 1..n``, form
    a Groebner basis of the coinvariant ideal.
    """
    m = n - k + 1
    tail = []
    for combo in combinations_with_replacement(range(k), m):
        e = [0] * n
        for v in combo:
            e[v] += 1
        if e[k - 1] == m:
            continue
        tail.append(tuple(e))
    return m, tail


def coinvariant_normal_form(p: MultiPoly) -> MultiPoly:
    """Reduce modulo ``(e1, ..., en)`` onto the staircase monomials."""
    n = p.n
    top = n * (n - 1) // 2
    terms: dict[tuple[int, ...], Fraction] = {
        e: c for e, c in p.terms.items() if sum(e) <= top
    }
    for k in range(n, 0, -1):
        m, tail = _reducer(n, k)
        stack = [e for e in terms if e[k - 1] >= m]
        while stack:
            e = stack.pop()
            c = terms.pop(e, None)
            if c is None:
                continue
            base = list(e)
            base[k - 1] -= m
            for t in tail:
                e2 = tuple(a + b for a, b in zip(base, t))
                nv = terms.get(e2, 0) - c
                if nv:
                    terms[e2] = nv
                    if e2[k - 1] >= m:
                        stack.append(e2)
                else:
                    terms.pop(e2, None)
    return MultiPoly(n, terms)


@lru_cache(maxsize=None)
def _code_index(n: int) -> dict[tuple[int, ...], Permutation]:
    from .symgroup import lehmer_code

    return {lehmer_code(w): w for w in enumerate_perms(n)}


def to_schubert_basis(p: MultiPoly) -> SchubertVector:
    """
    Expand a normal-form polynomial in Schubert polynomials.

    Triangular solve: the leading staircase monomial (lex, ``x_n`` first) of the
    residual is ``x^code(w)`` for exactly one ``w``, whose Schubert polynomial
    has that same leading monomial.
    """
    n = p.n
    index = _code_index(n)
    out: dict[Permutation, Fraction] = {}
    r = p
    while not r.is_zero():
        e, c = r.leading(revlex_key)
        w = index.get(e)
        if w is None:
            raise ArithmeticError(f"residual {r} is not in staircase normal form")
        out[w] = out.get(w, 0) + c
        r = r - schubert_polynomial(w) * c
    return SchubertVector(n, out)


@lru_cache(maxsize=None)
def schubert_product(u: Permutation, v: Permutation) -> SchubertVector:
    """``sigma(u) sigma(v)`` expanded in the Schubert basis of H*(Flags(C^n))."""
    if len(u) != len(v):
        raise ValueError("size mismatch")
    n = len(u)
    if length(u) + length(v) > n * (n - 1) // 2:
        return SchubertVector(n, {})
    prod = schubert_polynomial(u) * schubert_polynomial(v)
    return to_schubert_basis(coinvariant_normal_form(prod))


def _span_rank(polys) -> int:
    return linalg.rank(p.terms for p in polys)


class QuotientRing:
    """H*(Flags(C^n)) / J_H with basis the Schubert classes of fixed points."""

    def __init__(self, h: HessFn):
        check_guard(h.n)
        self.h = h
        self.n = h.n
        fixed = fixed_points(h).perms
        lens = lengths(self.n)
        self.basis: list[Permutation] = sorted(fixed, key=lambda w: (lens[w], w))
        self._fixed = frozenset(fixed)
        self.ideal_index: list[Permutation] = sorted(
            (w for w in lens if w not in fixed), key=lambda w: (lens[w], w)
        )

    def multiply(self, u: Permutation, v: Permutation) -> SchubertVector:
        return schubert_product(u, v).restrict(self._fixed)

    def hilbert_series(self) -> UniPoly:
        """
        Graded dimensions of the coinvariant algebra modulo J_H.

        Computed per degree as (#staircase monomials) minus the rank of the
        normal forms of the ideal's Schubert polynomials.
        """
        n = self.n
        total: dict[int, int] = {}
        for e in staircase_monomials(n):
            total[sum(e)] = total.get(sum(e), 0) + 1
        lens = lengths(n)
        out = {}
        for deg, count in total.items():
            gens = [
                coinvariant_normal_form(schubert_polynomial(w))
                for w in self.ideal_index
                if lens[w] == deg
            ]
            out[2 * deg] = count - _span_rank(gens)
        return UniPoly(out)

    def dimension(self) -> int:
        return self.hilbert_series()(1)

    def multiplication_table(self) -> dict[tuple[Permutation, Permutation], SchubertVector]:
        return {
            (u, v): self.multiply(u, v)
            for i, u in enumerate(self.basis)
            for v in self.basis[i:]
        }


def quotient_ring(h: HessFn) -> QuotientRing:
    return QuotientRing(h)


@dataclass
class IdealReport:
    ok: bool = True
    upward_closed: bool = True
    witness: tuple[Permutation, Permutation, Permutation] | None = None
    products_checked: int = 0

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "upward_closed": self.upward_closed,
            "witness": [format_perm(w) for w in self.witness] if self.witness else None,
            "products_checked": self.products_checked,
        }


def ideal_property_check(h: HessFn) -> IdealReport:
    """
    J_H is an ideal: non-fixed permutations are closed upward in Bruhat order,
    and ``sigma(u) sigma(w)`` for non-fixed ``w`` stays supported on non-fixed
    permutations.
    """
    n = h.n
    check_guard(n)
    fixed = fixed_points(h).perms
    perms = list(enumerate_perms(n))
    nonfixed = [w for w in perms if w not in fixed]
    rep = IdealReport()
    for w in nonfixed:
        for v in fixed:
            if bruhat_leq(w, v):
                rep.ok = rep.upward_closed = False
                rep.witness = (w, w, v)
                return rep
    for u in perms:
        for w in nonfixed:
            rep.products_checked += 1
            bad = schubert_product(u, w).support() & fixed
            if bad:
                rep.ok = False
                rep.witness = (u, w, min(bad))
                return rep
    return rep


@dataclass
class TanisakiReport:
    ok: bool
    hilbert: UniPoly
    generator_images: dict[str, str]
    offending: str | None = None


def tanisaki_check(n: int = 3) -> TanisakiReport:
    """
    For ``n = 3``, ``h = (1,2,3)``: the ideal generated by ``x1x2, x1x3, x2x3``
    has the same image in the coinvariant algebra as J_b.
    """
    if n != 3:
        raise ValueError("the Tanisaki comparison is only implemented for n = 3")
    h = HessFn((1, 2, 3))
    x1, x2, x3 = MultiPoly.variables(n)
    gens = {"x1*x2": x1 * x2, "x1*x3": x1 * x3, "x2*x3": x2 * x3}
    fixed = fixed_points(h).perms
    j_span = [
        coinvariant_normal_form(schubert_polynomial(w))
        for w in enumerate_perms(n)
        if w not in fixed
    ]
    j_rank = _span_rank(j_span)
    images = {}
    offending = None
    for name, g in gens.items():
        nf = coinvariant_normal_form(g)
        images[name] = str(nf)
        if _span_rank(j_span + [nf]) != j_rank:
            offending = offending or name

    ideal_span = [
        coinvariant_normal_form(MultiPoly.monomial(e) * g)
        for g in gens.values()
        for e in staircase_monomials(n)
    ]
    i_rank = _span_rank(ideal_span)
    same = i_rank == j_rank == _span_rank(ideal_span + j_span)

    counts: dict[int, int] = {}
    for e in staircase_monomials(n):
        counts[sum(e)] = counts.get(sum(e), 0) + 1
    hilbert = {}
    for deg, count in counts.items():
        part = [p for p in ideal_span if not p.is_zero() and p.degree() == deg]
        hilbert[2 * deg] = count - _span_rank(part)
    hs = UniPoly(hilbert)

    ok = offending is None and same and hs == poincare(h)
    if not same and offending is None:
        offending = "ideal spans differ"
    return TanisakiReport(ok, hs, images, offending)


def diag_restriction(w: Permutation) -> MultiPoly:
    """Product of ``t_a - t_b`` over the inversion roots of ``w``."""
    n = len(w)
    p = MultiPoly.constant(1, n)
    for a, b in sorted(inversion_roots(w)):
        p = p * (MultiPoly.var(a, n) - MultiPoly.var(b, n))
    return p


@dataclass
class RankReport:
    ok: bool
    rows: list[tuple[int, int, int]]
    mismatch_degree: int | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "degrees": [{"degree": d, "gkm": a, "free": b} for d, a, b in self.rows],
            "mismatch_degree": self.mismatch_degree,
        }


def free_module_series(h: HessFn, max_degree: int) -> list[int]:
    """
    Coefficients of ``P_H(t) * (1 - t^2)^-(n-1)`` in polynomial degrees
    ``0..max_degree``.
    """
    n = h.n
    P = poincare(h)
    r = n - 1
    return [
        sum(P[2 * l] * comb(d - l + r - 1, r - 1) for l in range(d + 1))
        for d in range(max_degree + 1)
    ]


def equivariant_rank_check(
    h: HessFn, max_degree: int = 3, cap: int = DEFAULT_DEGREE_CAP
) -> RankReport:
    """GKM cochain dimensions versus a free module of rank |X^T| with generators in degrees l(w)."""
    g = hess_gkm_graph(h)
    expected = free_module_series(h, max_degree)
    rows = []
    mismatch = None
    for d in range(max_degree + 1):
        got = cochain_dimension(g, d, cap=cap)
        rows.append((d, got, expected[d]))
        if got != expected[d] and mismatch is None:
            mismatch = d
    return RankReport(mismatch is None, rows, mismatch)

