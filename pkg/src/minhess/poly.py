"""
Exact polynomial arithmetic.

Two concrete types live here: :class:`UniPoly`, an integer polynomial in one
variable ``t`` used for Poincare and Hilbert series, and :class:`MultiPoly`, a
rational polynomial in a fixed number of variables used for Schubert
polynomials and GKM cochain entries.  Nothing here touches floating point.

>>> p = UniPoly({0: 1, 2: 1}) * UniPoly({0: 1, 2: 1, 4: 1})
>>> str(p)
'1 + 2t^2 + 2t^4 + t^6'
>>> x1, x2, x3 = MultiPoly.variables(3)
>>> str((x1 * x1 * x2).divided_difference(2))
'x1^2'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = ["UniPoly", "MultiPoly", "LinearForm", "revlex_key"]

Number = Union[int, Fraction]
Exponent = tuple[int, ...]


class UniPoly:
    """Integer polynomial in ``t``, stored as ``{degree: coefficient}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        for d, a in (coeffs or {}).items():
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if a:
                c[int(d)] = int(a)
        self._c = c

    @classmethod
    def from_list(cls, coeffs: Sequence[int], step: int = 1) -> "UniPoly":
        """Build from a dense coefficient list; ``step`` spaces out the degrees."""
        return cls({step * i: a for i, a in enumerate(coeffs)})

    @classmethod
    def one(cls) -> "UniPoly":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, d: int) -> int:
        return self._c.get(d, 0)

    def degree(self) -> int:
        """Top degree; ``-1`` for the zero polynomial."""
        return max(self._c, default=-1)

    def is_zero(self) -> bool:
        return not self._c

    def dense(self) -> list[int]:
        return [self._c.get(d, 0) for d in range(self.degree() + 1)]

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def __call__(self, t: Number) -> Number:
        return sum(a * t**d for d, a in self._c.items())

    def __add__(self, other: "UniPoly") -> "UniPoly":
        out = dict(self._c)
        for d, a in other._c.items():
            out[d] = out.get(d, 0) + a
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly({d: -a for d, a in self._c.items()})

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", int]) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly({d: a * other for d, a in self._c.items()})
        out: dict[int, int] = {}
        for d1, a1 in self._c.items():
            for d2, a2 in other._c.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + a1 * a2
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniPoly({0: other})
        return isinstance(other, UniPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"UniPoly({dict(sorted(self._c.items()))})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for d, a in sorted(self._c.items()):
            if d == 0:
                body = str(abs(a))
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if abs(a) == 1 else f"{abs(a)}{mono}"
            parts.append(("-" if a < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[list[int]]:
        return [[d, a] for d, a in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "UniPoly":
        return cls({int(d): int(a) for d, a in data})


class LinearForm:
    """The linear form ``x_a - x_b`` (1-indexed, ``a != b``)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        if a == b:
            raise ValueError("a linear form x_a - x_b needs a != b")
        self.a = a
        self.b = b

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearForm) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"LinearForm({self.a}, {self.b})"

    def to_text(self, var: str = "t") -> str:
        return f"{var}{self.a}-{var}{self.b}"

    def as_poly(self, n: int) -> "MultiPoly":
        return MultiPoly.var(self.a, n) - MultiPoly.var(self.b, n)


def revlex_key(e: Exponent) -> Exponent:
    """
    Sort key for lex order with ``x_n > x_{n-1} > ... > x_1``.

    This is the order under which ``x_k^(n-k+1)`` leads ``h_{n-k+1}(x_1..x_k)``
    and under which a Schubert polynomial leads with ``x^code(w)``.
    """
    return tuple(reversed(e))


def grlex_key(e: Exponent) -> tuple[int, Exponent]:
    return (sum(e), e)


class MultiPoly:
    """
    Rational polynomial in ``n`` variables, stored as ``{exponent: coeff}``.

    Variables are 1-indexed in the public API (``x1 .. xn``), matching the
    usual notation; exponent tuples are 0-indexed.
    """

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[Exponent, Number] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        t: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            if c:
                t[e] = t.get(e, Fraction(0)) + Fraction(c)
                if not t[e]:
                    del t[e]
        self.n = n
        self._t = t

    @classmethod
    def _raw(cls, n: int, t: dict[Exponent, Fraction]) -> "MultiPoly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p.n = n
        p._t = t
        return p

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, c: Number, n: int) -> "MultiPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, e: Sequence[int], c: Number = 1) -> "MultiPoly":
        return cls(len(e), {tuple(e): c})

    @classmethod
    def var(cls, i: int, n: int) -> "MultiPoly":
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    @classmethod
    def variables(cls, n: int) -> list["MultiPoly"]:
        return [cls.var(i, n) for i in range(1, n + 1)]

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._t)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._t.items(), key=lambda it: grlex_key(it[0]))

    def is_zero(self) -> bool:
        return not self._t

    def degree(self) -> int:
        return max((sum(e) for e in self._t), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._t}) <= 1

    def coefficient(self, e: Sequence[int]) -> Fraction:
        return self._t.get(tuple(e), Fraction(0))

    def leading(self, key=revlex_key) -> tuple[Exponent, Fraction]:
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._t, key=key)
        return e, self._t[e]

    def _check(self, other: "MultiPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.n)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._t)
        for e, c in other._t.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.n, {e: -c for e, c in self._t.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.n)
            return MultiPoly._raw(self.n, {e: c * other for e, c in self._t.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        out = MultiPoly.constant(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.n)
        return isinstance(other, MultiPoly) and self.n == other.n and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._t.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def __call__(self, *values: Number) -> Fraction:
        """Evaluate at a point."""
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values")
        total = Fraction(0)
        for e, c in self._t.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= Fraction(v) ** k
            total += term
        return total

    def map_exponents(self, f) -> "MultiPoly":
        out: dict[Exponent, Fraction] = {}
        for e, c in self._t.items():
            e2 = f(e)
            s = out.get(e2, 0) + c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return MultiPoly._raw(self.n, out)

    def substitute_equal(self, form: LinearForm | tuple[int, int]) -> "MultiPoly":
        """
        Replace ``x_a`` by ``x_b``.

        The result is zero exactly when ``x_a - x_b`` divides the polynomial.
        """
        a, b = form
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise IndexError(f"form ({a},{b}) out of range for {self.n} variables")
        if a == b:
            raise ValueError("a linear form x_a - x_b needs a != b")
        ia, ib = a - 1, b - 1

        def move(e: Exponent) -> Exponent:
            if not e[ia]:
                return e
            e2 = list(e)
            e2[ib] += e2[ia]
            e2[ia] = 0
            return tuple(e2)

        return self.map_exponents(move)

    def substitute_zero(self, i: int) -> "MultiPoly":
        """Set ``x_i = 0``."""
        return MultiPoly._raw(self.n, {e: c for e, c in self._t.items() if not e[i - 1]})

    def swap(self, i: int, j: int) -> "MultiPoly":
        """Exchange variables ``x_i`` and ``x_j``."""
        ii, jj = i - 1, j - 1

        def sw(e: Exponent) -> Exponent:
            if e[ii] == e[jj]:
                return e
            e2 = list(e)
            e2[ii], e2[jj] = e2[jj], e2[ii]
            return tuple(e2)

        return self.map_exponents(sw)

    def divided_difference(self, i: int) -> "MultiPoly":
        """
        ``(p - s_i p) / (x_i - x_{i+1})``, computed monomial by monomial.

        For ``x_i^a x_{i+1}^b`` with ``a > b`` the quotient is
        ``sum_{k=0}^{a-b-1} x_i^(a-1-k) x_{i+1}^(b+k)``; the ``a < b`` case is the
        negative of the swapped one, and ``a == b`` contributes nothing.
        """
        if not 1 <= i < self.n:
            raise IndexError(f"divided difference index {i} out of range 1..{self.n - 1}")
        ii = i - 1
        out: dict[Exponent, Fraction] = {}
        for e, c in self._t.items():
            a, b = e[ii], e[ii + 1]
            if a == b:
                continue
            sign = 1
            if a < b:
                a, b, sign = b, a, -1
            base = list(e)
            for k in range(a - b):
                base[ii] = a - 1 - k
                base[ii + 1] = b + k
                key = tuple(base)
                out[key] = out.get(key, 0) + sign * c
        return MultiPoly._raw(self.n, {e: c for e, c in out.items() if c})

    def to_text(self, var: str = "x") -> str:
        if not self._t:
            return "0"
        chunks = []
        for e, c in sorted(self._t.items(), key=lambda it: grlex_key(it[0]), reverse=True):
            factors = []
            for i, k in enumerate(e, start=1):
                if k == 1:
                    factors.append(f"{var}{i}")
                elif k > 1:
                    factors.append(f"{var}{i}^{k}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        return [[list(e), str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence, n: int | None = None) -> "MultiPoly":
        data = list(data)
        if n is None:
            if not data:
                raise ValueError("cannot infer variable count from an empty term list")
            n = len(data[0][0])
        return cls(n, {tuple(e): Fraction(c) for e, c in data})
