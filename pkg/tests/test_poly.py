from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minhess.poly import LinearForm, MultiPoly, UniPoly, revlex_key


def polys(n, max_deg=3, max_terms=5):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(n)])
    coeffs = st.integers(-5, 5)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: MultiPoly(n, d))


def forms(n):
    return st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1])


x1, x2, x3 = MultiPoly.variables(3)


def _apply(p, *word):
    for i in word:
        p = p.divided_difference(i)
    return p


class TestUniPoly:
    def test_text(self):
        p = UniPoly.from_list([1, 2, 2, 1], step=2)
        assert p.to_text() == "1 + 2t^2 + 2t^4 + t^6"
        assert str(UniPoly({})) == "0"

    def test_arithmetic(self):
        a = UniPoly.from_list([1, 1], step=2)
        assert a * a == UniPoly({0: 1, 2: 2, 4: 1})
        assert (a - a).is_zero()
        assert a(1) == 2

    def test_json_round_trip(self):
        p = UniPoly({0: 1, 4: -3, 6: 2})
        assert UniPoly.from_json(p.to_json()) == p


class TestSubstituteEqual:
    def test_difference_vanishes(self):
        assert (x1 - x2).substitute_equal((1, 2)).is_zero()

    def test_direct_substitution(self):
        assert (x1 * x2).substitute_equal((1, 3)) == x3 * x2

    def test_divisibility_certificate(self):
        assert (x1**2 - x2**2).substitute_equal(LinearForm(1, 2)).is_zero()
        assert not x1.substitute_equal((1, 2)).is_zero()

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            x1.substitute_equal((1, 4))

    @given(polys(3), polys(3), forms(3))
    def test_multiplicative(self, p, q, f):
        assert (p * q).substitute_equal(f) == p.substitute_equal(f) * q.substitute_equal(f)


class TestDividedDifference:
    def test_examples(self):
        assert x1.divided_difference(1) == MultiPoly.constant(1, 3)
        assert (x1**2 * x2).divided_difference(2) == x1**2
        assert (x1 * x2 + x1 + x2).divided_difference(1).is_zero()

    def test_bad_index(self):
        with pytest.raises(IndexError):
            x1.divided_difference(3)

    @given(polys(4), st.integers(1, 3))
    def test_square_zero(self, p, i):
        assert p.divided_difference(i).divided_difference(i).is_zero()

    @given(polys(4), st.integers(1, 2))
    def test_braid(self, p, i):
        assert _apply(p, i, i + 1, i) == _apply(p, i + 1, i, i + 1)

    @given(polys(3), st.integers(1, 2))
    def test_defining_identity(self, p, i):
        # (x_i - x_{i+1}) d_i p = p - s_i p
        xi, xj = MultiPoly.var(i, 3), MultiPoly.var(i + 1, 3)
        assert (xi - xj) * p.divided_difference(i) == p - p.swap(i, i + 1)


class TestMultiPoly:
    @given(polys(3), polys(3), st.tuples(*[st.fractions(max_denominator=7)] * 3))
    def test_evaluation_homomorphism(self, p, q, v):
        assert (p * q)(*v) == p(*v) * q(*v)
        assert (p + q)(*v) == p(*v) + q(*v)

    def test_exact_rationals(self):
        p = x1 * Fraction(1, 3) + x1 * Fraction(2, 3)
        assert p == x1

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            x1 + MultiPoly.var(1, 2)

    def test_leading_revlex(self):
        # lex with x_n compared first
        assert (x1**2 + x2).leading(revlex_key)[0] == (0, 1, 0)

    def test_text_and_json(self):
        p = x1**2 * x2 * 2 - x3
        assert p.to_text() == "2*x1^2*x2 - x3"
        assert MultiPoly.from_json(p.to_json(), 3) == p

    @given(polys(3))
    def test_json_round_trip(self, p):
        assert MultiPoly.from_json(p.to_json(), 3) == p
