import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ratpolys, small_fractions
from quasihilb import ZeroDivisor
from quasihilb.exactalg import (
    RatPoly,
    count_real_roots,
    poly_add,
    poly_divrem,
    poly_gcd,
    poly_mul,
    poly_shift,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)


def P(*cs):
    return RatPoly(cs)


class TestRepresentation:
    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0).coeffs == (F(1), F(2))

    def test_zero_has_no_degree(self):
        assert P().degree is None
        assert P(0, 0).degree is None
        assert P(5).degree == 0

    def test_coefficients_reduced(self):
        c = P(F(2, 4)).coeffs[0]
        assert (c.numerator, c.denominator) == (1, 2)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            P(1).coeffs = ()

    def test_pretty(self):
        assert P(1, 0, F(-1, 2)).pretty("t") == "-1/2t^2 + 1"
        assert P().pretty() == "0"


class TestAdd:
    def test_cancellation(self):
        assert poly_add(P(1, 1), P(-1, 1)) == P(0, 2)

    def test_identity(self):
        p = P(3, F(1, 7), -2)
        assert poly_add(p, P()) == p

    def test_rational(self):
        assert poly_add(P(F(1, 2), 1), P(F(1, 3))) == P(F(5, 6), 1)


class TestMul:
    def test_difference_of_squares(self):
        assert poly_mul(P(1, 1), P(1, -1)) == P(1, 0, -1)

    def test_absorbing(self):
        assert poly_mul(P(1, 2, 3), P()).is_zero()

    def test_product(self):
        assert poly_mul(P(1, 1), P(2, 1)) == P(2, 3, 1)

    @given(ratpolys(), ratpolys())
    def test_degree_additive(self, a, b):
        if a and b:
            assert (a * b).degree == a.degree + b.degree


class TestDivRem:
    def test_exact(self):
        assert poly_divrem(P(2, 3, 1), P(1, 1)) == (P(2, 1), P())

    def test_with_remainder(self):
        assert poly_divrem(P(1, 0, 1), P(1, 1)) == (P(-1, 1), P(2))

    def test_self(self):
        p = P(F(3, 2), 0, 7, -1)
        assert poly_divrem(p, p) == (P(1), P())

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisor):
            poly_divrem(P(1), P())

    @given(ratpolys(8), ratpolys(5))
    def test_round_trip(self, a, b):
        if b.is_zero():
            return
        q, r = poly_divrem(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


class TestShift:
    def test_square(self):
        assert poly_shift(P(0, 0, 1), 1) == P(1, 2, 1)

    def test_zero_shift(self):
        p = P(4, 5, 6)
        assert poly_shift(p, 0) == p

    def test_half_integer(self):
        assert poly_shift(P(1, 2), F(-1, 2)) == P(0, 2)

    @given(ratpolys(), small_fractions)
    def test_inverse(self, p, s):
        assert poly_shift(poly_shift(p, s), -s) == p

    @given(ratpolys(), small_fractions, small_fractions)
    def test_is_composition(self, p, s, x):
        assert poly_shift(p, s)(x) == p(x + s)


@settings(max_examples=60)
@given(ratpolys(4), ratpolys(4), ratpolys(4))
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


class TestSquarefree:
    def test_gcd_monic(self):
        assert poly_gcd(P(2, 2), P(-2, 0, 2)) == P(1, 1)

    def test_part(self):
        assert squarefree_part(P(0, 0, 1)) == P(0, 1)

    def test_decomposition(self):
        p = RatPoly.from_roots([1, 1, 1, -2, 3, 3], lead=5)
        parts = squarefree_decomposition(p)
        assert parts == [
            (RatPoly.from_roots([-2]), 1),
            (RatPoly.from_roots([3]), 2),
            (RatPoly.from_roots([1]), 3),
        ]
        rebuilt = RatPoly([5])
        for f, m in parts:
            rebuilt = rebuilt * f ** m
        assert rebuilt == p


class TestSturm:
    def test_two_real_roots(self):
        assert sturm_chain(P(-1, 0, 1)).chain == (P(-1, 0, 1), P(0, 2), P(1))

    def test_no_real_roots(self):
        assert sturm_chain(P(1, 0, 1)).chain == (P(1, 0, 1), P(0, 2), P(-1))

    def test_repeated_root_collapsed(self):
        assert sturm_chain(P(0, 0, 1)).chain == (P(0, 1), P(1))

    def test_zero(self):
        with pytest.raises(ZeroDivisor):
            sturm_chain(P())

    def test_degrees_decrease(self):
        chain = sturm_chain(RatPoly.from_roots([1, 2, 3, F(1, 2)]) * P(1, 0, 1)).chain
        degs = [p.degree for p in chain]
        assert all(a > b for a, b in zip(degs[1:], degs[2:]))
        assert degs[-1] == 0

    @pytest.mark.parametrize(
        "p, lo, hi, expected",
        [
            (P(-1, 0, 1), -math.inf, math.inf, 2),
            (P(1, 0, 1), -math.inf, math.inf, 0),
            (P(-1, 0, 1), 0, math.inf, 1),
            # half-open (lo, hi]: roots at endpoints
            (P(-1, 0, 1), -1, 1, 1),
            (P(-1, 0, 1), F(-3, 2), -1, 1),
            (P(-1, 0, 1), 1, 2, 0),
        ],
    )
    def test_count(self, p, lo, hi, expected):
        assert count_real_roots(sturm_chain(p), lo, hi) == expected

    def test_empty_interval(self):
        with pytest.raises(ValueError):
            count_real_roots(sturm_chain(P(1, 1)), 1, 1)

    @given(
        st.lists(st.integers(-6, 6), max_size=6),
        st.integers(0, 2),
        st.integers(-8, 8),
        st.integers(-8, 8),
    )
    def test_against_known_roots(self, roots, n_complex, lo, hi):
        p = RatPoly.from_roots([F(r, 2) for r in roots], lead=3)
        for _ in range(n_complex):
            p = p * P(2, 2, 1)  # roots -1 +- i
        if p.degree == 0:
            return
        distinct = {F(r, 2) for r in roots}
        chain = sturm_chain(p)
        assert count_real_roots(chain) == len(distinct)
        if lo < hi:
            inside = sum(1 for r in distinct if F(lo, 2) < r <= F(hi, 2))
            assert count_real_roots(chain, F(lo, 2), F(hi, 2)) == inside
