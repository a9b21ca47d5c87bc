import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import coefficient_by_enumeration, series_by_long_division
from quasihilb import (
    GenFun,
    InvalidGenFun,
    NotEnoughSamples,
    RatPoly,
    ZeroNumerator,
    interpolate_constituents,
    series_prefix,
    split_numerator,
)


def gf(U, k, d):
    return GenFun(RatPoly(U), k, d)


@st.composite
def genfuns(draw, max_k=6, max_d=6):
    k = draw(st.integers(1, max_k))
    d = draw(st.integers(1, max_d))
    e = draw(st.integers(0, k * d - 1))
    cs = draw(st.lists(st.integers(-9, 9), min_size=e + 1, max_size=e + 1))
    if not any(cs):
        cs[-1] = 1
    return gf(cs, k, d)


class TestValidation:
    def test_degree_bound(self):
        gf([0] * 5 + [1], 2, 3)
        with pytest.raises(InvalidGenFun):
            gf([0] * 6 + [1], 2, 3)

    def test_zero_numerator(self):
        with pytest.raises(ZeroNumerator):
            gf([0, 0], 1, 2)

    @pytest.mark.parametrize("k, d", [(0, 1), (1, 0), (-2, 3)])
    def test_positive_parameters(self, k, d):
        with pytest.raises(InvalidGenFun):
            gf([1], k, d)


class TestSplit:
    def test_two_classes(self):
        s = split_numerator(gf([1, 1], 2, 2))
        assert (s[0].U, s[0].e, s[0].q) == (RatPoly([1]), 0, 0)
        assert (s[1].U, s[1].e, s[1].q) == (RatPoly([0, 1]), 1, 0)

    def test_empty_classes_have_no_degree(self):
        s = split_numerator(gf([1], 3, 1))
        assert s[0].U == RatPoly([1])
        for i in (1, 2):
            assert s[i].empty and s[i].e is None and s[i].q is None

    def test_by_definition(self):
        s = split_numerator(gf([2, 3, 5, 7], 2, 2))
        assert s[0].U == RatPoly([2, 0, 5])
        assert s[1].U == RatPoly([0, 3, 0, 7])
        assert (s[1].e, s[1].q) == (3, 1)

    @given(genfuns(), st.lists(st.fractions(max_denominator=10), min_size=5, max_size=5))
    def test_soundness(self, f, points):
        s = split_numerator(f)
        assert s.total() == f.U
        for x in points:
            assert sum(part.U(x) for part in s) == f.U(x)
        for part in s:
            assert all(j % f.k == part.i for j, c in enumerate(part.U.coeffs) if c)
            if not part.empty:
                assert part.e % f.k == part.i
                assert part.q == (part.e - part.i) // f.k


class TestSeries:
    def test_example_even_powers(self):
        assert list(series_prefix(gf([1], 2, 2), 6).values) == [1, 0, 2, 0, 3, 0]

    def test_geometric(self):
        assert list(series_prefix(gf([1], 1, 1), 4).values) == [1, 1, 1, 1]

    def test_odd_numbers(self):
        # frozen from series_by_long_division([1, 1], 1, 2, 4)
        assert list(series_prefix(gf([1, 1], 1, 2), 4).values) == [1, 3, 5, 7]

    def test_requires_positive_length(self):
        with pytest.raises(ValueError):
            series_prefix(gf([1], 1, 1), 0)

    @settings(max_examples=50)
    @given(genfuns(max_k=3, max_d=3))
    def test_matches_enumeration(self, f):
        N = 2 * f.k * f.d
        got = series_prefix(f, N).values
        U = f.U.coeffs
        assert list(got) == [coefficient_by_enumeration(U, f.k, f.d, n) for n in range(N)]

    @given(genfuns())
    def test_matches_long_division(self, f):
        N = 3 * f.k * f.d
        assert list(series_prefix(f, N).values) == series_by_long_division(f.U.coeffs, f.k, f.d, N)


class TestInterpolation:
    def test_example(self):
        f = gf([1], 2, 2)
        qp = interpolate_constituents(series_prefix(f, 4), 2, 2)
        assert qp[0] == RatPoly([1, F(1, 2)])
        assert qp[1].is_zero()

    def test_constant(self):
        qp = interpolate_constituents(series_prefix(gf([F(7, 3)], 1, 1), 1), 1, 1)
        assert qp[0] == RatPoly([F(7, 3)])

    def test_linear(self):
        qp = interpolate_constituents(series_prefix(gf([1, 1], 1, 2), 2), 1, 2)
        assert qp[0] == RatPoly([1, 2])

    def test_not_enough_samples(self):
        f = gf([1], 2, 3)
        with pytest.raises(NotEnoughSamples):
            interpolate_constituents(series_prefix(f, 5), 2, 3)

    @settings(max_examples=60)
    @given(genfuns())
    def test_oracle_consistency(self, f):
        k, d = f.k, f.d
        qp = interpolate_constituents(series_prefix(f, k * d + k), k, d)
        values = series_prefix(f, 3 * k * d + 1).values
        for n in range(3 * k * d + 1):
            assert qp(n) == values[n]
        for H in qp.constituents:
            assert H.is_zero() or H.degree <= d - 1


def test_seeded_oracle_consistency_at_full_bounds():
    rng = random.Random(7)
    for _ in range(100):
        k, d = rng.randint(1, 6), rng.randint(1, 6)
        cs = [rng.randint(-9, 9) for _ in range(rng.randint(1, k * d))]
        if not any(cs):
            continue
        f = gf(cs, k, d)
        qp = interpolate_constituents(series_prefix(f, k * d + k), k, d)
        values = series_prefix(f, 3 * k * d + 1).values
        assert all(qp(n) == values[n] for n in range(3 * k * d + 1))
