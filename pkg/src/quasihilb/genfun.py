"""Rational generating functions ``U(t) / (1 - t^k)^d`` and the series oracle.

Nothing in this module uses the closed-form constituent formulas: the
coefficients are produced by the linear recurrence of the denominator and the
constituents are recovered by plain Lagrange interpolation.  That keeps it a
usable cross-check for :mod:`quasihilb.quasipoly`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import InvalidGenFun, NotEnoughSamples, ZeroNumerator
from .exactalg import RatPoly


@dataclass(frozen=True)
class GenFun:
    U: RatPoly
    k: int
    d: int

    def __post_init__(self):
        if not isinstance(self.U, RatPoly):
            object.__setattr__(self, "U", RatPoly(self.U))
        if not (isinstance(self.k, int) and self.k >= 1):
            raise InvalidGenFun(f"k must be a positive integer, got {self.k!r}")
        if not (isinstance(self.d, int) and self.d >= 1):
            raise InvalidGenFun(f"d must be a positive integer, got {self.d!r}")
        if self.U.is_zero():
            raise ZeroNumerator("numerator U must be nonzero")
        if self.U.degree > self.k * self.d - 1:
            raise InvalidGenFun(
                f"deg U = {self.U.degree} exceeds kd - 1 = {self.k * self.d - 1}"
            )

    @property
    def e(self) -> int:
        return self.U.degree

    def coeff(self, j: int) -> Fraction:
        cs = self.U.coeffs
        return cs[j] if 0 <= j < len(cs) else Fraction(0)


@dataclass(frozen=True)
class NumeratorClass:
    """Terms of U whose exponent is congruent to ``i`` mod ``k``.

    ``e`` and ``q`` are None when the class is empty.
    """

    i: int
    U: RatPoly
    e: int | None
    q: int | None

    @property
    def empty(self) -> bool:
        return self.U.is_zero()


@dataclass(frozen=True)
class NumeratorSplit:
    k: int
    parts: tuple[NumeratorClass, ...]

    def __getitem__(self, i: int) -> NumeratorClass:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def total(self) -> RatPoly:
        out = RatPoly()
        for part in self.parts:
            out = out + part.U
        return out


@dataclass(frozen=True)
class SeriesPrefix:
    values: tuple[Fraction, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def split_numerator(f: GenFun) -> NumeratorSplit:
    k = f.k
    buckets = [[Fraction(0)] * len(f.U.coeffs) for _ in range(k)]
    for j, c in enumerate(f.U.coeffs):
        buckets[j % k][j] = c
    parts = []
    for i, cs in enumerate(buckets):
        Ui = RatPoly(cs)
        if Ui.is_zero():
            parts.append(NumeratorClass(i, Ui, None, None))
        else:
            e = Ui.degree
            parts.append(NumeratorClass(i, Ui, e, (e - i) // k))
    return NumeratorSplit(k, tuple(parts))


def series_prefix(f: GenFun, N: int) -> SeriesPrefix:
    """First ``N`` power-series coefficients of ``f``, via the denominator recurrence.

    With ``(1 - t^k)^d = sum_m binom(d, m) (-1)^m t^(km)`` the coefficients
    satisfy ``H(n) = c_n - sum_{m>=1} binom(d, m) (-1)^m H(n - km)``.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    k, d = f.k, f.d
    weights = [(m * k, comb(d, m) * (-1) ** m) for m in range(1, d + 1)]
    H: list[Fraction] = []
    for n in range(N):
        v = f.coeff(n)
        for lag, w in weights:
            if lag > n:
                break
            v -= w * H[n - lag]
        H.append(v)
    return SeriesPrefix(tuple(H))


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> RatPoly:
    """Exact interpolating polynomial of degree < len(points)."""
    out = RatPoly()
    xs = [Fraction(x) for x, _ in points]
    for a, (xa, ya) in enumerate(points):
        if ya == 0:
            continue
        basis = RatPoly([1])
        denom = Fraction(1)
        for b, xb in enumerate(xs):
            if b == a:
                continue
            basis = basis * RatPoly([-xb, 1])
            denom *= xs[a] - xb
        out = out + basis * (Fraction(ya) / denom)
    return out


def interpolate_constituents(s: SeriesPrefix, k: int, d: int):
    """Recover the k constituents from the series, d samples per residue class.

    The nodes for class ``i`` are ``i, i + k, ..., i + (d - 1) k``.
    """
    from .quasipoly import QuasiPoly

    if len(s) < k * d:
        raise NotEnoughSamples(f"need {k * d} series values, got {len(s)}")
    constituents = []
    for i in range(k):
        nodes = [i + m * k for m in range(d)]
        constituents.append(lagrange_interpolate([(n, s[n]) for n in nodes]))
    return QuasiPoly(k, tuple(constituents))
