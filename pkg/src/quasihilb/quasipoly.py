"""Closed-form constituents of ``U(t)/(1 - t^k)^d`` and their forced integer roots.

Each monomial ``c t^j`` of U contributes only to the constituent of class
``j mod k``, namely

    c / ((d-1)! k^(d-1)) * (n + k - j)(n + 2k - j) ... (n + (d-1)k - j),

and the constituents of a general U are sums of these.  Every summand of class
``i`` shares the factor ``(n + k - i)...(n + (d-1-q_i)k - i)``, which is what
:func:`factor_constituent` splits off.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import EmptyClass, ExponentOutOfRange, TheoremViolation
from .exactalg import RatPoly, poly_divrem
from .genfun import GenFun, split_numerator


@dataclass(frozen=True)
class QuasiPoly:
    k: int
    constituents: tuple[RatPoly, ...]

    def __post_init__(self):
        if len(self.constituents) != self.k:
            raise ValueError(f"expected {self.k} constituents, got {len(self.constituents)}")

    def __getitem__(self, i: int) -> RatPoly:
        return self.constituents[i]

    def __call__(self, n: int):
        return self.constituents[n % self.k](Fraction(n))


@dataclass(frozen=True)
class FactoredConstituent:
    """``H_i = scale * trivial * cofactor`` with ``trivial = h_{d-1-q, k, i}``."""

    i: int
    k: int
    d: int
    q: int
    scale: Fraction
    trivial: RatPoly
    cofactor: RatPoly
    constituent: RatPoly

    @property
    def a(self) -> int:
        """Index of the S_{a,k,i} family this constituent is predicted to lie in."""
        return self.d - self.q - 1

    @property
    def critical_abscissa(self) -> Fraction:
        return critical_abscissa(self.a, self.k, self.i)

    def trivial_roots(self) -> list[int]:
        return trivial_roots(self.a, self.k, self.i)


@dataclass(frozen=True)
class ProductPoly:
    poly: RatPoly


def critical_abscissa(a: int, k: int, i: int) -> Fraction:
    """Real part shared by the nontrivial roots of members of S_{a,k,i}."""
    return Fraction(-((a + 1) * k - 2 * i), 2)


def trivial_roots(a: int, k: int, i: int) -> list[int]:
    return [-(j * k - i) for j in range(1, a + 1)]


def trivial_factor(a: int, k: int, i: int) -> RatPoly:
    """``h_{a,k,i}(x) = (x + k - i)(x + 2k - i)...(x + ak - i)``; 1 when a < 1."""
    if k < 1:
        raise ValueError("k must be positive")
    if not 0 <= i <= k:
        raise ValueError(f"class index {i} outside 0..{k}")
    return RatPoly.from_roots(trivial_roots(a, k, i))


def _scale(k: int, d: int) -> Fraction:
    return Fraction(1, factorial(d - 1) * k ** (d - 1))


def constituent_single_power(c, j: int, k: int, d: int) -> tuple[int, RatPoly]:
    if not 0 <= j <= d * k - 1:
        raise ExponentOutOfRange(f"exponent {j} outside 0..{d * k - 1}")
    c = Fraction(c)
    poly = RatPoly.from_roots([j - m * k for m in range(1, d)], lead=c * _scale(k, d))
    return j % k, poly


def constituents_closed_form(f: GenFun) -> QuasiPoly:
    acc = [RatPoly() for _ in range(f.k)]
    for j, c in enumerate(f.U.coeffs):
        if c == 0:
            continue
        r, poly = constituent_single_power(c, j, f.k, f.d)
        acc[r] = acc[r] + poly
    return QuasiPoly(f.k, tuple(acc))


def factor_constituent(f: GenFun, i: int, qp: QuasiPoly | None = None) -> FactoredConstituent:
    part = split_numerator(f)[i]
    if part.empty:
        raise EmptyClass(f"U_{i} = 0 for k = {f.k}")
    if qp is None:
        qp = constituents_closed_form(f)
    H = qp[i]
    a = f.d - 1 - part.q
    scale = _scale(f.k, f.d)
    trivial = trivial_factor(a, f.k, i)
    cofactor, rem = poly_divrem(H, trivial * scale)
    if not rem.is_zero():
        raise TheoremViolation(
            f"h_{{{a},{f.k},{i}}} does not divide H_{i} for U={f.U!r}, k={f.k}, d={f.d}"
        )
    return FactoredConstituent(i, f.k, f.d, part.q, scale, trivial, cofactor, H)


def product_poly(qp: QuasiPoly) -> ProductPoly:
    out = RatPoly([1])
    for H in qp.constituents:
        out = out * H
    return ProductPoly(out)


def global_trivial_roots(f: GenFun) -> list[int]:
    """``-1, ..., -(dk - e - 1)``, the integers every H_x must vanish at."""
    top = f.d * f.k - f.e - 1
    return [-n for n in range(1, top + 1)]
