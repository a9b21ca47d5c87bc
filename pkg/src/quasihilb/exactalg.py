"""Dense univariate polynomials over the rationals and Sturm chains.

Coefficients are :class:`fractions.Fraction` (always reduced, so structural
equality is mathematical equality).  Index ``j`` of :attr:`RatPoly.coeffs`
holds the coefficient of ``x**j``.  The zero polynomial has an empty
coefficient tuple and ``degree is None``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import ZeroDivisor

Rat = Fraction


def as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    if isinstance(value, float):
        # floats are accepted only when they are exact binary fractions
        return Fraction(value)
    raise TypeError(f"cannot convert {value!r} to an exact rational")


class RatPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def constant(cls, c) -> RatPoly:
        return cls([c])

    @classmethod
    def x(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, c, j: int) -> RatPoly:
        return cls([0] * j + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> RatPoly:
        p = cls([lead])
        for r in roots:
            p = p * cls([-as_rat(r), 1])
        return p

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                mono = var if j == 1 else f"{var}^{j}"
                body = mono if mag == 1 else f"{mag}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> RatPoly:
        if isinstance(other, RatPoly):
            return other
        return RatPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            s = as_rat(other)
            return RatPoly([c * s for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = RatPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; works for any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> RatPoly:
        return RatPoly([j * c for j, c in enumerate(self.coeffs)][1:])

    def monic(self) -> RatPoly:
        if not self.coeffs:
            raise ZeroDivisor("the zero polynomial has no monic normalization")
        return self * (1 / self.lead)

    def shift(self, s) -> RatPoly:
        return poly_shift(self, s)

    def reflect(self) -> RatPoly:
        """Return p(-x)."""
        return RatPoly([c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)])

    def valuation(self) -> int | None:
        """Largest ``v`` with ``x**v`` dividing ``self`` (None for zero)."""
        for j, c in enumerate(self.coeffs):
            if c != 0:
                return j
        return None

    def strip_x_power(self) -> tuple[RatPoly, int]:
        v = self.valuation() or 0
        return RatPoly(self.coeffs[v:]), v


def poly_add(a: RatPoly, b: RatPoly) -> RatPoly:
    return a + b


def poly_mul(a: RatPoly, b: RatPoly) -> RatPoly:
    return a * b


def poly_divrem(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly]:
    if b.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    rem = list(a.coeffs)
    db = b.degree
    if a.is_zero() or a.degree < db:
        return RatPoly(), a
    quot = [Fraction(0)] * (a.degree - db + 1)
    inv_lead = 1 / b.lead
    for shift in range(a.degree - db, -1, -1):
        c = rem[shift + db] * inv_lead
        quot[shift] = c
        if c == 0:
            continue
        for j, bc in enumerate(b.coeffs):
            rem[shift + j] -= c * bc
    return RatPoly(quot), RatPoly(rem[:db])


def poly_shift(p: RatPoly, s) -> RatPoly:
    """Return ``p(x + s)`` exactly."""
    s = as_rat(s)
    if s == 0:
        return p
    lin = RatPoly([s, 1])
    out = RatPoly()
    for c in reversed(p.coeffs):
        out = out * lin + c
    return out


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: RatPoly) -> RatPoly:
    if p.is_zero():
        raise ZeroDivisor("the zero polynomial has no square-free part")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p
    q, r = poly_divrem(p, g)
    assert r.is_zero()
    return q


def squarefree_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: pairwise coprime monic ``(f, m)`` with p = lead * prod f**m.

    Factors of degree zero are dropped.
    """
    if p.is_zero():
        raise ZeroDivisor("the zero polynomial has no square-free decomposition")
    p = p.monic()
    if p.degree == 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    m = 1
    while True:
        dc = c - b.derivative()
        if dc.is_zero():
            break
        f = poly_gcd(b, dc)
        if f.degree > 0:
            out.append((f, m))
        b = b // f
        c = dc // f
        m += 1
    if b.degree > 0:
        out.append((b.monic(), m))
    return out


class SturmChain:
    """Signed remainder sequence of the square-free part of a polynomial."""

    __slots__ = ("chain",)

    def __init__(self, chain: Sequence[RatPoly]):
        object.__setattr__(self, "chain", tuple(chain))

    def __setattr__(self, name, value):
        raise AttributeError("SturmChain is immutable")

    def __eq__(self, other):
        return isinstance(other, SturmChain) and self.chain == other.chain

    def __hash__(self):
        return hash(self.chain)

    def __repr__(self):
        return f"SturmChain({list(self.chain)!r})"

    def __len__(self):
        return len(self.chain)

    @property
    def poly(self) -> RatPoly:
        return self.chain[0]

    def variations_at(self, x) -> int:
        """Sign changes of the chain at a rational point or at +-inf.

        Zero entries are skipped.  For a square-free chain this makes
        ``V(lo) - V(hi)`` count roots in ``(lo, hi]`` exactly even when an
        endpoint is itself a root, so no endpoint perturbation is needed.
        """
        if x == math.inf or x == -math.inf:
            signs = []
            for p in self.chain:
                s = 1 if p.lead > 0 else -1
                if x < 0 and p.degree % 2 == 1:
                    s = -s
                signs.append(s)
        else:
            x = as_rat(x)
            signs = []
            for p in self.chain:
                v = p(x)
                if v != 0:
                    signs.append(1 if v > 0 else -1)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_chain(p: RatPoly) -> SturmChain:
    sf = squarefree_part(p)
    chain = [sf]
    if sf.degree == 0:
        return SturmChain(chain)
    chain.append(sf.derivative())
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return SturmChain(chain)


def count_real_roots(c: SturmChain, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of ``c.poly`` in ``(lo, hi]``."""
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    return c.variations_at(lo) - c.variations_at(hi)
