"""Root location certificates for constituents.

Three kinds of claim are checked here:

* forced integer roots of each constituent and of the product of all
  constituents (exact rational evaluation, zero tolerance);
* whether a numerator class has all its nonzero roots on the unit circle;
* whether the remaining roots of a constituent lie on its critical line
  ``Re(x) = -((a+1)k - 2i)/2``, decided exactly with a Sturm count after
  recentering, or numerically with an Aberth iteration.
"""

from __future__ import annotations

import cmath
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import (
    EmptyClass,
    IrrationalCoefficients,
    RootAtOneForbidden,
    RootFindingDiverged,
    TheoremViolation,
)
from .exactalg import (
    RatPoly,
    count_real_roots,
    poly_divrem,
    poly_shift,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)
from .genfun import GenFun, NumeratorSplit, split_numerator
from .quasipoly import (
    FactoredConstituent,
    QuasiPoly,
    constituents_closed_form,
    factor_constituent,
    global_trivial_roots,
    product_poly,
    trivial_factor,
)

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
MAX_ITER = 500
POLISH_DPS = 50

EXACT_CERTIFIED = "ExactCertified"
NUMERIC_PASS = "NumericPass"
NUMERIC_FAIL = "NumericFail"
NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ComplexRoot:
    re: float
    im: float
    multiplicity: int
    residual: float

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


# ---------------------------------------------------------------------------
# numerical roots


def _aberth(coeffs: Sequence[complex], center: complex, radius: float, max_iter: int):
    """Simultaneous Aberth-Ehrlich iteration on a monic polynomial (low to high)."""
    n = len(coeffs) - 1
    # fixed angular offset keeps the start off any symmetry axis of the roots
    z = [center + radius * cmath.exp(1j * (2 * math.pi * j / n + 0.7)) for j in range(n)]
    deriv = [j * c for j, c in enumerate(coeffs)][1:]
    for it in range(max_iter):
        worst = 0.0
        for j in range(n):
            zj = z[j]
            p = 0j
            for c in reversed(coeffs):
                p = p * zj + c
            dp = 0j
            for c in reversed(deriv):
                dp = dp * zj + c
            if p == 0:
                continue
            s = 0j
            for m in range(n):
                if m != j:
                    diff = zj - z[m]
                    if diff != 0:
                        s += 1 / diff
            ratio = p / dp if dp != 0 else complex(radius, 0)
            delta = ratio / (1 - ratio * s)
            z[j] = zj - delta
            worst = max(worst, abs(delta) / max(1.0, abs(zj)))
        if worst < 1e-15:
            return z, True, it + 1
    return z, False, max_iter


def _mp(c: Fraction):
    return mpmath.mpf(c.numerator) / c.denominator


def _polish(factor: RatPoly, guess: complex, steps: int = 60):
    """Newton refinement of a simple root at high precision; returns (root, |residual|)."""
    cs = [_mp(c) for c in factor.monic().coeffs]
    dcs = [j * c for j, c in enumerate(cs)][1:]
    z = mpmath.mpc(guess)
    eps = mpmath.mpf(10) ** (-(POLISH_DPS - 5))
    for _ in range(steps):
        p = mpmath.polyval(cs[::-1], z)
        dp = mpmath.polyval(dcs[::-1], z)
        if dp == 0:
            break
        step = p / dp
        z -= step
        if abs(step) <= eps * max(1, abs(z)):
            break
    return z, abs(mpmath.polyval(cs[::-1], z))


def _roots_of_squarefree(f: RatPoly, tol: float, max_iter: int) -> list[tuple[complex, float]]:
    n = f.degree
    if n == 1:
        r = -f.coeffs[0] / f.coeffs[1]
        return [(complex(float(r), 0.0), 0.0)]
    center_q = -f.coeffs[-2] / (n * f.lead)
    g = poly_shift(f, center_q).monic()
    # Fujiwara bound for the recentred polynomial
    radius = 2 * max(abs(float(g.coeffs[n - j])) ** (1 / j) for j in range(1, n + 1))
    radius = radius or 1.0
    center = complex(float(center_q), 0.0)
    monic = [complex(float(c)) for c in f.monic().coeffs]
    approx, converged, iters = _aberth(monic, center, radius, max_iter)
    if not converged:
        log.debug("aberth stopped after %d iterations without full convergence", iters)
    out = []
    with mpmath.workdps(POLISH_DPS):
        for z in approx:
            root, res = _polish(f, z)
            out.append((complex(root), float(res)))
    worst = max(res for _, res in out)
    if worst > tol:
        raise RootFindingDiverged(
            f"residual {worst:.3g} exceeds tol {tol:g} for {f!r}",
            best=[r for r, _ in out],
        )
    return out


def find_roots(p: RatPoly, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> list[ComplexRoot]:
    """All complex roots of ``p`` grouped by multiplicity.

    Multiplicities come from an exact square-free decomposition, so each
    iteration runs on a polynomial with simple roots.  Output is sorted by
    (re, im) and fully determined by ``(p, tol)``.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    roots = []
    for factor, mult in squarefree_decomposition(p):
        for z, res in _roots_of_squarefree(factor, tol, max_iter):
            im = z.imag
            # a real factor has a real root here when the imaginary part is pure noise
            if abs(im) <= 1e-14 * max(1.0, abs(z)):
                im = 0.0
            roots.append(ComplexRoot(z.real, im, mult, res))
    roots.sort(key=lambda r: (r.re, r.im))
    return roots


# ---------------------------------------------------------------------------
# unit circle hypothesis


@dataclass(frozen=True)
class UnitCircleReport:
    i: int
    at_one_nonzero: bool
    stripped_power: int
    self_inversive: bool
    nonzero_roots: tuple[ComplexRoot, ...]
    max_modulus_deviation: float
    tol: float

    @property
    def hypothesis_holds(self) -> bool:
        return self.at_one_nonzero and self.max_modulus_deviation <= self.tol


def is_self_inversive(p: RatPoly) -> bool:
    """Reversed coefficients equal +-p (the only unimodular constants over Q)."""
    rev = tuple(reversed(p.coeffs))
    return rev == p.coeffs or rev == tuple(-c for c in p.coeffs)


def check_unit_circle(split: NumeratorSplit, i: int, tol: float = DEFAULT_TOL) -> UnitCircleReport:
    part = split[i]
    if part.empty:
        raise EmptyClass(f"U_{i} = 0")
    core, v = part.U.strip_x_power()
    at_one = part.U(Fraction(1)) != 0
    if core.degree >= 1:
        roots = tuple(find_roots(core, tol))
        dev = max(abs(abs(r.value) - 1.0) for r in roots)
    else:
        roots, dev = (), 0.0
    return UnitCircleReport(i, at_one, v, is_self_inversive(core), roots, dev, tol)


# ---------------------------------------------------------------------------
# critical line certificates


@dataclass(frozen=True)
class LineStatus:
    kind: str
    deviation: float | None = None
    witness: ComplexRoot | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.kind in (EXACT_CERTIFIED, NUMERIC_PASS)


@dataclass(frozen=True)
class RootCertificate:
    i: int
    q: int
    critical_abscissa: Fraction
    trivial_roots_expected: tuple[int, ...]
    trivial_roots_verified: tuple[int, ...]
    line_status: LineStatus
    method: str | None
    tolerance: float | None
    cofactor_roots: tuple[ComplexRoot, ...] = ()
    exact_failure: str | None = None

    @property
    def trivial_ok(self) -> bool:
        return self.trivial_roots_verified == self.trivial_roots_expected


def _verified_trivial_roots(fc: FactoredConstituent) -> tuple[int, ...]:
    return tuple(r for r in fc.trivial_roots() if fc.constituent(Fraction(r)) == 0)


def _certificate(fc, status, method, tol, roots=(), exact_failure=None) -> RootCertificate:
    return RootCertificate(
        i=fc.i,
        q=fc.q,
        critical_abscissa=fc.critical_abscissa,
        trivial_roots_expected=tuple(fc.trivial_roots()),
        trivial_roots_verified=_verified_trivial_roots(fc),
        line_status=status,
        method=method,
        tolerance=tol,
        cofactor_roots=tuple(roots),
        exact_failure=exact_failure,
    )


def certify_critical_line_numeric(
    fc: FactoredConstituent, tol: float = DEFAULT_TOL, exact_failure: str | None = None
) -> RootCertificate:
    c = float(fc.critical_abscissa)
    if fc.cofactor.degree < 1:
        return _certificate(fc, LineStatus(NUMERIC_PASS, 0.0), "aberth", tol, (), exact_failure)
    roots = find_roots(fc.cofactor, tol)
    worst = max(roots, key=lambda r: abs(r.re - c))
    dev = abs(worst.re - c)
    if dev <= tol:
        status = LineStatus(NUMERIC_PASS, dev)
    else:
        status = LineStatus(NUMERIC_FAIL, dev, witness=worst)
    return _certificate(fc, status, "aberth", tol, roots, exact_failure)


def line_parity_form(g: RatPoly) -> tuple[int, RatPoly] | None:
    """Write g(y) = y^s w(y^2) with s in {0, 1}, or None if g is neither even nor odd."""
    parities = {j % 2 for j, c in enumerate(g.coeffs) if c != 0}
    if len(parities) != 1:
        return None
    s = parities.pop()
    return s, RatPoly(g.coeffs[s::2])


def certify_critical_line_exact(fc: FactoredConstituent, tol: float = DEFAULT_TOL) -> RootCertificate:
    """Exact test that every root of the cofactor has real part ``critical_abscissa``.

    After recentring, ``g(y) = cofactor(y + c)`` has all roots on the
    imaginary axis iff g is even or odd, ``g(y) = y^s w(y^2)``, and every
    root of ``w(-z)`` is real and nonnegative.  The latter is a Sturm count.
    When either condition fails the numeric certificate is returned instead,
    with ``exact_failure`` naming the condition.
    """
    cof = fc.cofactor
    if cof.degree < 1:
        return _certificate(fc, LineStatus(EXACT_CERTIFIED, 0.0), "sturm", None)
    g = poly_shift(cof, fc.critical_abscissa)
    form = line_parity_form(g)
    if form is None:
        return certify_critical_line_numeric(
            fc, tol, exact_failure="recentred cofactor is neither even nor odd"
        )
    _, w = form
    if w.degree >= 1:
        wr = w.reflect()
        chain = sturm_chain(wr)
        distinct = squarefree_part(wr).degree
        at_zero = 1 if wr(Fraction(0)) == 0 else 0
        negative = count_real_roots(chain, -math.inf, 0) - at_zero
        nonneg = count_real_roots(chain) - negative
        if nonneg != distinct:
            return certify_critical_line_numeric(
                fc, tol,
                exact_failure=f"w(-z) has {distinct - nonneg} of {distinct} distinct roots off [0, inf)",
            )
    return _certificate(fc, LineStatus(EXACT_CERTIFIED, 0.0), "sturm", None)


# ---------------------------------------------------------------------------
# unit-circle families


@dataclass(frozen=True)
class RootOfUnity:
    """``exp(2 pi i n / m)``, stored with n/m reduced and 0 <= n < m."""

    n: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("root of unity order must be positive")
        n = self.n % self.m
        g = math.gcd(n, self.m)
        object.__setattr__(self, "n", n // g)
        object.__setattr__(self, "m", self.m // g)

    @classmethod
    def parse(cls, text: str) -> RootOfUnity:
        num, _, den = text.strip().partition("/")
        return cls(int(num), int(den) if den else 1)

    def __str__(self):
        return f"{self.n}/{self.m}"

    def step_factor(self, k: int) -> RatPoly:
        """(t^k - alpha), paired with its conjugate when alpha is not real."""
        if self.m == 1:
            raise RootAtOneForbidden("alpha = 1 would make U_i(1) = 0")
        if self.m == 2:
            return RatPoly.monomial(1, k) + 1
        twice_cos = {3: -1, 4: 0, 6: 1}.get(self.m)
        if twice_cos is None:
            raise IrrationalCoefficients(
                f"2cos(2 pi {self.n}/{self.m}) is irrational; only orders 1, 2, 3, 4, 6 are supported"
            )
        return RatPoly.monomial(1, 2 * k) - RatPoly.monomial(twice_cos, k) + 1

    @property
    def linear_factors(self) -> int:
        return 1 if self.m <= 2 else 2


def generate_unit_circle_family(
    k: int, d: int, i: int, steps: Sequence[RootOfUnity], c=1
) -> GenFun:
    """GenFun with numerator ``c t^i prod (t^k - alpha)`` over the given steps.

    A non-real alpha brings its conjugate along so the coefficients stay
    rational; such a step counts as two factors of ``t^k - alpha``.
    """
    if not 0 <= i < k:
        raise ValueError(f"class index {i} outside 0..{k - 1}")
    U = RatPoly.monomial(Fraction(c), i)
    for alpha in steps:
        U = U * alpha.step_factor(k)
    return GenFun(U, k, d)


def sample_family(
    rng: random.Random, max_k: int = 4, max_d: int = 6, max_steps: int = 4,
    orders: Sequence[int] = (2, 3, 4, 6),
) -> tuple[GenFun, int, list[RootOfUnity]]:
    """Random unit-circle family; returns the GenFun, its class and its steps."""
    k = rng.randint(1, max_k)
    d = rng.randint(1, max_d)
    i = rng.randrange(k)
    budget = d - 1
    steps: list[RootOfUnity] = []
    for _ in range(rng.randint(0, max_steps)):
        m = rng.choice(orders)
        n = rng.choice([n for n in range(1, m) if math.gcd(n, m) == 1])
        alpha = RootOfUnity(n, m)
        if alpha.linear_factors > budget:
            continue
        budget -= alpha.linear_factors
        steps.append(alpha)
    c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.randint(1, 4))
    return generate_unit_circle_family(k, d, i, steps, c), i, steps


# ---------------------------------------------------------------------------
# full suite


@dataclass
class ClassResult:
    i: int
    U: RatPoly
    e: int | None
    q: int | None
    unit_circle: UnitCircleReport | None = None
    factored: FactoredConstituent | None = None
    certificate: RootCertificate | None = None
    cross_check: RootCertificate | None = None
    skipped: str | None = None


@dataclass
class GlobalCheck:
    applicable: bool
    reason: str | None
    expected_roots: tuple[int, ...] = ()
    verified_roots: tuple[int, ...] = ()
    divisibility: bool | None = None  # k = 1 only: h_{d-e-1} divides H

    @property
    def ok(self) -> bool:
        if not self.applicable:
            return True
        return self.verified_roots == self.expected_roots and self.divisibility is not False


@dataclass
class SuiteResult:
    genfun: GenFun
    quasi: QuasiPoly
    classes: list[ClassResult]
    global_check: GlobalCheck
    tol: float
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _verify_class(f: GenFun, qp: QuasiPoly, split: NumeratorSplit, i: int, tol: float):
    part = split[i]
    res = ClassResult(i, part.U, part.e, part.q)
    violations = []
    if part.empty:
        res.skipped = "EmptyClass"
        return res, violations
    res.unit_circle = check_unit_circle(split, i, tol)
    try:
        fc = factor_constituent(f, i, qp)
    except TheoremViolation as exc:
        res.skipped = "TheoremViolation"
        return res, [str(exc)]
    res.factored = fc
    if res.unit_circle.hypothesis_holds:
        cert = certify_critical_line_exact(fc, tol)
        res.certificate = cert
        if cert.method == "sturm":
            res.cross_check = certify_critical_line_numeric(fc, tol)
            if not res.cross_check.line_status.passed:
                violations.append(f"class {i}: exact and numeric line certificates disagree")
        if not cert.line_status.passed:
            violations.append(
                f"class {i}: root off the critical line Re = {fc.critical_abscissa} "
                f"(deviation {cert.line_status.deviation:.3g})"
            )
    else:
        why = "U_i(1) = 0" if not res.unit_circle.at_one_nonzero else "U_i has roots off the unit circle"
        res.certificate = _certificate(fc, LineStatus(NOT_APPLICABLE, reason=why), None, tol)
    if not res.certificate.trivial_ok:
        violations.append(
            f"class {i}: forced roots {res.certificate.trivial_roots_expected} "
            f"but only {res.certificate.trivial_roots_verified} vanish"
        )
    return res, violations


def verify_theorem_suite(f: GenFun, tol: float = DEFAULT_TOL) -> SuiteResult:
    split = split_numerator(f)
    qp = constituents_closed_form(f)
    classes, violations = [], []
    for i in range(f.k):
        res, bad = _verify_class(f, qp, split, i, tol)
        classes.append(res)
        violations.extend(bad)

    if any(part.empty for part in split):
        gc = GlobalCheck(False, "some U_i = 0")
    else:
        H = product_poly(qp).poly
        expected = tuple(global_trivial_roots(f))
        verified = tuple(n for n in expected if H(Fraction(n)) == 0)
        divisible = None
        if f.k == 1:
            _, rem = poly_divrem(qp[0], trivial_factor(f.d - f.e - 1, 1, 0))
            divisible = rem.is_zero()
        gc = GlobalCheck(True, None, expected, verified, divisible)
        if not gc.ok:
            violations.append(f"product of constituents misses forced roots {sorted(set(expected) - set(verified))}")
    return SuiteResult(f, qp, classes, gc, tol, violations)
