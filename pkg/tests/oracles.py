"""Reference computations that share no code path with the package."""

from fractions import Fraction
from itertools import product


def coefficient_by_enumeration(U, k, d, n):
    """[t^n] U(t)/(1-t^k)^d by counting d-tuples (m_1..m_d) >= 0 with k*sum(m) = n - j."""
    total = Fraction(0)
    for j, c in enumerate(U):
        rest = n - j
        if c == 0 or rest < 0 or rest % k:
            continue
        s = rest // k
        count = sum(1 for ms in product(range(s + 1), repeat=d) if sum(ms) == s)
        total += Fraction(c) * count
    return total


def series_by_long_division(U, k, d, N):
    """Power-series quotient U / D with D = (1 - t^k)^d expanded by repeated multiplication."""
    D = [Fraction(1)]
    for _ in range(d):
        nxt = [Fraction(0)] * (len(D) + k)
        for j, c in enumerate(D):
            nxt[j] += c
            nxt[j + k] -= c
        D = nxt
    h = []
    for n in range(N):
        v = Fraction(U[n]) if n < len(U) else Fraction(0)
        for j in range(1, min(n, len(D) - 1) + 1):
            v -= D[j] * h[n - j]
        h.append(v / D[0])
    return h


def poly_eval(coeffs, x):
    return sum(Fraction(c) * Fraction(x) ** j for j, c in enumerate(coeffs))
