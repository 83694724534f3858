"""Continued fractions for 1 - a + a(a+b) - a(a+b)(a+2b) + ...

:func:`build_cf` gives ``1/(1 + a/(1 + b/(1 + (a+b)/(1 + 2b/(1 + ...)))))``
whose partial numerators follow c_1 = a, c_{2i} = i b, c_{2i+1} = a + i b.
:func:`build_contracted` gives its two-level contraction, whose value is the
reciprocal of the series sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .contfrac import ContinuedFraction, recurrence
from .exact import TruncPoly
from .series import VARIABLES, SeriesParams, letter, term


def coefficient(k: int, p: SeriesParams):
    """Partial numerator c_k (k >= 1) of the series fraction."""
    if k < 1:
        raise ValueError("coefficients start at k = 1")
    i, odd = divmod(k, 2)
    if odd:
        return letter(i, p)
    return i * p.b


@dataclass(frozen=True)
class EulerCF:
    params: SeriesParams
    cf: ContinuedFraction

    def c(self, k: int):
        num, _ = self.cf.pair(k + 1)
        return num

    def c_sequence(self, count: int) -> list:
        return [self.c(k) for k in range(1, count + 1)]


def build_cf(p: SeriesParams) -> EulerCF:
    """Lead 0, pair 1 = (1, 1), pair k + 1 = (c_k, 1)."""
    one = p.a * 0 + 1

    def rule(k):
        if k == 1:
            return one, one
        return coefficient(k - 1, p), one

    return EulerCF(p, ContinuedFraction(one * 0, rule))


def build_cf_mnx(m, n, x) -> EulerCF:
    return build_cf(SeriesParams.from_mnx(m, n, x))


def nested_form(p: SeriesParams) -> ContinuedFraction:
    """``1 + c1/(1 + c2/(1 + ...))``, the denominator fraction of 1/S."""
    one = p.a * 0 + 1
    return ContinuedFraction(one, lambda k: (coefficient(k, p), one))


def build_contracted(p: SeriesParams) -> ContinuedFraction:
    """``1 + a - ab/(1 + a + 2b - 2b(a+b)/(1 + a + 4b - ...))``.

    Pair k is (-k b (a + (k-1) b), 1 + a + 2 k b). The value is 1/S, the
    reciprocal of the series sum: its depth-d convergent times the depth
    (2d + 2) convergent of :func:`build_cf` is exactly 1.
    """

    def rule(k):
        return -k * p.b * letter(k - 1, p), 1 + p.a + 2 * k * p.b

    return ContinuedFraction(1 + p.a, rule)


def correspondence_order(m, n, depth: int, *, symbolic: bool = False, cap: int | None = None) -> int:
    """How many series coefficients the truncated fraction reproduces.

    The fraction truncated after its first ``depth`` partial numerators
    c_1..c_depth (``build_cf`` depth ``depth + 1``; depth 1 is 1/(1 + m x))
    is expanded as a power series in x with a = m x, b = n x. Returns the
    largest N such that the coefficients of x^0..x^N equal those of
    1 - m x + m(m+n) x^2 - ..., or ``cap`` when all coefficients through the
    cap agree.

    With ``symbolic`` a and b stay independent indeterminates (m and n are
    ignored) and x-degree becomes total degree in (a, b).
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if cap is None:
        cap = 2 * depth + 2
    if symbolic:
        p = SeriesParams.symbolic(cap)
        target = [term(k, p) for k in range(cap + 1)]
    else:
        x = TruncPoly.var("x", ("x",), cap)
        m, n = Fraction(m), Fraction(n)
        p = SeriesParams(m * x, n * x)
        unit = SeriesParams(m, n)
        target = [term(k, unit) * x ** k for k in range(cap + 1)]

    h, kk = recurrence(build_cf(p).cf, depth + 1)[-1]
    expansion = h / kk
    order = -1
    for k in range(cap + 1):
        if expansion.homogeneous(k) != target[k]:
            break
        order = k
    return order
