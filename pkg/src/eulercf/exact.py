"""Exact arithmetic: rationals, binomials and truncated multivariate polynomials.

Rationals are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator. :class:`TruncPoly` is a small sparse
polynomial type that discards monomials above a total-degree cap, enough to
treat series terms formally without a computer-algebra system.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse ``"3/7"``, ``"-2"`` or ``"0.25"`` into an exact rational.

    Raises ``ValueError`` on anything else (including ``"1/0"``).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k > n or k < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


class VariableMismatch(ValueError):
    pass


Monomial = tuple  # exponent tuple, one entry per variable


class TruncPoly:
    """Polynomial in named variables, truncated at total degree ``cap``.

    Instances are immutable. Zero coefficients are never stored.
    """

    __slots__ = ("variables", "cap", "_coeffs")

    def __init__(
        self,
        variables: Iterable[str],
        coeffs: Mapping[Monomial, Scalar] | None = None,
        cap: int = 0,
    ):
        if cap < 0:
            raise ValueError("degree cap must be non-negative")
        self.variables = tuple(variables)
        self.cap = cap
        nvars = len(self.variables)
        store = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not match {self.variables}")
            if sum(mono) > cap:
                continue
            c = Fraction(c)
            if c:
                store[mono] = c
        self._coeffs = store

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str], cap: int) -> "TruncPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value}, cap)

    @classmethod
    def var(cls, name: str, variables: Iterable[str], cap: int) -> "TruncPoly":
        variables = tuple(variables)
        mono = tuple(1 if v == name else 0 for v in variables)
        if sum(mono) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {mono: 1}, cap)

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._coeffs.get(tuple(mono), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._coeffs), default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * len(self.variables))

    def homogeneous(self, deg: int) -> "TruncPoly":
        return TruncPoly(
            self.variables,
            {m: c for m, c in self._coeffs.items() if sum(m) == deg},
            self.cap,
        )

    def truncate(self, cap: int) -> "TruncPoly":
        return TruncPoly(self.variables, self._coeffs, cap)

    def monomials(self) -> list:
        """Monomials sorted by total degree, then reverse-lexicographically."""
        return sorted(self._coeffs, key=lambda m: (sum(m), tuple(-e for e in m)))

    def evaluate(self, **values: Scalar) -> Fraction:
        total = Fraction(0)
        for mono, c in self._coeffs.items():
            term = c
            for name, e in zip(self.variables, mono):
                if e:
                    term *= Fraction(values[name]) ** e
            total += term
        return total

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "TruncPoly":
        if isinstance(other, TruncPoly):
            if other.variables != self.variables:
                raise VariableMismatch(f"{self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncPoly.constant(other, self.variables, self.cap)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return TruncPoly(self.variables, out, min(self.cap, other.cap))

    __radd__ = __add__

    def __neg__(self):
        return TruncPoly(self.variables, {m: -c for m, c in self._coeffs.items()}, self.cap)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul_trunc(self, other, min(self.cap, other.cap))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return TruncPoly(self.variables, {m: c / other for m, c in self._coeffs.items()}, self.cap)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * series_inverse(other)

    def __pow__(self, n: int):
        if n < 0:
            return series_inverse(self) ** (-n)
        out = TruncPoly.constant(1, self.variables, self.cap)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncPoly.constant(other, self.variables, self.cap)
        if not isinstance(other, TruncPoly):
            return NotImplemented
        return self.variables == other.variables and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.variables, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f"TruncPoly({self}, cap={self.cap})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for mono in self.monomials():
            c = self._coeffs[mono]
            factors = []
            for name, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_rational(mag)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


def poly_mul_trunc(p: TruncPoly, q: TruncPoly, cap: int) -> TruncPoly:
    """Exact product of ``p`` and ``q`` with every monomial above ``cap`` dropped."""
    if p.variables != q.variables:
        raise VariableMismatch(f"{p.variables} vs {q.variables}")
    out: dict = {}
    for m1, c1 in p._coeffs.items():
        d1 = sum(m1)
        if d1 > cap:
            continue
        for m2, c2 in q._coeffs.items():
            if d1 + sum(m2) > cap:
                continue
            mono = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
            out[mono] = out.get(mono, 0) + c1 * c2
    return TruncPoly(p.variables, out, cap)


def series_inverse(p: TruncPoly) -> TruncPoly:
    """Multiplicative inverse as a power series truncated at ``p.cap``.

    Needs a nonzero constant term.
    """
    c0 = p.constant_term()
    if c0 == 0:
        raise ZeroDivisionError("series inverse needs a nonzero constant term")
    # p = c0 (1 + q) with q having no constant term; 1/(1+q) = sum (-q)^i
    q = p / c0 - 1
    out = TruncPoly.constant(1, p.variables, p.cap)
    power = TruncPoly.constant(1, p.variables, p.cap)
    for _ in range(p.cap):
        power = power * (-q)
        if power.is_zero():
            break
        out = out + power
    return out / c0
