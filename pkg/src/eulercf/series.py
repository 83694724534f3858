"""The divergent series 1 - a + a(a+b) - a(a+b)(a+2b) + ... and its binomial tails.

The factors a, a+b, a+2b, ... are produced by :func:`letter`. The tail family
``G(r, s)`` has terms ``(-1)^k C(k+r, r) prod_{j<k} (a + (s+j) b)``; ``r``
selects the coefficient family (ones, naturals, triangular, pyramidal, ...)
and ``s`` the first factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import TruncPoly, binomial

Entry = Union[Fraction, TruncPoly]

VARIABLES = ("a", "b")


@dataclass(frozen=True)
class SeriesParams:
    """The pair (a, b). Entries may be rationals or formal polynomials."""

    a: Entry
    b: Entry

    def __post_init__(self):
        if not isinstance(self.a, TruncPoly):
            object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.b, TruncPoly):
            object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def from_mnx(cls, m, n, x) -> "SeriesParams":
        """Substitute a = m x, b = n x."""
        return cls(Fraction(m) * Fraction(x), Fraction(n) * Fraction(x))

    @classmethod
    def symbolic(cls, cap: int) -> "SeriesParams":
        """a and b as indeterminates of a :class:`TruncPoly` ring capped at ``cap``."""
        return cls(TruncPoly.var("a", VARIABLES, cap), TruncPoly.var("b", VARIABLES, cap))

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.a, TruncPoly)


def letter(j: int, p: SeriesParams) -> Entry:
    """The j-th factor a + j b (j = 0 is a itself)."""
    return p.a + j * p.b


def term(k: int, p: SeriesParams) -> Entry:
    """(-1)^k a (a+b) ... (a+(k-1)b); the k = 0 term is 1."""
    out: Entry = 1
    for j in range(k):
        out = -out * letter(j, p)
    if isinstance(out, int):
        out = Fraction(out)
    return out


@dataclass(frozen=True)
class BinomialTailSeries:
    r: int
    s: int
    terms: tuple
    count: int


def gtail_terms(r: int, s: int, count: int, formal: bool = True,
                params: SeriesParams | None = None, cap: int | None = None) -> BinomialTailSeries:
    """First ``count`` terms of G(r, s).

    With ``formal`` the terms are polynomials in (a, b) capped at total degree
    ``cap`` (default ``count - 1``, which keeps every term whole). Otherwise
    ``params`` supplies rational a, b and the terms are rationals.

    ``r = -1`` is accepted and denotes the constant series 1: its weights
    C(k-1, k) vanish for every k >= 1. It closes the identity chain at the
    first step, where 1 - G(0, 0) = a G(0, 1).
    """
    if r < -1 or s < 0 or count < 0:
        raise ValueError("need r >= -1, s >= 0, count >= 0")
    if formal:
        if cap is None:
            cap = max(count - 1, 0)
        p = SeriesParams.symbolic(cap)
        one = TruncPoly.constant(1, VARIABLES, cap)
    else:
        if params is None:
            raise ValueError("numeric tail series need params")
        p = params
        one = Fraction(1)

    terms = []
    prod: Entry = one
    for k in range(count):
        if r == -1:
            weight = 1 if k == 0 else 0
        else:
            weight = binomial(k + r, r)
        terms.append((-1) ** k * weight * prod)
        prod = prod * letter(s + k, p)
    return BinomialTailSeries(r=r, s=s, terms=tuple(terms), count=count)


def series_poly(g: BinomialTailSeries) -> TruncPoly:
    """Sum of the formal terms as one polynomial."""
    if not g.terms:
        raise ValueError("empty series")
    total = g.terms[0]
    for t in g.terms[1:]:
        total = total + t
    return total
