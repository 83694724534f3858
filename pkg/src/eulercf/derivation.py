"""Formal check of the two tail-series recurrences behind the fraction.

With G(r, s) the binomial tail series in (a, b):

* I1: G(r, r)   - G(r, r+1)   = (r+1) b          G(r+1, r+1)
* I2: G(r, r+1) - G(r+1, r+1) = (a + (r+1) b)    G(r+1, r+2)

Each ratio in the ladder G(0,0)/G(0,1), G(0,1)/G(1,1), G(1,1)/G(1,2), ...
is therefore 1 + (numerator)/(next ratio), and the numerators read off the
identities are exactly the partial numerators a, b, a+b, 2b, a+2b, ...
Identities are compared on series truncated to ``term_cap`` terms, inside
the window of total degree < term_cap where every coefficient is complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional

from .exact import TruncPoly, format_rational
from .series import SeriesParams, gtail_terms, letter, series_poly

Kind = Literal["I1", "I2"]


@dataclass(frozen=True)
class IdentityReport:
    kind: str
    r: int
    term_cap: int
    holds: bool
    first_discrepancy: Optional[tuple] = None  # (monomial, lhs coeff, rhs coeff)

    def to_dict(self) -> dict:
        disc = None
        if self.first_discrepancy is not None:
            mono, lhs, rhs = self.first_discrepancy
            disc = {
                "monomial": list(mono),
                "lhs": format_rational(lhs),
                "rhs": format_rational(rhs),
            }
        return {
            "kind": self.kind,
            "r": self.r,
            "term_cap": self.term_cap,
            "holds": self.holds,
            "first_discrepancy": disc,
        }


class IdentityFailure(AssertionError):
    def __init__(self, report: IdentityReport):
        super().__init__(f"identity {report.kind} fails at r={report.r}: {report.first_discrepancy}")
        self.report = report


def _g(r: int, s: int, term_cap: int) -> TruncPoly:
    return series_poly(gtail_terms(r, s, term_cap, formal=True, cap=term_cap))


def identity_sides(kind: Kind, r: int, term_cap: int) -> tuple:
    """(lhs, rhs) polynomials, both capped at total degree ``term_cap``."""
    p = SeriesParams.symbolic(term_cap)
    if kind == "I1":
        lhs = _g(r, r, term_cap) - _g(r, r + 1, term_cap)
        rhs = (r + 1) * p.b * _g(r + 1, r + 1, term_cap)
    elif kind == "I2":
        lhs = _g(r, r + 1, term_cap) - _g(r + 1, r + 1, term_cap)
        rhs = letter(r + 1, p) * _g(r + 1, r + 2, term_cap)
    else:
        raise ValueError(f"unknown identity kind {kind!r}")
    return lhs, rhs


def verify_identity(kind: Kind, r: int, term_cap: int) -> IdentityReport:
    """Compare both sides coefficient by coefficient for total degree < term_cap.

    ``r = -1`` is allowed for I2 only, where it is the opening step
    1 - G(0, 0) = a G(0, 1).
    """
    if term_cap < 2:
        raise ValueError("term_cap must be >= 2")
    if r < 0 and not (kind == "I2" and r == -1):
        raise ValueError("r must be >= 0 (or -1 for I2)")
    lhs, rhs = identity_sides(kind, r, term_cap)
    window = term_cap - 1
    monos = sorted(
        {m for m in (*lhs.coeffs, *rhs.coeffs) if sum(m) <= window},
        key=lambda m: (sum(m), tuple(-e for e in m)),
    )
    for mono in monos:
        left, right = lhs.coeff(mono), rhs.coeff(mono)
        if left != right:
            return IdentityReport(kind, r, term_cap, False, (mono, left, right))
    return IdentityReport(kind, r, term_cap, True)


@dataclass(frozen=True)
class ChainTrace:
    depth: int
    emitted_numerators: list = field(default_factory=list)
    reports: list = field(default_factory=list)


def chain_steps(depth: int) -> list:
    """The (kind, r) identity behind each emitted numerator, in order."""
    steps = [("I2", -1)]
    r = 0
    while len(steps) < depth:
        steps.append(("I1", r))
        if len(steps) < depth:
            steps.append(("I2", r))
        r += 1
    return steps[:depth]


def _numerator(kind: str, r: int) -> TruncPoly:
    p = SeriesParams.symbolic(1)
    return (r + 1) * p.b if kind == "I1" else letter(r + 1, p)


def verify_chain(depth: int, term_cap: int) -> ChainTrace:
    """Walk 1/S = 1 + a G(0,1)/G(0,0) down the ladder, ``depth`` steps.

    Every step is backed by :func:`verify_identity`; the first failing report
    raises :class:`IdentityFailure`.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    emitted, reports = [], []
    for kind, r in chain_steps(depth):
        report = verify_identity(kind, r, term_cap)
        if not report.holds:
            raise IdentityFailure(report)
        reports.append(report)
        emitted.append(_numerator(kind, r))
    return ChainTrace(depth, emitted, reports)


def chain_values(trace: ChainTrace, a, b) -> list:
    return [c.evaluate(a=Fraction(a), b=Fraction(b)) for c in trace.emitted_numerators]
