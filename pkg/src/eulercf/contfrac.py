"""Continued fractions ``lead + n1/(d1 + n2/(d2 + ...))`` with exact convergents.

Depth counts consumed (numerator, denominator) pairs: depth 0 is ``lead``
alone. A fraction written ``1/(1 + a/(1 + ...))`` is encoded with lead 0 and
first pair (1, 1), so depth 1 gives 1 and depth 2 gives 1/(1+a).

Entries are normally :class:`~fractions.Fraction`, but any exact ring element
supporting ``+`` and ``*`` (e.g. :class:`~eulercf.exact.TruncPoly`) works for
the recurrence-based operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

Pair = tuple


class DegenerateDepthError(ZeroDivisionError):
    """A convergent denominator vanished."""

    def __init__(self, depth: int):
        super().__init__(f"canonical denominator vanishes at depth {depth}")
        self.depth = depth


class DegenerateTailError(ZeroDivisionError):
    def __init__(self, level: int):
        super().__init__(f"division by zero at level {level} of backward evaluation")
        self.level = level


class NonAlternatingError(ValueError):
    """Bracketing was requested for a fraction with non-positive entries."""


class ShapeError(ValueError):
    pass


def _exact(v):
    return Fraction(v) if isinstance(v, int) else v


class ContinuedFraction:
    """Lead term plus a finite list or an index rule of pairs.

    ``rule(k)`` must return the k-th pair for k >= 1 and be deterministic.
    ``length`` is ``None`` for an unbounded rule.
    """

    __slots__ = ("lead", "_rule", "length")

    def __init__(self, lead, rule: Callable[[int], Pair], length: int | None = None):
        self.lead = _exact(lead)
        self._rule = rule
        self.length = length

    @classmethod
    def from_pairs(cls, lead, pairs: Sequence[Pair]) -> "ContinuedFraction":
        frozen = tuple((_exact(n), _exact(d)) for n, d in pairs)
        return cls(lead, lambda k: frozen[k - 1], len(frozen))

    def pair(self, k: int) -> Pair:
        if k < 1 or (self.length is not None and k > self.length):
            raise IndexError(f"pair {k} outside 1..{self.length}")
        n, d = self._rule(k)
        return _exact(n), _exact(d)

    def pairs(self, depth: int) -> list:
        self._check_depth(depth)
        return [self.pair(k) for k in range(1, depth + 1)]

    def numerators(self, depth: int) -> list:
        return [n for n, _ in self.pairs(depth)]

    def denominators(self, depth: int) -> list:
        return [d for _, d in self.pairs(depth)]

    def _check_depth(self, depth: int):
        if depth < 0:
            raise ValueError("depth must be non-negative")
        if self.length is not None and depth > self.length:
            raise ValueError(f"fraction has only {self.length} pairs, asked for {depth}")

    def __repr__(self):
        shown = self.pairs(min(4, self.length if self.length is not None else 4))
        tail = "" if self.length is not None and self.length <= 4 else ", ..."
        return f"ContinuedFraction(lead={self.lead}, pairs={shown}{tail})"


@dataclass(frozen=True)
class Convergent:
    depth: int
    h: object
    kk: object

    @property
    def value(self):
        return self.h / self.kk


@dataclass(frozen=True)
class Bracket:
    lo: Fraction
    hi: Fraction
    depth: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def within(self, other: "Bracket") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi


def recurrence(cf: ContinuedFraction, depth: int) -> list:
    """Raw (h, kk) pairs for depths 0..depth, without dividing.

    h_d = den_d h_{d-1} + num_d h_{d-2}, likewise kk, from h_{-1} = 1,
    h_0 = lead, kk_{-1} = 0, kk_0 = 1.
    """
    h_prev, h = 1, cf.lead
    k_prev, k = 0, 1
    if not isinstance(cf.lead, Fraction):
        # ring elements: seed the recurrence with matching 0 and 1
        one = cf.lead * 0 + 1
        h_prev, k_prev, k = one, one * 0, one
    out = [(h, k)]
    for num, den in cf.pairs(depth):
        h_prev, h = h, den * h + num * h_prev
        k_prev, k = k, den * k + num * k_prev
        out.append((h, k))
    return out


def convergents(cf: ContinuedFraction, depth: int) -> list:
    """Convergents at depths 0..depth (``depth + 1`` entries), exact."""
    out = []
    for d, (h, k) in enumerate(recurrence(cf, depth)):
        if isinstance(k, Fraction) and k == 0:
            raise DegenerateDepthError(d)
        out.append(Convergent(d, h, k))
    return out


def convergent_values(cf: ContinuedFraction, depth: int) -> list:
    return [c.value for c in convergents(cf, depth)]


def _check_alternating(cf: ContinuedFraction, depth: int):
    for k, (num, den) in enumerate(cf.pairs(depth), start=1):
        if not isinstance(num, Fraction) or not isinstance(den, Fraction):
            raise NonAlternatingError("bracketing needs rational entries")
        if num < 0 or den <= 0:
            raise NonAlternatingError(
                f"pair {k} = ({num}, {den}) breaks positivity; convergents need not alternate"
            )


def bracket(cf: ContinuedFraction, depth: int) -> Bracket:
    """Ordered pair of the convergents at ``depth - 1`` and ``depth``.

    For positive partial denominators and non-negative partial numerators the
    convergents fall alternately on either side of the value, so the bracket
    encloses it. Anything else is refused with :class:`NonAlternatingError`.
    """
    if depth < 2:
        raise ValueError("bracket needs depth >= 2")
    _check_alternating(cf, depth)
    vals = convergent_values(cf, depth)
    lo, hi = sorted(vals[-2:])
    return Bracket(lo, hi, depth)


def eval_backward(cf: ContinuedFraction, depth: int, tail=Fraction(0)) -> Fraction:
    """lead + n1/(d1 + ... + n_depth/(d_depth + tail)), evaluated bottom-up."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    acc = Fraction(tail)
    pairs = cf.pairs(depth)
    for level in range(depth, 0, -1):
        num, den = pairs[level - 1]
        denom = den + acc
        if denom == 0:
            raise DegenerateTailError(level)
        acc = num / denom
    return cf.lead + acc


def contract_even(cf: ContinuedFraction) -> ContinuedFraction:
    """Contract ``1 + c1/(1 + c2/(1 + c3/...))`` two levels at a time.

    The result is ``1 + c1 - c1 c2/(1 + c2 + c3 - c3 c4/(1 + c4 + c5 - ...))``:
    lead 1 + c1 and pair k = (-c_{2k-1} c_{2k}, 1 + c_{2k} + c_{2k+1}). Its
    convergent at depth d equals the input's convergent at depth 2d + 1.

    The input must have lead 1 and unit partial denominators; unit
    denominators of a rule-generated input are checked as pairs are drawn.
    """
    if cf.lead != 1:
        raise ShapeError(f"lead must be 1, got {cf.lead}")
    if cf.length is not None:
        for k, (_, den) in enumerate(cf.pairs(cf.length), start=1):
            if den != 1:
                raise ShapeError(f"partial denominator {k} is {den}, expected 1")

    def c(j):
        if cf.length is not None and j > cf.length:
            # a missing level reads as a zero numerator
            return 0
        num, den = cf.pair(j)
        if den != 1:
            raise ShapeError(f"partial denominator {j} is {den}, expected 1")
        return num

    def rule(k):
        return -(c(2 * k - 1) * c(2 * k)), 1 + c(2 * k) + c(2 * k + 1)

    lead = 1 + c(1) if (cf.length is None or cf.length >= 1) else cf.lead
    length = None if cf.length is None else cf.length // 2
    return ContinuedFraction(lead, rule, length)
