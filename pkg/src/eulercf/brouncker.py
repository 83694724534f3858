"""Brouncker-type fractions and their telescoping into alternating series.

For a strictly increasing positive sequence r_1 < r_2 < ... the fraction

    1/(r_1 + r_1^2/((r_2 - r_1) + r_2^2/((r_3 - r_2) + ...)))

splits into parts P_k = r_k + r_k^2/(P_{k+1} - r_k), each satisfying
1/P_k = 1/r_k - 1/P_{k+1}. Chaining them turns the fraction into
1/r_1 - 1/r_2 + 1/r_3 - ..., and the depth-d convergent is the d-term
partial sum. Odd numbers give pi/4, the naturals give log 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .contfrac import ContinuedFraction


class NotIncreasingError(ValueError):
    pass


class RSequence:
    """Strictly increasing positive rationals r_1, r_2, ... (1-indexed).

    Either a finite list or a rule ``k -> r_k``. Monotonicity is checked on
    every materialization.
    """

    def __init__(self, values: Sequence | None = None, rule: Callable[[int], object] | None = None,
                 name: str | None = None):
        if (values is None) == (rule is None):
            raise ValueError("give exactly one of values or rule")
        self._values = None if values is None else tuple(Fraction(v) for v in values)
        self._rule = rule
        self.name = name
        if self._values is not None:
            self._check(self._values, 1)

    @classmethod
    def odds(cls) -> "RSequence":
        return cls(rule=lambda k: 2 * k - 1, name="odds")

    @classmethod
    def naturals(cls) -> "RSequence":
        return cls(rule=lambda k: k, name="naturals")

    @classmethod
    def preset(cls, name: str) -> "RSequence":
        presets = {"odds": cls.odds, "naturals": cls.naturals}
        if name not in presets:
            raise KeyError(f"unknown preset {name!r}; choose from {sorted(presets)}")
        return presets[name]()

    @property
    def length(self) -> int | None:
        return None if self._values is None else len(self._values)

    def __getitem__(self, k: int) -> Fraction:
        if k < 1:
            raise IndexError("r is 1-indexed")
        if self._values is not None:
            return self._values[k - 1]
        return Fraction(self._rule(k))

    def take(self, count: int) -> list:
        if self.length is not None and count > self.length:
            raise ValueError(f"sequence has only {self.length} entries, asked for {count}")
        vals = [self[k] for k in range(1, count + 1)]
        self._check(vals, 1)
        return vals

    @staticmethod
    def _check(vals, start):
        prev = Fraction(0)
        for i, v in enumerate(vals, start=start):
            if v <= prev:
                what = "positive" if i == 1 else "strictly increasing"
                raise NotIncreasingError(f"r_{i} = {v} is not {what} (previous {prev})")
            prev = v

    def __eq__(self, other):
        if not isinstance(other, RSequence):
            return NotImplemented
        if self.length is None or other.length is None:
            return self is other
        return self._values == other._values

    def __repr__(self):
        if self.name:
            return f"RSequence({self.name})"
        return f"RSequence({[str(v) for v in self._values]})"


def cf_from_r(r: RSequence) -> ContinuedFraction:
    """Lead 0, pair 1 = (1, r_1), pair k+1 = (r_k^2, r_{k+1} - r_k)."""

    def rule(k):
        if k == 1:
            r1 = r[1]
            if r1 <= 0:
                raise NotIncreasingError(f"r_1 = {r1} is not positive")
            return Fraction(1), r1
        prev, cur = r[k - 1], r[k]
        if cur <= prev:
            raise NotIncreasingError(f"r_{k} = {cur} is not above r_{k - 1} = {prev}")
        return prev * prev, cur - prev

    if r.length is not None:
        r.take(r.length)
    return ContinuedFraction(Fraction(0), rule, r.length)


def series_sum_from_r(r: RSequence, terms: int) -> list:
    """Partial sums of 1/r_1 - 1/r_2 + 1/r_3 - ..., one per term."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    total = Fraction(0)
    out = []
    for k, rk in enumerate(r.take(terms), start=1):
        total += (1 if k % 2 else -1) / rk
        out.append(total)
    return out


@dataclass(frozen=True)
class TelescopeStep:
    k: int
    r_k: Fraction
    p_next: Fraction
    p_k: Fraction
    holds: bool


def telescope_step(k: int, r_k, p_next) -> TelescopeStep:
    """Build P_k = r_k + r_k^2/(P_{k+1} - r_k) and check 1/P_k = 1/r_k - 1/P_{k+1}."""
    r_k, p_next = Fraction(r_k), Fraction(p_next)
    if p_next in (0, r_k):
        raise ZeroDivisionError("P_{k+1} must avoid 0 and r_k")
    p_k = r_k + r_k * r_k / (p_next - r_k)
    return TelescopeStep(k, r_k, p_next, p_k, 1 / p_k == 1 / r_k - 1 / p_next)


@dataclass(frozen=True)
class Rejection:
    """``cf`` is not of telescoping type; ``index`` is the first bad pair."""

    index: int
    reason: str

    def __bool__(self):
        return False


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Non-negative exact square root, or None when q is not a rational square."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def detect_r(cf: ContinuedFraction, depth: int | None = None):
    """Recover r from a fraction of :func:`cf_from_r` shape, or reject it.

    Reads ``depth`` pairs (all of them for a finite fraction). r_1 is the first
    partial denominator; afterwards pair k+1 must carry r_k^2 as numerator
    (checked by exact square root) and r_{k+1} - r_k > 0 as denominator.
    Returns an :class:`RSequence` of length ``depth`` or a :class:`Rejection`.
    """
    if depth is None:
        if cf.length is None:
            raise ValueError("depth is required for an unbounded fraction")
        depth = cf.length
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if cf.lead != 0:
        return Rejection(0, f"lead is {cf.lead}, expected 0")
    pairs = cf.pairs(depth)
    num, den = pairs[0]
    if num != 1:
        return Rejection(1, f"first numerator is {num}, expected 1")
    if den <= 0:
        return Rejection(1, f"r_1 = {den} is not positive")
    rs = [den]
    for idx, (num, den) in enumerate(pairs[1:], start=2):
        prev = rs[-1]
        root = rational_sqrt(num)
        if root is None:
            return Rejection(idx, f"numerator {num} is not the square of a rational")
        if root != prev:
            return Rejection(idx, f"numerator {num} = {root}^2 but r_{idx - 1} = {prev}")
        if den <= 0:
            return Rejection(idx, f"requires r_{idx} - r_{idx - 1} > 0, got {den}")
        rs.append(prev + den)
    return RSequence(rs)
