"""Independent numerical values used to check the exact machinery.

The series sum is taken as the Borel-type integral

    int_0^inf exp(-t) (1 + n x t)^(-m/n) dt      (n > 0)

with the n = 0 limit 1/(1 + m x). Nothing here is used by the exact modules.
Two quadrature schemes are available so each can check the other:
``"tanh-sinh"`` (mpmath, high precision, adaptive in degree) and
``"quadpack"`` (scipy's QAGI, double precision).
"""

from __future__ import annotations

import functools
import json
import math
import warnings
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from importlib import resources

import mpmath
from scipy import integrate

DIGITS = 32
WORKING_DPS = 45
MAX_DEGREE = 12


@dataclass(frozen=True)
class OracleValue:
    value: str
    method: str
    error_estimate: str
    exact: Fraction | None = None

    @property
    def as_float(self) -> float:
        return float(self.value)

    @property
    def as_decimal(self) -> Decimal:
        return Decimal(self.value)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "float": repr(self.as_float),
            "method": self.method,
            "error_estimate": self.error_estimate,
        }


class OracleError(ArithmeticError):
    """Tolerance not reached; ``best`` holds the last estimate."""

    def __init__(self, message: str, best: OracleValue):
        super().__init__(message)
        self.best = best


def _mpf(q) -> mpmath.mpf:
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def _decimal_string(q: Fraction, digits: int = DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def _check_args(m, n, x, tol):
    if m <= 0 or x <= 0:
        raise ValueError("need m > 0 and x > 0")
    if n < 0:
        raise ValueError("need n >= 0")
    if tol <= 0:
        raise ValueError("tol must be positive")


def borel_integral(m, n, x, tol=Decimal("1e-20"), method: str = "tanh-sinh") -> OracleValue:
    """Sum of 1 - m x + m(m+n) x^2 - ... as a Borel-type integral.

    The error estimate is kept below ``tol``; otherwise :class:`OracleError`
    is raised carrying the best value found.
    """
    m, n, x = Fraction(m), Fraction(n), Fraction(x)
    tol = Decimal(str(tol))
    _check_args(m, n, x, tol)

    if n == 0:
        exact = 1 / (1 + m * x)
        return OracleValue(_decimal_string(exact), "closed-form", "0", exact)

    if method == "tanh-sinh":
        return _tanh_sinh(m, n, x, tol)
    if method == "quadpack":
        return _quadpack(m, n, x, tol)
    raise ValueError(f"unknown method {method!r}")


def _tanh_sinh(m, n, x, tol) -> OracleValue:
    with mpmath.workdps(WORKING_DPS):
        nx, power = _mpf(n * x), -_mpf(m / n)
        floor = mpmath.mpf(10) ** (-(WORKING_DPS - 8))

        def f(t):
            return mpmath.exp(-t) * (1 + nx * t) ** power

        best = None
        for degree in range(6, MAX_DEGREE + 1):
            value, err = mpmath.quad(f, [0, 1, mpmath.inf], error=True, maxdegree=degree)
            err = max(abs(err), floor)
            best = OracleValue(
                mpmath.nstr(value, DIGITS, strip_zeros=False),
                "quadrature",
                mpmath.nstr(err, 3),
            )
            if err < mpmath.mpf(str(tol)):
                return best
    raise OracleError(f"tanh-sinh did not reach tol {tol} by degree {MAX_DEGREE}", best)


def _quadpack(m, n, x, tol) -> OracleValue:
    nx, power = float(n * x), -float(m / n)
    with warnings.catch_warnings():
        # a missed tolerance is reported through OracleError below
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(
            lambda t: math.exp(-t) * (1.0 + nx * t) ** power,
            0.0,
            float("inf"),
            epsabs=float(tol),
            epsrel=0.0,
            limit=500,
        )
    err = max(err, 1e-17)
    best = OracleValue(repr(value), "quadrature", f"{err:.3g}")
    if Decimal(repr(err)) >= tol:
        raise OracleError(f"quadpack error estimate {err:.3g} above tol {tol}", best)
    return best


_CONSTANTS = {
    "pi_over_4": lambda: mpmath.pi / 4,
    "ln2": lambda: mpmath.log(2),
}


@functools.lru_cache(maxsize=None)
def reference_value(name: str) -> OracleValue:
    """Named constants: ``pi_over_4``, ``ln2``, ``euler_hypergeometric``.

    The last one is the m = n = x = 1 series sum, 1 - 1 + 2 - 6 + 24 - ...
    """
    if name == "euler_hypergeometric":
        return borel_integral(1, 1, 1)
    if name not in _CONSTANTS:
        raise KeyError(f"unknown reference value {name!r}")
    with mpmath.workdps(WORKING_DPS):
        return OracleValue(mpmath.nstr(_CONSTANTS[name](), DIGITS, strip_zeros=False), "constant", "0")


def load_golden() -> dict:
    """Stored golden values keyed by name: ``{decimal_string, method, tol}``."""
    text = resources.files("eulercf").joinpath("data/golden.json").read_text(encoding="utf-8")
    return {entry["name"]: entry for entry in json.loads(text)}


def golden_entries() -> list:
    """Recompute the golden file contents (used to regenerate it)."""
    entries = []
    for name in ("pi_over_4", "ln2", "euler_hypergeometric"):
        v = reference_value(name)
        entries.append({"name": name, "decimal_string": v.value, "method": v.method, "tol": "1e-30" if v.method == "constant" else "1e-20"})
    v = borel_integral(1, 2, 1)
    entries.append({"name": "borel_1_2_1", "decimal_string": v.value, "method": v.method, "tol": "1e-20"})
    return entries
