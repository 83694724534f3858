"""Regenerate acceptance_golden.json from oracles independent of the package.

Correspondence orders come from sympy's series expansion of the truncated
fraction built by direct nesting; the bracket width comes from bottom-up
Fraction evaluation. Run from the repository root:

    python tests/data/make_golden.py
"""

import json
from fractions import Fraction
from pathlib import Path

import sympy

x = sympy.Symbol("x")


def nested(cs):
    """1/(1 + c1 x/(1 + c2 x/(... (1 + c_d x))))."""
    acc = sympy.Integer(1)
    for c in reversed(cs):
        acc = 1 + c * x / acc
    return 1 / acc


def numerators(m, n, count):
    out = []
    for k in range(1, count + 1):
        i, odd = divmod(k, 2)
        out.append(m + i * n if odd else i * n)
    return out


def order(m, n, depth, cap):
    expr = nested(numerators(sympy.Rational(m), sympy.Rational(n), depth))
    ser = sympy.series(expr, x, 0, cap + 1).removeO()
    target = sympy.Integer(1)
    coeff = sympy.Integer(1)
    best = -1
    for k in range(cap + 1):
        want = coeff
        if sympy.simplify(ser.coeff(x, k) - want) != 0:
            break
        best = k
        coeff = -coeff * (m + k * n)
    return best


def euler_value(depth):
    """Convergent of 1/(1 + 1/(1 + 1/(1 + 2/(1 + 2/...)))) using depth pairs."""
    cs = [Fraction(1)] + [Fraction(c) for c in numerators(1, 1, depth - 1)]
    acc = Fraction(0)
    for c in reversed(cs[1:]):
        acc = c / (1 + acc)
    return cs[0] / (1 + acc)


def main():
    table = {}
    for m, n in ((1, 1), (1, 2), (2, 3)):
        table[f"{m},{n}"] = {str(d): order(m, n, d, 2 * d + 2) for d in range(1, 11)}
    width60 = abs(euler_value(60) - euler_value(59))
    payload = {
        "correspondence_order": table,
        "bracket_width_depth_60": {
            "decimal_string": f"{float(width60):.6e}",
            "method": "measured",
            "tol": "1e-3",
        },
    }
    path = Path(__file__).with_name("acceptance_golden.json")
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
