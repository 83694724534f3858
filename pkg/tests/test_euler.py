from fractions import Fraction

import pytest
from hypothesis import given, settings

from eulercf.contfrac import contract_even, convergent_values, eval_backward
from eulercf.euler import (
    build_cf,
    build_cf_mnx,
    build_contracted,
    coefficient,
    correspondence_order,
    nested_form,
)
from eulercf.series import SeriesParams

from .conftest import positive_rationals, rationals

GRID = [Fraction(1, 2), Fraction(1), Fraction(2)]


def test_build_cf_shape():
    e = build_cf(SeriesParams(1, 1))
    assert e.cf.lead == 0
    assert e.cf.pair(1) == (1, 1)
    assert e.c_sequence(6) == [1, 1, 2, 2, 3, 3]
    assert all(den == 1 for den in e.cf.denominators(12))


def test_build_cf_geometric_case():
    a = Fraction(3, 5)
    e = build_cf(SeriesParams(a, 0))
    assert e.c_sequence(6) == [a, 0, a, 0, a, 0]
    assert eval_backward(e.cf, 9, 0) == 1 / (1 + a)


def test_build_cf_mnx():
    assert build_cf_mnx(1, 2, 1).c_sequence(6) == [1, 2, 3, 4, 5, 6]


def test_symbolic_numerators():
    p = SeriesParams.symbolic(1)
    a, b = p.a, p.b
    assert build_cf(p).c_sequence(5) == [a, b, a + b, 2 * b, a + 2 * b]


@given(rationals(-4, 4), rationals(-4, 4))
def test_rule_consistency(a, b):
    e = build_cf(SeriesParams(a, b))
    for k in range(2, 41):
        i = k // 2
        assert e.c(k) == (i * b if k % 2 == 0 else a + i * b)


def test_build_contracted_symbolic():
    p = SeriesParams.symbolic(3)
    a, b = p.a, p.b
    cf = build_contracted(p)
    assert cf.lead == 1 + a
    assert cf.pairs(3) == [
        (-(a * b), 1 + a + 2 * b),
        (-2 * b * (a + b), 1 + a + 4 * b),
        (-3 * b * (a + 2 * b), 1 + a + 6 * b),
    ]


def test_build_contracted_unit_case():
    cf = build_contracted(SeriesParams(1, 1))
    assert cf.lead == 2
    assert cf.pairs(4) == [(-1, 4), (-4, 6), (-9, 8), (-16, 10)]


def test_build_contracted_geometric_case():
    a = Fraction(7, 3)
    cf = build_contracted(SeriesParams(a, 0))
    assert cf.numerators(5) == [0] * 5
    assert convergent_values(cf, 5)[-1] == 1 + a


@pytest.mark.parametrize("a", GRID)
@pytest.mark.parametrize("b", GRID)
def test_contracted_equals_contract_even(a, b):
    p = SeriesParams(a, b)
    direct, via = build_contracted(p), contract_even(nested_form(p))
    assert direct.lead == via.lead
    assert direct.pairs(20) == via.pairs(20)


@pytest.mark.parametrize("a", GRID)
@pytest.mark.parametrize("b", GRID)
def test_reciprocal_link(a, b):
    p = SeriesParams(a, b)
    contracted = convergent_values(build_contracted(p), 12)
    original = convergent_values(build_cf(p).cf, 26)
    for d in range(13):
        assert contracted[d] * original[2 * d + 2] == 1
    gaps = [abs(float(contracted[d] * ((original[2 * d + 1] + original[2 * d + 2]) / 2)) - 1) for d in range(13)]
    assert gaps[-1] < gaps[0]


def test_symbolic_contracted_example():
    p = SeriesParams.symbolic(2)
    assert build_contracted(p).pair(1)[0] == -(p.a * p.b)


@pytest.mark.parametrize("depth,expected", [(1, 1), (2, 2)])
def test_correspondence_hand_examples(depth, expected):
    # 1/(1+mx) and (1+nx)/(1+(m+n)x), expanded by hand
    assert correspondence_order(3, 5, depth) == expected


def test_correspondence_geometric_reaches_cap():
    for depth in (1, 2, 5):
        assert correspondence_order(2, 0, depth, cap=9) == 9


def test_correspondence_symbolic_matches_numeric():
    for depth in range(1, 6):
        assert correspondence_order(0, 0, depth, symbolic=True) == depth


@given(positive_rationals, positive_rationals)
@settings(max_examples=5, deadline=None)
def test_correspondence_monotone(m, n):
    orders = [correspondence_order(m, n, d) for d in range(1, 13)]
    assert orders == sorted(orders)
    assert all(o >= d for d, o in enumerate(orders, start=1))


def test_correspondence_golden(acceptance_golden):
    for key, table in acceptance_golden["correspondence_order"].items():
        m, n = map(int, key.split(","))
        for depth, order in table.items():
            assert correspondence_order(m, n, int(depth)) == order
