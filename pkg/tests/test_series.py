from fractions import Fraction

import pytest
from hypothesis import given

from eulercf.exact import TruncPoly, binomial
from eulercf.series import SeriesParams, gtail_terms, letter, series_poly, term

from .conftest import rationals

S = SeriesParams.symbolic(6)
a, b = S.a, S.b


def test_letter():
    p = SeriesParams(Fraction(3, 2), Fraction(5))
    assert letter(0, p) == Fraction(3, 2)
    assert letter(2, S) == a + 2 * b
    assert letter(3, SeriesParams(1, 2)) == 7


def test_term_values():
    assert term(0, SeriesParams(2, 3)) == 1
    # 1 - 1 + 2 - 6 + 24 - 120
    assert [term(k, SeriesParams(1, 1)) for k in range(6)] == [1, -1, 2, -6, 24, -120]
    # direct product 2*5*8 with alternating sign
    assert term(3, SeriesParams(2, 3)) == -(2 * 5 * 8)


def test_from_mnx():
    p = SeriesParams.from_mnx(1, 2, Fraction(1, 3))
    assert (p.a, p.b) == (Fraction(1, 3), Fraction(2, 3))


@given(rationals(-5, 5), rationals(-5, 5))
def test_term_recurrence(x, y):
    p = SeriesParams(x, y)
    for k in range(31):
        assert term(k + 1, p) == -letter(k, p) * term(k, p)


def test_gtail_formal_examples():
    g = gtail_terms(0, 0, 3)
    assert list(g.terms) == [1, -a, a * (a + b)]
    g = gtail_terms(1, 1, 3)
    assert list(g.terms) == [1, -2 * (a + b), 3 * (a + b) * (a + 2 * b)]
    g = gtail_terms(3, 3, 2)
    assert list(g.terms) == [1, -4 * (a + 3 * b)]


def test_gtail_degrees():
    g = gtail_terms(2, 1, 7)
    assert g.terms[0] == 1
    for k, t in enumerate(g.terms):
        assert t.degree() == k
        assert t.homogeneous(k) == t


@given(rationals(-3, 3), rationals(-3, 3))
def test_gtail_numeric_matches_terms(x, y):
    p = SeriesParams(x, y)
    g = gtail_terms(0, 0, 12, formal=False, params=p)
    assert list(g.terms) == [term(k, p) for k in range(12)]


@pytest.mark.parametrize("r,family", [(0, [1, 1, 1, 1]), (1, [1, 2, 3, 4]), (2, [1, 3, 6, 10]), (3, [1, 4, 10, 20])])
def test_coefficient_families(r, family):
    g = gtail_terms(r, 2, 4)
    # coefficient of the pure a^k monomial is (-1)^k C(k+r, r)
    coeffs = [abs(t.coeff((k, 0))) for k, t in enumerate(g.terms)]
    assert coeffs == family == [binomial(k + r, r) for k in range(4)]


def test_constant_family():
    g = gtail_terms(-1, 0, 4)
    assert series_poly(g) == 1


def test_numeric_needs_params():
    with pytest.raises(ValueError):
        gtail_terms(0, 0, 3, formal=False)
