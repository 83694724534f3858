from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest

from eulercf.contfrac import bracket
from eulercf.euler import build_cf
from eulercf.oracle import OracleError, borel_integral, golden_entries, load_golden, reference_value
from eulercf.series import SeriesParams

GRID = [Fraction(1, 2), Fraction(1), Fraction(2)]


def test_flagship_two_schemes():
    hi = borel_integral(1, 1, 1)
    lo = borel_integral(1, 1, 1, tol=Decimal("1e-13"), method="quadpack")
    assert abs(hi.as_decimal - lo.as_decimal) < Decimal("1e-12")
    assert Decimal(hi.error_estimate) > 0
    assert hi.value.startswith("0.596347362323194")
    assert len(hi.value.replace("0.", "", 1)) >= 30


def test_flagship_closed_form():
    # for m = n = x = 1 the integral is e * E1(1)
    with mpmath.workdps(40):
        expected = mpmath.e * mpmath.e1(1)
        assert abs(mpmath.mpf(borel_integral(1, 1, 1).value) - expected) < mpmath.mpf("1e-30")


def test_half_power_case():
    # int exp(-t)/sqrt(1+2t) dt = sqrt(pi/2) e^(1/2) erfc(1/sqrt 2)
    v = borel_integral(1, 2, 1)
    with mpmath.workdps(40):
        expected = mpmath.sqrt(mpmath.pi / 2) * mpmath.exp(mpmath.mpf(1) / 2) * mpmath.erfc(1 / mpmath.sqrt(2))
        assert abs(mpmath.mpf(v.value) - expected) < mpmath.mpf("1e-30")
    golden = load_golden()["borel_1_2_1"]
    assert abs(v.as_decimal - Decimal(golden["decimal_string"])) < Decimal(golden["tol"])


@pytest.mark.parametrize("m,x", [(1, 1), (Fraction(2, 3), 5), (3, Fraction(1, 7))])
def test_closed_form_when_n_zero(m, x):
    v = borel_integral(m, 0, x)
    assert v.exact == 1 / (1 + Fraction(m) * Fraction(x))
    assert v.method == "closed-form" and v.error_estimate == "0"


def test_reference_values():
    golden = load_golden()
    for name in ("pi_over_4", "ln2", "euler_hypergeometric"):
        v = reference_value(name)
        assert v.value == golden[name]["decimal_string"]
    assert reference_value("pi_over_4").as_float == 0.7853981633974483
    assert reference_value("ln2").as_float == 0.6931471805599453
    assert reference_value("euler_hypergeometric").value.startswith("0.5963473623231940")
    with pytest.raises(KeyError):
        reference_value("e")


def test_golden_file_is_current():
    assert golden_entries() == list(load_golden().values())


def test_unreachable_tolerance():
    with pytest.raises(OracleError) as info:
        borel_integral(1, 1, 1, tol=Decimal("1e-60"))
    assert info.value.best.value.startswith("0.5963473623")
    with pytest.raises(OracleError):
        borel_integral(1, 1, 1, tol=Decimal("1e-20"), method="quadpack")


def test_argument_checks():
    for args in [(0, 1, 1), (1, -1, 1), (1, 1, 0)]:
        with pytest.raises(ValueError):
            borel_integral(*args)
    with pytest.raises(ValueError):
        borel_integral(1, 1, 1, tol=0)
    with pytest.raises(ValueError):
        borel_integral(1, 1, 1, method="simpson")


@pytest.mark.parametrize("method,tols", [("tanh-sinh", ["1e-8", "1e-16", "1e-24"]), ("quadpack", ["1e-8", "1e-11", "1e-13"])])
def test_halving_tolerance_is_stable(method, tols):
    prev = None
    for tol in tols:
        for t in (Decimal(tol), Decimal(tol) / 2):
            v = borel_integral(2, 3, Fraction(1, 2), tol=t, method=method)
            if prev is not None:
                assert abs(v.as_decimal - prev.as_decimal) <= max(Decimal(prev.error_estimate), Decimal("1e-15"))
            prev = v


def test_small_n_continuity():
    gaps = [abs(borel_integral(1, Fraction(1, 10 ** j), 1).as_decimal - Decimal("0.5")) for j in range(1, 7)]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))
    assert gaps[-1] < Decimal("1e-5")


@pytest.mark.parametrize("a", GRID)
@pytest.mark.parametrize("b", GRID)
def test_brackets_contain_oracle(a, b):
    target = Fraction(borel_integral(a, b, 1).value)
    cf = build_cf(SeriesParams(a, b)).cf
    for depth in range(2, 41):
        assert bracket(cf, depth).contains(target)
