import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuspradius.errors import NonzeroConstantTerm
from cuspradius.series import (TruncatedSeries, a4_parameters, a5_parameters, coefficient_bounds,
                               extremal_series, lemma21_condition, lemma21_iii_lhs,
                               log_derivative_series, phi_series, printed_reduced_polynomial,
                               series_exp, stated_bounds, verify_recurrence)


def cauchy_coeffs(f, order, radius=0.5, m=512):
    # numerical Taylor coefficients via the FFT on a circle
    z = radius * np.exp(2j * np.pi * np.arange(m) / m)
    c = np.fft.fft(f(z)) / m
    return (c[: order + 1] / radius ** np.arange(order + 1)).real


def test_getitem_beyond_order():
    s = TruncatedSeries([1, 2, 3])
    assert s.order == 2
    with pytest.raises(IndexError):
        s[3]


def test_phi_series_n4():
    s = phi_series(4, order=5)
    assert s.coeffs == [1, Fraction(4, 5), 0, 0, Fraction(1, 5), 0]
    assert s.exact


def test_exact_switch():
    assert phi_series(4, order=16).exact
    assert not phi_series(4, order=17).exact


def test_series_exp_rejects_constant():
    with pytest.raises(NonzeroConstantTerm):
        series_exp(TruncatedSeries([Fraction(1), Fraction(1)]))


def test_series_exp_of_z():
    g = series_exp(TruncatedSeries([Fraction(0), Fraction(1)] + [Fraction(0)] * 6))
    assert g.coeffs == [Fraction(1, math.factorial(k)) for k in range(8)]


small = st.fractions(min_value=-3, max_value=3, max_denominator=20)


@given(st.lists(small, min_size=5, max_size=5), st.lists(small, min_size=5, max_size=5))
@settings(max_examples=50, deadline=None)
def test_exp_homomorphism(a, b):
    a[0] = b[0] = Fraction(0)
    sa, sb = TruncatedSeries(a), TruncatedSeries(b)
    assert series_exp(sa + sb) == series_exp(sa) * series_exp(sb)


@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4),
       st.lists(small, min_size=4, max_size=4))
@settings(max_examples=50, deadline=None)
def test_ring_laws(a, b, c):
    x, y, w = TruncatedSeries(a), TruncatedSeries(b), TruncatedSeries(c)
    assert x * y == y * x
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    assert x - x == TruncatedSeries([0] * 4)


@pytest.mark.parametrize("n", (4, 6, 8))
def test_log_derivative_of_f2_is_phi(n):
    f = extremal_series(n, 2, order=14)
    assert log_derivative_series(f) == phi_series(n, order=13)
    assert verify_recurrence(phi_series(n, order=13), f)


def test_recurrence_detects_perturbation():
    f = extremal_series(4, 2, order=10)
    bad = TruncatedSeries(f.coeffs[:5] + [f.coeffs[5] + Fraction(1, 1000)] + f.coeffs[6:])
    assert not verify_recurrence(phi_series(4, order=9), bad)


@pytest.mark.parametrize("n", (4, 6, 8))
@pytest.mark.parametrize("i", (2, 3, 4, 5))
def test_extremal_against_cauchy(n, i):
    m = n * (i - 1)

    def f(z):
        return z * np.exp(n * z ** (i - 1) / ((n + 1) * (i - 1)) + z ** m / (n * (n + 1) * (i - 1)))

    got = [float(c) for c in extremal_series(n, i, order=12).coeffs]
    assert np.allclose(got, cauchy_coeffs(f, 12), atol=1e-12)


def test_float_mode_matches_exact():
    a = extremal_series(6, 3, order=16).to_float().coeffs
    b = extremal_series(6, 3, order=16, exact=False).coeffs
    assert np.allclose(a, b, rtol=1e-14, atol=0)


def test_bounds_n4():
    assert stated_bounds(4) == [Fraction(4, 5), Fraction(2, 5), Fraction(1, 15), Fraction(1, 5)]
    rep = coefficient_bounds(4)
    assert rep.extremal_values == [Fraction(4, 5), Fraction(2, 5), Fraction(4, 15), Fraction(1, 5)]
    assert rep.agreement == [True, True, False, True]
    assert len(rep.errata) == 1 and "a_4" in rep.errata[0]


@pytest.mark.parametrize("n", range(4, 40, 2))
def test_a4_extremal_closed_form(n):
    assert coefficient_bounds(n).extremal_values[2] == Fraction(n, 3 * (n + 1))


@pytest.mark.parametrize("n", range(4, 65))
def test_lemma_conditions(n):
    assert lemma21_condition("ii", **a4_parameters(n))
    assert lemma21_condition("iii", **a5_parameters(n))


def test_lemma_condition_fails_outside():
    assert not lemma21_condition("ii", beta=Fraction(1, 2), delta=Fraction(3, 4))
    assert not lemma21_condition("iii", alpha=Fraction(1, 2), a=Fraction(1, 2),
                                 beta=Fraction(5), gamma=Fraction(0))
    with pytest.raises(ValueError):
        lemma21_condition("iv")


def test_iii_lhs_exact_n4():
    p = a5_parameters(4)
    assert p == {"alpha": Fraction(7, 30), "a": Fraction(3, 10), "beta": Fraction(53, 450),
                 "gamma": Fraction(11, 1000)}
    al, a, b, g = 7 / 30, 0.3, 53 / 450, 0.011
    by_hand = (8 * a * (1 - a) * ((al * b - 2 * g) ** 2 + (al * (a + al) - b) ** 2)
               + al * (1 - al) * (b - a * al) ** 2 - 4 * al ** 2 * (1 - al) ** 2 * a * (1 - a))
    got = lemma21_iii_lhs(p["alpha"], p["a"], p["beta"], p["gamma"])
    assert float(got) == pytest.approx(by_hand, rel=1e-13)
    assert got == Fraction(-480183907, 18225000000)


@pytest.mark.parametrize("n", range(1, 65))
def test_printed_reduced_nonpositive(n):
    assert printed_reduced_polynomial(n) <= 0
