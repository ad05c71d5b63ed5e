import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq
from scipy.special import lambertw

from cuspradius.errors import BranchPole, NoRoot, NoSignChange, OutOfDomain
from cuspradius.numerics import (RootProblem, casin, clog, complex_newton_roots, complex_principal,
                                 csqrt, find_root_bracketed, lambert_w0, lambert_w0_complex,
                                 smallest_modulus_root, smallest_positive_root)


def test_root_table_sin():
    f = lambda r: r ** 4 + 4 * r - 5 * math.sin(1)
    assert find_root_bracketed(f, 0, 1) == pytest.approx(0.892917, abs=1e-6)


def test_root_identity():
    assert find_root_bracketed(lambda r: r, -1, 1) == pytest.approx(0.0, abs=1e-12)


def test_root_rational_symmetric_form():
    f = lambda r: r ** 4 + 4 * r - 5 * (3 - 2 * math.sqrt(2))
    assert find_root_bracketed(f, 0, 1) == pytest.approx(0.213942, abs=1e-5)


def test_root_matches_brentq():
    f = lambda r: r ** 6 + 6 * r - 7 * math.asinh(1)
    assert find_root_bracketed(f, 0, 1) == pytest.approx(brentq(f, 0, 1, xtol=1e-15), abs=1e-12)


def test_root_no_sign_change():
    with pytest.raises(NoSignChange):
        find_root_bracketed(lambda r: r * r + 1, -1, 1)


def test_root_problem_validation():
    with pytest.raises(ValueError):
        RootProblem(lambda x: x, 1.0, 0.0)
    with pytest.raises(ValueError):
        RootProblem(lambda x: x, 0.0, 1.0, tol=0)
    assert RootProblem(lambda x: x - 0.25, 0, 1).solve() == pytest.approx(0.25, abs=1e-12)


def test_root_tol_refinement_stable():
    f = lambda r: r ** 8 + 8 * r - 9 * (math.e - 1) / (math.e + 1)
    a = find_root_bracketed(f, 0, 1, tol=1e-8)
    b = find_root_bracketed(f, 0, 1, tol=1e-9)
    assert abs(a - b) <= 1e-8


@pytest.mark.parametrize("f, expected", [
    (lambda r: r ** 8 + 8 * r - 9 * math.asinh(1), 0.924715),
    (lambda r: r ** 4 + 4 * r - 5 * 2 / 3, 0.752971),
])
def test_smallest_positive_root_table(f, expected):
    assert smallest_positive_root(f, satisfied_sign=-1) == pytest.approx(expected, abs=1e-5)


def test_smallest_positive_root_left_edge():
    f = lambda r: r ** 4 - 4 * r + 5 / math.e
    assert smallest_positive_root(f, satisfied_sign=+1) == pytest.approx(0.472288, abs=1e-5)


def test_smallest_positive_root_saturates():
    assert smallest_positive_root(lambda r: r - 2.0) == 1.0


def test_smallest_positive_root_violated():
    with pytest.raises(NoRoot):
        smallest_positive_root(lambda r: r + 1.0, satisfied_sign=-1)


def test_smallest_positive_root_preconditions():
    with pytest.raises(ValueError):
        smallest_positive_root(lambda r: r, hi=1.5)
    with pytest.raises(ValueError):
        smallest_positive_root(lambda r: r, grid=10)


def test_smallest_positive_root_takes_first():
    # roots at 0.2 and 0.7
    f = lambda r: (r - 0.2) * (r - 0.7)
    assert smallest_positive_root(f) == pytest.approx(0.2, abs=1e-12)


@pytest.mark.parametrize("x, w", [(0.0, 0.0), (math.e, 1.0), (1.0, 0.567143)])
def test_lambert_examples(x, w):
    assert lambert_w0(x) == pytest.approx(w, abs=1e-6)


@pytest.mark.parametrize("x", [-1 / math.e + 1e-6, 0.1, 1.0, 10.0, 1e6])
def test_lambert_inverse(x):
    w = lambert_w0(x)
    assert w * math.exp(w) == pytest.approx(x, rel=1e-12)
    assert w == pytest.approx(lambertw(x).real, rel=1e-12)


def test_lambert_domain():
    with pytest.raises(OutOfDomain):
        lambert_w0(-0.5)
    assert lambert_w0(-1 / math.e) == pytest.approx(-1.0, abs=1e-7)


@given(st.complex_numbers(max_magnitude=5.0, allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_lambert_complex_matches_scipy(z):
    if abs(z + 1 / math.e) < 1e-3:
        return
    w = lambert_w0_complex(z)
    # signed zeros are unsigned before any branch decision
    ref = complex(lambertw(complex(z.real + 0.0, z.imag + 0.0)))
    assert abs(w - ref) <= 1e-10 * (1 + abs(w))


@pytest.mark.parametrize("x", [-0.75, -1.0, -1.4, -5.0])
def test_lambert_complex_below_branch_point(x):
    w = lambert_w0_complex(x)
    assert w.imag > 0
    assert abs(w * cmath.exp(w) - x) < 1e-12


def test_branch_examples():
    assert complex_principal("sqrt", -1 + 0j) == pytest.approx(1j)
    assert csqrt(complex(-1, -0.0)) == pytest.approx(1j)
    assert complex_principal("log", 1) == 0
    assert complex_principal("arcsin", 1) == pytest.approx(math.pi / 2)
    with pytest.raises(BranchPole):
        clog(0)
    with pytest.raises(ValueError):
        complex_principal("tan", 1)


def test_log_imaginary_part_range():
    assert clog(complex(-1, -0.0)).imag == pytest.approx(math.pi)


def test_arcsin_inverts_sine():
    x, y = np.meshgrid(np.linspace(-0.63, 0.63, 15), np.linspace(-0.63, 0.63, 15))
    for z in (x + 1j * y).ravel():
        assert abs(cmath.sin(casin(z)) - z) <= 1e-12


def test_complex_newton_finds_cubic_roots():
    g = lambda z: z ** 3 - 1
    roots = complex_newton_roots(g, lambda z: 3 * z * z)
    assert len(roots) == 3
    for r in roots:
        assert abs(r ** 3 - 1) < 1e-10


def test_smallest_modulus_root():
    # roots 0.3 and 2
    g = lambda z: (z - 0.3) * (z - 2)
    assert smallest_modulus_root(g) == pytest.approx(0.3, abs=1e-12)
