import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq, minimize_scalar

from cuspradius.domain import EpicycloidDomain, a3_by_root, ipow
from cuspradius.errors import OutOfRange
from cuspradius.geometry import Verdict

NS = (4, 6, 8, 20)


@pytest.mark.parametrize("n", [3, 5, 2, 0, -4])
def test_rejects_bad_n(n):
    with pytest.raises(ValueError):
        EpicycloidDomain(n)


def test_rejects_non_integer():
    with pytest.raises(TypeError):
        EpicycloidDomain(4.0)
    with pytest.raises(TypeError):
        EpicycloidDomain(True)


def test_ipow_matches_power():
    z = 0.3 + 0.8j
    for k in range(0, 30):
        assert ipow(z, k) == pytest.approx(z ** k, rel=1e-13, abs=1e-15)


def test_phi_examples():
    assert EpicycloidDomain(8).phi(0) == 1
    assert EpicycloidDomain(4).phi(-1) == pytest.approx(0.4)
    assert EpicycloidDomain(8).phi(1) == pytest.approx(2)


def test_boundary_examples():
    d = EpicycloidDomain(4)
    b = d.boundary(0.0)
    assert (b.x, b.y) == pytest.approx((2, 0))
    b = d.boundary(math.pi)
    assert (b.x, b.y) == pytest.approx((0.4, 0), abs=1e-15)
    assert abs(d.boundary(math.pi / 3).w - 1) == pytest.approx(0.6, abs=1e-15)


@given(st.floats(-math.pi, math.pi), st.sampled_from(NS))
@settings(max_examples=100, deadline=None)
def test_boundary_equals_phi_and_mirrors(t, n):
    d = EpicycloidDomain(n)
    b = d.boundary(t)
    assert abs(b.w - d.phi(complex(math.cos(t), math.sin(t)))) < 1e-13
    m = d.boundary(-t)
    assert m.x == pytest.approx(b.x, abs=1e-15) and m.y == pytest.approx(-b.y, abs=1e-15)


def test_cusp_sets():
    assert EpicycloidDomain(4).cusps().angles == pytest.approx((-math.pi / 3, math.pi / 3, math.pi))
    six = EpicycloidDomain(6).cusps().angles
    assert six == pytest.approx(tuple(k * math.pi / 5 for k in (-3, -1, 1, 3, 5)))
    for n in NS:
        cs = EpicycloidDomain(n).cusps()
        assert len(cs) == n - 1
        assert all(-math.pi < t <= math.pi for t in cs.angles)
        assert cs.primary_cusp == pytest.approx(complex(math.cos(math.pi / (n - 1)),
                                                        math.sin(math.pi / (n - 1))))


def test_cusp_derivative_zero():
    d = EpicycloidDomain(8)
    for t in d.cusps().angles:
        dx, dy = d.boundary_derivative(t)
        assert abs(dx) + abs(dy) < 1e-10
        h = 1e-6
        bp, bm = d.boundary(t + h), d.boundary(t - h)
        assert abs(bp.x - bm.x) / (2 * h) + abs(bp.y - bm.y) / (2 * h) < 1e-9
        # second derivative does not vanish
        n = d.n
        ddx = -n / (n + 1) * (math.cos(t) + n * math.cos(n * t))
        ddy = -n / (n + 1) * (math.sin(t) + n * math.sin(n * t))
        assert math.hypot(ddx, ddy) > 1


def test_sigma_examples():
    d = EpicycloidDomain(4)
    assert d.sigma(1.0, 0.0) == pytest.approx(1.0)
    assert d.sigma(1.0, math.pi / 3) == pytest.approx(9 / 25)
    assert d.sigma(0.5, math.pi) == pytest.approx(0.01)


def test_inscribed_examples():
    d = EpicycloidDomain(4)
    assert d.inscribed_radius(1.0) == pytest.approx(0.6, abs=1e-12)
    assert d.inscribed_radius(1.9) == pytest.approx(0.1, abs=1e-12)
    assert d.inscribed_radius(0.4 + 1e-9) == pytest.approx(0.0, abs=1e-8)
    with pytest.raises(OutOfRange):
        d.inscribed_radius(0.4)
    with pytest.raises(OutOfRange):
        d.inscribed_radius(2.0)


@pytest.mark.parametrize("n", (4, 6, 8))
def test_inscribed_against_local_minimisation(n):
    # oracle: min over the boundary of the distance, via grid + bounded Brent
    d = EpicycloidDomain(n)
    t = np.linspace(-np.pi, np.pi, 4001)
    for a in np.linspace(2 / (n + 1) + 0.01, 1.99, 25):
        s = d.sigma(a, t)
        i = int(np.argmin(s))
        res = minimize_scalar(lambda x: d.sigma(a, x), bounds=(t[max(i - 1, 0)], t[min(i + 1, 4000)]),
                              method="bounded", options={"xatol": 1e-12})
        assert d.inscribed_radius(float(a)) == pytest.approx(math.sqrt(res.fun), abs=1e-6)


@pytest.mark.parametrize("n", NS)
def test_a3_closed_form_vs_root(n):
    d = EpicycloidDomain(n)
    assert d.a3_threshold() == pytest.approx(a3_by_root(n), abs=1e-9)
    c = math.pi / (n - 1)
    other = brentq(lambda a: d.sigma(a, c) - d.sigma(a, 0.0), 1.0, 2.0 - 1e-12, xtol=1e-14)
    assert d.a3_threshold() == pytest.approx(other, abs=1e-9)
    assert 2 * (1 + n * n) / (1 + n) ** 2 < d.a3_threshold() < 2


def test_a3_n4_frozen():
    # brentq oracle, frozen
    assert EpicycloidDomain(4).a3_threshold() == pytest.approx(1.457142857, abs=1e-9)


@pytest.mark.parametrize("n", NS)
def test_extremes_against_grid(n):
    d = EpicycloidDomain(n)
    t = np.linspace(-np.pi, np.pi, 10 ** 5, endpoint=False)
    w = d.phi(np.exp(1j * t))
    # grid extremes sit at most a hair away from the true ones
    assert d.min_real_part() == pytest.approx(w.real.min(), abs=1e-8)
    assert d.max_argument() == pytest.approx(np.abs(np.angle(w)).max(), abs=1e-8)
    assert d.max_argument() == pytest.approx(math.pi / 2 - math.pi / (2 * n), abs=1e-14)


def test_min_real_part_examples():
    assert EpicycloidDomain(8).min_real_part() == pytest.approx(1 - math.cos(math.pi / 9), abs=1e-12)
    assert EpicycloidDomain(10 ** 6).min_real_part() < 1e-10
    assert math.tan(EpicycloidDomain(8).max_argument()) == pytest.approx(5.0273, abs=5e-5)


def test_contains_point_examples():
    for n in NS:
        d = EpicycloidDomain(n)
        assert d.contains_point(1) == Verdict.INSIDE
        assert d.contains_point(3) == Verdict.OUTSIDE
        assert d.contains_point(2 / (n + 1)) == Verdict.BOUNDARY
    with pytest.raises(ValueError):
        EpicycloidDomain(4).contains_point(1, samples=100)


@pytest.mark.parametrize("n", (4, 6, 8))
def test_inscribed_disk_samples_inside(n):
    d = EpicycloidDomain(n)
    ring = np.exp(1j * np.linspace(0, 2 * np.pi, 720, endpoint=False))
    for a in (0.6, 1.0, 1.2, 1.5, 1.8):
        r = d.inscribed_radius(a)
        verdicts = d.classify(a + r * (1 - 1e-4) * ring, band=0)
        assert all(v == Verdict.INSIDE for v in verdicts)
        # and slightly larger disks poke out
        verdicts = d.classify(a + r * 1.05 * ring, band=0)
        assert any(v == Verdict.OUTSIDE for v in verdicts)


@pytest.mark.parametrize("n", (4, 8, 20, 1000))
def test_hausdorff_gap(n):
    assert EpicycloidDomain(n).hausdorff_gap_to_unit_circle() == pytest.approx(2 / (n + 1), abs=1e-9)


def test_polyline_contains_cusp_vertices():
    d = EpicycloidDomain(4)
    poly = d.polyline()
    tips = [d.boundary(t).w for t in d.cusps().angles]
    for tip in tips:
        assert np.min(np.abs(poly.points - tip)) < 1e-15
