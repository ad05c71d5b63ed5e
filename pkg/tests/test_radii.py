import cmath
import math

import numpy as np
import pytest
from scipy.optimize import brentq

import cuspradius.classes as C
from cuspradius import radii as R
from cuspradius.domain import EpicycloidDomain
from cuspradius.errors import UnsupportedClass
from cuspradius.geometry import Verdict


def D(n):
    return EpicycloidDomain(n)


def test_mbeta2_n4():
    r = R.forward_radius(C.MBeta(2.0), D(4)).closed_form
    assert r == pytest.approx(3 / 13, abs=1e-12)
    assert 3 - 13 * r * r - 10 * r == pytest.approx(0, abs=1e-12)


def test_w_n4():
    assert R.forward_radius(C.W, D(4)).closed_form == pytest.approx((math.sqrt(34) - 5) / 3, abs=1e-12)


@pytest.mark.parametrize("n", (4, 6, 8, 20))
def test_w_matches_printed_formula(n):
    printed = (math.sqrt(2 * (1 + n * n)) - n - 1) / (n - 1)
    assert R.forward_radius(C.W, D(n)).closed_form == pytest.approx(printed, abs=1e-12)


def test_car_n4_oracle():
    res = R.forward_radius(C.Car, D(4), oracle=True)
    g = cmath.exp(1j * math.pi / 3)
    printed = abs(-1 + cmath.sqrt((1 + 2 * g ** 4 + 4 + 8 * g) / 5))
    assert res.closed_form == pytest.approx(printed, abs=1e-12)
    assert res.closed_form == pytest.approx(0.5093, abs=5e-4)
    assert res.agree


def test_cassinian_saturates():
    for n in (4, 6, 8):
        assert R.forward_radius(C.Cassinian(1 - 4 / (n + 1) ** 2), D(n)).closed_form == 1.0


def test_unsupported():
    with pytest.raises(UnsupportedClass):
        R.forward_radius(C.ArcSinh, D(4))
    with pytest.raises(UnsupportedClass):
        R.backward_radius(C.Cardioid, D(4))


@pytest.mark.parametrize("c", R.FORWARD_CLASSES, ids=lambda c: c.label())
def test_forward_closed_form_vs_oracle_n4(c):
    res = R.forward_radius(c, D(4), oracle=True)
    assert 0 <= res.closed_form <= 1
    assert abs(res.closed_form - res.oracle) <= R.AGREE_TOL


@pytest.mark.parametrize("c, n, printed", [
    (C.SLalpha(0), 4, 0.501903), (C.SG, 6, 0.535219), (C.Sin, 8, 0.895131),
    (C.Nephroid, 4, 0.752971), (C.RationalR, 4, 0.213942), (C.ZExp, 4, 0.472288),
])
def test_backward_examples(c, n, printed):
    assert R.backward_radius(c, D(n)).closed_form == pytest.approx(printed, abs=1e-5)


@pytest.mark.parametrize("c", C.BACKWARD_TABLE_CLASSES, ids=lambda c: c.label())
def test_backward_vs_brentq(c):
    th = C.disk_threshold(c)
    for n in R.TABLE2_N:
        if th.kind == "symmetric":
            f = lambda r: r ** n + n * r - (n + 1) * th.value  # noqa: E731
        else:
            f = lambda r: r ** n - n * r + (n + 1) * th.value  # noqa: E731
        assert R.backward_radius(c, D(n)).closed_form == pytest.approx(brentq(f, 0, 1, xtol=1e-15), abs=1e-12)


@pytest.mark.parametrize("c", C.BACKWARD_TABLE_CLASSES, ids=lambda c: c.label())
def test_backward_touching(c):
    th = C.disk_threshold(c)
    for n in R.TABLE2_N:
        d = D(n)
        r = R.backward_radius(c, d).closed_form
        if th.kind == "symmetric":
            assert abs(d.phi(r) - 1) == pytest.approx(th.value, abs=1e-9)
        else:
            assert d.phi(-r).real == pytest.approx(1 - th.value, abs=1e-9)


@pytest.mark.parametrize("c", C.BACKWARD_TABLE_CLASSES, ids=lambda c: c.label())
def test_backward_ordering_matches_table(c):
    ours = [R.backward_radius(c, D(n)).closed_form for n in R.TABLE2_N]
    printed = [R.table2_printed(c, n) for n in R.TABLE2_N]
    assert np.argsort(ours).tolist() == np.argsort(printed).tolist()


def test_mbeta_backward_saturates():
    res = R.backward_radius(C.MBeta(3.0), D(4), oracle=True)
    assert res.closed_form == 1.0 and res.oracle == 1.0


def test_rational_r_candidates():
    cands = R.rational_r_candidates(4)
    assert cands["symmetric"] == pytest.approx(0.213942, abs=1e-6)
    assert cands["left_edge"] == pytest.approx(0.215000, abs=1e-6)
    note = R.backward_radius(C.RationalR, D(4)).errata_note
    assert "0.215000" in note


def test_nephroid_backward_oracle():
    res = R.backward_radius(C.Nephroid, D(4), oracle=True)
    assert res.oracle == pytest.approx(0.752971, abs=1e-4)


def test_parity_angle():
    assert R.parity_angle(6) == pytest.approx(3 * math.pi / 5)
    assert R.parity_angle(8) == pytest.approx(3 * math.pi / 7)


def test_parity_sin_n6():
    g = cmath.exp(1j * math.pi / 5)
    expected = abs(cmath.asin(g ** 3 * (g ** 5 + 6) / 7))
    res = R.parity_radius_sin_ne(C.Sin, D(6), oracle=True)
    assert res.closed_form == pytest.approx(expected, abs=1e-12)
    assert res.agree or res.errata_note


def test_parity_nephroid_root():
    d = D(8)
    res = R.parity_radius_sin_ne(C.Nephroid, d, oracle=False)
    z = res.closed_form_complex
    u = d.phi(cmath.exp(1j * R.parity_angle(8))) - 1
    assert abs(3 * z - z ** 3 - 3 * u) < 1e-12


def test_strohhacker():
    assert R.strohhacker_bound(D(4)) == pytest.approx(3 / abs(6.5 + 1.5 * math.sqrt(3) * 1j), abs=1e-12)
    assert R.strohhacker_bound(D(10 ** 6)) == pytest.approx(0.5, abs=1e-5)
    assert 0 < R.strohhacker_bound(D(8)) < 1
    for n in (4, 6, 8):
        assert R.forward_radius(C.OrderAlpha(0.0), D(n)).closed_form < R.strohhacker_bound(D(n))


@pytest.mark.parametrize("n", (4, 8))
def test_unit_radius_classes(n):
    assert R.unit_radius_classes(D(n)) == [C.SG, C.Cos, C.Cosh]


def test_limits_consistent_rows():
    for res in R.limit_table():
        if res.row.consistent:
            assert res.agree, res.row.label
        else:
            assert not res.agree, res.row.label


def test_lune_limit():
    assert R.limit_radius(C.Lune) == pytest.approx(0.75, abs=1e-3)
    assert R.limit_radius(C.ZExp) == pytest.approx(0.567143, abs=1e-3)


def test_touching_grid():
    d = D(4)
    r = R.forward_oracle(C.Lune, d)
    assert all(v == Verdict.INSIDE for v in R.sample_verdicts(C.Lune, d, 0.99 * r))
    assert Verdict.OUTSIDE in R.sample_verdicts(C.Lune, d, 1.01 * r)
    rep = R.containment_report(C.Lune, d, r)
    assert abs(rep.min_clearance) <= 2 * d.polyline().mean_segment


def test_result_to_dict():
    out = R.forward_radius(C.Sin, D(6), oracle=True).to_dict()
    assert set(out) >= {"direction", "class", "n", "closed_form", "oracle", "agree", "errata_note"}
    assert out["direction"] == "forward"
