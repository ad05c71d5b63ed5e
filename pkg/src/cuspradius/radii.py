"""Radius problems between S*_nL and the comparator classes.

Forward radius: the largest r such that class-C behaviour on |z| < r forces
zf'/f into the epicycloid domain. Backward radius: the largest r such that
zf'/f in the domain forces class-C behaviour on |z| < r.

Every closed form has a sampling oracle beside it. The oracle bisects on r and
tests a sampled image curve against the target region, so it is independent
of the algebra that produced the closed form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from . import classes as C
from .classes import ComparatorClass, disk_threshold, inside_mask, phi_of, region_polyline
from .domain import DEFAULT_BOUNDARY_SAMPLES, EpicycloidDomain
from .errors import NotInBackwardTable, NotMaMinda, UnsupportedClass, VerificationFailed
from .geometry import ContainmentReport, Verdict
from .inclusion import janowski_inclusion
from .numerics import casin, clog, csqrt, lambert_w0_complex, smallest_modulus_root, \
    smallest_positive_root

ORACLE_SAMPLES = 2048
ORACLE_TOL = 1e-5
AGREE_TOL = 1e-4
R_MAX = 1 - 1e-9
LIMIT_N = 10 ** 6


@dataclass
class RadiusResult:
    direction: str  # "forward" | "backward"
    cls: ComparatorClass
    n: int
    closed_form: float
    closed_form_complex: Optional[complex] = None
    oracle: Optional[float] = None
    agree: Optional[bool] = None
    errata_note: Optional[str] = None
    tol: float = AGREE_TOL

    def attach_oracle(self, value: float, tol: float = None) -> "RadiusResult":
        if tol is not None:
            self.tol = tol
        self.oracle = value
        self.agree = abs(self.closed_form - value) <= self.tol
        return self

    def to_dict(self) -> dict:
        z = self.closed_form_complex
        return {
            "direction": self.direction,
            "class": self.cls.to_dict(),
            "n": self.n,
            "closed_form": self.closed_form,
            "closed_form_complex": None if z is None else [z.real, z.imag],
            "oracle": self.oracle,
            "agree": self.agree,
            "tol": self.tol,
            "errata_note": self.errata_note,
        }


def _clamp(x: float) -> float:
    return min(max(x, 0.0), 1.0)


def _u(d: EpicycloidDomain, theta: float = None) -> complex:
    """phi_nL(e^{i theta}) - 1 at the primary cusp by default."""
    if theta is None:
        theta = math.pi / (d.n - 1)
    return d.cusp_value(theta)


# -- forward closed forms -------------------------------------------------------

def _forward(c: ComparatorClass, d: EpicycloidDomain):
    """(closed form, complex value or None, errata note or None)."""
    n = d.n
    t = c.tag
    p = dict(c.params)
    u = _u(d)
    if t == "MBeta":
        b = p["beta"]
        return (n - 1) / ((2 * b - 1) * n + 2 * b - 3), None, None
    if t == "BS":
        a = p["alpha"]
        r = (math.sqrt((n + 1) ** 2 + 4 * a * (n - 1) ** 2) - (n + 1)) / (2 * a * (n - 1))
        printed = (1 + n + math.sqrt(1 + 4 * a + 2 * n - 8 * a * n + n * n + 4 * a * n * n)) / (2 * a * (1 - n))
        return r, None, (f"printed closed form takes the negative root ({printed:.6f}); "
                         "the positive root of r/(1 - alpha r^2) = (n-1)/(n+1) is used")
    if t == "W":
        return (math.sqrt(2 * (1 + n * n)) - n - 1) / (n - 1), None, None
    if t == "F1":
        r = (math.sqrt(5 * n * n + 6 * n + 5) - 2 * (n + 1)) / (n - 1)
        return r, None, ("printed numerator 2(1+n) - sqrt(5n^2+6n+5) has the wrong sign; "
                         "4r/(1-r^2) = (n-1)/(n+1) gives the value used")
    if t == "F2":
        r = (math.sqrt(17 * n * n + 10 * n + 9) - 3 * (n + 1)) / (4 * n)
        return r, None, ("printed numerator 3(n+1) - sqrt(17n^2+10n+9) has the wrong sign; "
                         "(3r+r^2)/(1-r^2) = (n-1)/(n+1) gives the value used")
    if t == "SLalpha":
        a = p["alpha"]
        if a >= 2 / (n + 1):
            return 1.0, None, None
        r = (n - 1) * (n + 3 - 2 * a * (n + 1)) / ((n + 1) ** 2 * (1 - a) ** 2)
        printed = (n - 1) * (2 * a * (n + 1) - n - 3) / ((n + 1) ** 2 * (a - 1) ** 2)
        return r, None, (f"printed numerator 2 alpha (n+1) - n - 3 gives {printed:.6f} < 0; "
                         "the sign is reversed in the value used")
    if t == "Cassinian":
        cc = p["c"]
        if cc <= 1 - 4 / (n + 1) ** 2:
            return 1.0, None, None
        return (n * n + 2 * n - 3) / (cc * (n + 1) ** 2), None, None
    if t == "AlphaExp":
        a = p["alpha"]
        z = clog((n + 1 + (n + 1) * u - a * (n + 1)) / ((n + 1) * (1 - a)))
        note = None
        if a:
            note = "printed closed form adds the alpha terms; solving the touching equation subtracts them"
        return abs(z), z, note
    if t == "EL":
        a = p["alpha"]
        pp = (a + u) / (1 - a)
        w = pp - lambert_w0_complex(a / (1 - a) * cmath.exp(pp))
        return abs(w), w, ("printed closed form omits the division by (n+1)(1-alpha); "
                           "the touching equation is solved directly")
    if t == "Cardioid":
        z = csqrt(1 + 1.5 * u) - 1
        return abs(z), z, None
    if t == "Lune":
        z = (u * u + 2 * u) / (2 * (1 + u))
        return abs(z), z, ("printed closed form is truncated; r + sqrt(1+r^2) = phi_nL(gamma) "
                           "is solved directly")
    if t == "RationalR":
        k = C.K_R
        s = csqrt(k * k * (1 + u) ** 2 + 4 * k * k * u)
        z = min(((-k * (1 + u) + s) / 2, (-k * (1 + u) - s) / 2), key=abs)
        return abs(z), z, None
    if t == "RL":
        q = (C.SQRT2 - 2 / (n + 1)) / (C.SQRT2 - 1)
        return (q * q - 1) / (1 + C.C_RL * q * q), None, None
    if t == "Lim":
        z = csqrt(2 * (1 + u)) - C.SQRT2
        return abs(z), z, None
    if t == "ZExp":
        z = lambert_w0_complex(u)
        return abs(z), z, None
    if t == "Car":
        z = csqrt(1 + 2 * u) - 1
        return abs(z), z, None
    if t in ("Sin", "Nephroid"):
        z = _parity_root(t, d)
        return abs(z), z, None
    if t in ("Janowski", "OrderAlpha"):
        if t == "OrderAlpha":
            A, B = 1 - 2 * p["alpha"], -1.0
        else:
            A, B = p["A"], p["B"]
        if B > -1 and janowski_inclusion(d, A, B):
            return 1.0, None, None
        z = u / (A - B * (1 + u))
        return abs(z), z, None
    if t in ("SG", "Cos", "Cosh"):
        return 1.0, None, None
    raise UnsupportedClass(f"no forward radius for {c.label()}")


def parity_angle(n: int) -> float:
    """Cusp angle used for the sine and nephroid classes, n = 2k."""
    k = n // 2
    return (k if k % 2 else k - 1) * math.pi / (n - 1)


def _parity_root(tag: str, d: EpicycloidDomain) -> complex:
    u = _u(d, parity_angle(d.n))
    if tag == "Sin":
        return casin(u)
    g = lambda r: r - r ** 3 / 3 - u  # noqa: E731
    dg = lambda r: 1 - r * r  # noqa: E731
    guesses = [abs(u), u] + [0.25 * (1 + k) * cmath.exp(0.5j * math.pi * m)
                             for k in range(4) for m in range(4)]
    return smallest_modulus_root(g, dg, guesses)


def forward_radius(c: ComparatorClass, d: EpicycloidDomain, oracle: bool = False,
                   tol: float = ORACLE_TOL, samples: int = ORACLE_SAMPLES,
                   agree_tol: float = AGREE_TOL) -> RadiusResult:
    value, z, note = _forward(c, d)
    clamped = _clamp(value)
    res = RadiusResult("forward", c, d.n, clamped, z, errata_note=note, tol=agree_tol)
    if oracle or clamped != value:
        res.attach_oracle(forward_oracle(c, d, tol, samples))
    return res


# -- forward oracle ----------------------------------------------------------

def _disk_image(c: ComparatorClass, r: float):
    """Centre and radius bounding zf'/f on |z| = r, for the classes given by a disk bound."""
    t = c.tag
    if t == "W":
        return 1.0, 2 * r / (1 - r * r)
    if t == "F1":
        return 1.0, 4 * r / (1 - r * r)
    if t == "F2":
        return 1.0, (3 * r + r * r) / (1 - r * r)
    if t == "BS":
        return 1.0, r / (1 - c.alpha * r * r)
    if t == "MBeta":
        b = c.beta
        return (1 + (1 - 2 * b) * r * r) / (1 - r * r), 2 * r * (b - 1) / (1 - r * r)
    return None


def inner_curve(c: ComparatorClass, r: float, t: np.ndarray) -> np.ndarray:
    """Boundary of the reachable set of zf'/f on |z| = r for class C."""
    disk = _disk_image(c, r)
    if disk is not None:
        centre, rho = disk
        return centre + rho * np.exp(1j * t)
    return phi_of(c, r * np.exp(1j * t))


def _grid(samples: int, anchor: float = 0.0) -> np.ndarray:
    return anchor + 2 * np.pi * np.arange(samples) / samples


def forward_contained(c: ComparatorClass, d: EpicycloidDomain, r: float,
                      samples: int = ORACLE_SAMPLES, anchor: float = 0.0,
                      outer_samples: int = DEFAULT_BOUNDARY_SAMPLES) -> bool:
    """All samples strictly inside and no chord of the sampled curve crossing the boundary."""
    w = inner_curve(c, r, _grid(samples, anchor))
    if not np.all(np.isfinite(w)):
        return False
    poly = d.polyline(outer_samples)
    if not poly.inside_mask(w).all():
        return False
    return not poly.crossed_by(w)


def _bisect(contained, tol: float) -> float:
    if contained(R_MAX):
        return 1.0
    lo, hi = 0.0, R_MAX
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if contained(mid):
            lo = mid
        else:
            hi = mid
    return lo


def forward_oracle(c: ComparatorClass, d: EpicycloidDomain, tol: float = ORACLE_TOL,
                   samples: int = ORACLE_SAMPLES) -> float:
    """Sup of r for which the sampled reachable curve stays in the domain."""
    if samples < ORACLE_SAMPLES:
        raise ValueError(f"samples must be >= {ORACLE_SAMPLES}")
    return _bisect(lambda r: forward_contained(c, d, r, samples), tol)


def touching_angle(c: ComparatorClass, d: EpicycloidDomain, r: float,
                   dense: int = 1 << 16) -> float:
    """Parameter t at which phi_C(r e^{it}) comes closest to (or goes furthest past) the boundary."""
    poly = d.polyline()
    t = _grid(dense)
    clear = poly.signed_clearance(inner_curve(c, r, t))
    i = int(np.argmin(clear))
    h = 2 * np.pi / dense
    f = lambda s: float(poly.signed_clearance(inner_curve(c, r, np.asarray([s])))[0])  # noqa: E731
    res = minimize_scalar(f, bounds=(t[i] - h, t[i] + h), method="bounded",
                          options={"xatol": 1e-12})
    best = res.x if res.fun <= clear[i] else t[i]
    return float(math.remainder(best, 2 * math.pi))


def containment_report(c: ComparatorClass, d: EpicycloidDomain, r: float,
                       samples: int = ORACLE_SAMPLES) -> ContainmentReport:
    theta = touching_angle(c, d, r)
    w = inner_curve(c, r, _grid(samples, theta))
    clear = float(d.polyline().signed_clearance(w).min())
    return ContainmentReport(r, clear, theta, forward_contained(c, d, r, samples, theta))


def sample_verdicts(c: ComparatorClass, d: EpicycloidDomain, r: float,
                    samples: int = ORACLE_SAMPLES, anchor: Optional[float] = None) -> List[Verdict]:
    """Strict per-sample verdicts of the reachable curve at radius r.

    With ``anchor=None`` the grid is anchored at :func:`touching_angle`, so one
    sample sits where the curve is closest to (or furthest past) the boundary.
    """
    if anchor is None:
        anchor = touching_angle(c, d, r)
    w = inner_curve(c, r, _grid(samples, anchor))
    return d.classify(w, band=0)


# -- backward ------------------------------------------------------------------

def backward_equation(c: ComparatorClass, n: int):
    """(f, satisfied_sign) for the root equation of the backward radius."""
    th = disk_threshold(c)
    k = th.value
    if th.kind == "symmetric":
        return (lambda r: r ** n + n * r - (n + 1) * k), -1
    return (lambda r: r ** n - n * r + (n + 1) * k), +1


def _backward_closed(c: ComparatorClass, d: EpicycloidDomain) -> float:
    f, sign = backward_equation(c, d.n)
    return smallest_positive_root(f, hi=1.0, satisfied_sign=sign)


BACKWARD_ERRATA = {
    "RationalR": ("printed equation r^n - rn - (n+1)(2 sqrt2 + 3) = 0 has no root in (0,1); "
                  "the symmetric form r^n + nr - (n+1)(3 - 2 sqrt2) = 0 reproduces the table, "
                  "the left-edge form r^n - nr + (n+1)(3 - 2 sqrt2) = 0 gives {left:.6f}"),
}


def rational_r_candidates(n: int) -> dict:
    """Roots of the two competing equation forms for the rational class."""
    k = 3 - 2 * math.sqrt(2)
    sym = smallest_positive_root(lambda r: r ** n + n * r - (n + 1) * k, satisfied_sign=-1)
    left = smallest_positive_root(lambda r: r ** n - n * r + (n + 1) * k, satisfied_sign=+1)
    return {"symmetric": sym, "left_edge": left}


def backward_radius(c: ComparatorClass, d: EpicycloidDomain, oracle: bool = False,
                    tol: float = ORACLE_TOL, samples: int = ORACLE_SAMPLES,
                    agree_tol: float = AGREE_TOL) -> RadiusResult:
    try:
        value = _backward_closed(c, d)
    except NotInBackwardTable:
        raise UnsupportedClass(f"no backward radius for {c.label()}") from None
    note = None
    if c.tag == "RationalR":
        note = BACKWARD_ERRATA["RationalR"].format(left=rational_r_candidates(d.n)["left_edge"])
    res = RadiusResult("backward", c, d.n, _clamp(value), errata_note=note, tol=agree_tol)
    if oracle:
        res.attach_oracle(backward_oracle(c, d, tol, samples))
    return res


def backward_contained(c: ComparatorClass, d: EpicycloidDomain, r: float,
                       samples: int = ORACLE_SAMPLES) -> bool:
    w = d.phi(r * np.exp(1j * _grid(samples)))
    if not inside_mask(c, w).all():
        return False
    if C.has_inequality(c):
        return True
    return not region_polyline(c).crossed_by(w)


def backward_oracle(c: ComparatorClass, d: EpicycloidDomain, tol: float = ORACLE_TOL,
                    samples: int = ORACLE_SAMPLES) -> float:
    """Sup of r with phi_nL(r e^{it}) inside the class region at every sample."""
    if samples < ORACLE_SAMPLES:
        raise ValueError(f"samples must be >= {ORACLE_SAMPLES}")
    return _bisect(lambda r: backward_contained(c, d, r, samples), tol)


# -- parity radii, convexity bound -------------------------------------------------------

def parity_radius_sin_ne(c: ComparatorClass, d: EpicycloidDomain, oracle: bool = True,
                         tol: float = ORACLE_TOL, samples: int = ORACLE_SAMPLES,
                         agree_tol: float = 1e-3) -> RadiusResult:
    if c.tag not in ("Sin", "Nephroid"):
        raise UnsupportedClass(f"parity radius only for Sin and Nephroid, got {c.label()}")
    z = _parity_root(c.tag, d)
    res = RadiusResult("forward", c, d.n, _clamp(abs(z)), z, tol=agree_tol)
    if oracle:
        res.attach_oracle(forward_oracle(c, d, tol, samples))
        if not res.agree:
            res.errata_note = (f"modulus of the complex touching solution ({abs(z):.6f}) "
                               f"differs from the containment radius ({res.oracle:.6f})")
    return res


def strohhacker_bound(d: EpicycloidDomain) -> float:
    n = d.n
    g = d.gamma
    gn = cmath.exp(1j * n * math.pi / (n - 1))
    return abs((gn + n * g) / (1 + gn + n + n * g))


def unit_radius_classes(d: EpicycloidDomain, samples: int = 4096) -> List[ComparatorClass]:
    """The classes whose whole region lies in the domain, checked by sampling."""
    out = []
    t = _grid(samples)
    for c in (C.SG, C.Cos, C.Cosh):
        verdicts = d.classify(phi_of(c, np.exp(1j * t)))
        bad = sum(v == Verdict.OUTSIDE for v in verdicts)
        if bad:
            raise VerificationFailed(f"{c.label()}: {bad} boundary samples outside for n={d.n}")
        out.append(c)
    return out


# -- tables ------------------------------------------------------------------------

TABLE2_N = (4, 6, 8)

# printed backward radii, keyed by class tag
TABLE2 = {
    "SLalpha": (0.501903, 0.48118, 0.465714),
    "RL": (0.353501, 0.333349, 0.32165),
    "RationalR": (0.213942, 0.200158, 0.193019),
    "Sin": (0.892917, 0.895669, 0.895131),
    "SG": (0.554083, 0.535219, 0.519222),
    "Nephroid": (0.752971, 0.748475, 0.738894),
    "ZExp": (0.472288, 0.43025, 0.413972),
    "ArcSinh": (0.921471, 0.924325, 0.924715),
}


def table2_printed(c: ComparatorClass, n: int) -> float:
    return TABLE2[c.tag][TABLE2_N.index(n)]


@dataclass(frozen=True)
class LimitRow:
    label: str
    cls: ComparatorClass
    printed: float
    printed_text: str
    consistent: bool = True
    note: str = ""


_S2 = math.sqrt(2)

TABLE3 = (
    LimitRow("W", C.W, _S2 - 1, "sqrt2 - 1"),
    LimitRow("F1", C.F1, math.sqrt(5) - 2, "sqrt5 - 2"),
    LimitRow("F2", C.F2, (math.sqrt(17) - 3) / 4, "(sqrt17 - 3)/4"),
    LimitRow("RL", C.RL, 1.0, "1"),
    LimitRow("C", C.Cardioid, math.sqrt(2.5) - 1, "sqrt(5/2) - 1"),
    LimitRow("R", C.RationalR, -1 - _S2 + math.sqrt(6 + 4 * _S2), "-1 - sqrt2 + sqrt(6 + 4 sqrt2)"),
    LimitRow("lune", C.Lune, 0.75, "3/4"),
    LimitRow("lim", C.Lim, 2 - _S2, "2 - sqrt2"),
    LimitRow("ZExp", C.ZExp, 0.567143, "0.567143"),
    LimitRow("M(beta=2)", C.MBeta(2.0), 1 / 3, "1/(2 beta - 1)"),
    LimitRow("BS(alpha=1)", C.BS(1.0), (1 + math.sqrt(5)) / 2, "(1 + sqrt(1 + 4 alpha))/(2 alpha)",
             False, "printed value is the modulus of the negative root; the positive root is (sqrt5 - 1)/2"),
    LimitRow("SL*(alpha=1/4)", C.SLalpha(0.25), (2 * 0.25 - 1) / (0.25 - 1) ** 2,
             "(2 alpha - 1)/(alpha - 1)^2", False,
             "printed value has the opposite sign; the limit is (1 - 2 alpha)/(1 - alpha)^2"),
    LimitRow("AlphaExp(alpha=0)", C.AlphaExp(0.0), math.log(2), "log((alpha - 2)/(alpha - 1))"),
    LimitRow("S*(alpha=1/4)", C.OrderAlpha(0.25), 1 / (3 - 0.5), "1/(3 - 2 alpha)"),
    LimitRow("S*[1-alpha,0](alpha=1/2)", C.janowski_shifted(0.5), 1 / (0.5 - 1), "1/(alpha - 1)", False,
             "printed value is negative; the limit 1/(1 - alpha) exceeds 1 and the radius is 1"),
    LimitRow("S*[alpha,-alpha](alpha=1/2)", C.janowski_symmetric(0.5), 1 / 1.5, "1/(3 alpha)"),
    LimitRow("S*_M(M=2)", C.janowski_m(2.0), 2 / 4, "M/(3M - 2)"),
)


@dataclass
class LimitResult:
    row: LimitRow
    computed: float
    agree: bool
    tol: float = 1e-3

    def to_dict(self) -> dict:
        return {"label": self.row.label, "class": self.row.cls.to_dict(), "printed": self.row.printed,
                "printed_text": self.row.printed_text, "computed": self.computed,
                "agree": self.agree, "consistent_row": self.row.consistent,
                "errata_note": self.row.note or None, "tol": self.tol}


def limit_radius(c: ComparatorClass, n: int = LIMIT_N) -> float:
    """Forward closed form at large n (the limiting disk |w - 1| < 1)."""
    return forward_radius(c, EpicycloidDomain(n)).closed_form


def limit_table(n: int = LIMIT_N, tol: float = 1e-3) -> List[LimitResult]:
    out = []
    for row in TABLE3:
        value = limit_radius(row.cls, n)
        out.append(LimitResult(row, value, abs(value - row.printed) <= tol, tol))
    return out


FORWARD_CLASSES = (
    C.MBeta(2.0), C.BS(0.5), C.W, C.F1, C.F2, C.SLalpha(0.0), C.Cassinian(1.0),
    C.AlphaExp(0.0), C.EL(0.5), C.Cardioid, C.Lune, C.RationalR, C.RL, C.Lim, C.ZExp, C.Car,
    C.Sin, C.Nephroid, C.OrderAlpha(0.0), C.janowski_symmetric(0.5), C.janowski_shifted(0.5),
    C.janowski_m(2.0),
)

TOUCHING_CLASSES = (C.Cardioid, C.Lune, C.RationalR, C.RL, C.Lim, C.ZExp, C.Car)


def is_forward_supported(c: ComparatorClass) -> bool:
    try:
        _forward(c, EpicycloidDomain(4))
    except (UnsupportedClass, NotMaMinda):
        return False
    return True
