"""Verification suites: closed forms against printed tables and sampling oracles.

Each suite yields :class:`CaseResult` rows. A row with an ``errata_note`` and
``errata=True`` documents a known disagreement between printed and computed
values; it is reported but does not count as a failure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np

from . import classes as C
from . import radii, series
from .domain import EpicycloidDomain
from .geometry import Verdict
from .inclusion import inclusion_constants


@dataclass
class CaseResult:
    suite: str
    case: str
    expected: object
    got: object
    tol: Optional[float]
    passed: bool
    errata_note: Optional[str] = None
    errata: bool = False

    def to_dict(self) -> dict:
        return {"suite": self.suite, "case": self.case, "expected": _jsonable(self.expected),
                "got": _jsonable(self.got), "tol": self.tol, "pass": self.passed,
                "errata": self.errata, "errata_note": self.errata_note}

    @property
    def counts_as_failure(self) -> bool:
        return not self.passed and not self.errata


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    return v


def _close(suite, case, expected, got, tol, note=None) -> CaseResult:
    return CaseResult(suite, case, expected, got, tol, abs(got - expected) <= tol, note)


def suite_table2(ns=radii.TABLE2_N) -> List[CaseResult]:
    out = []
    for c in C.BACKWARD_TABLE_CLASSES:
        for n in ns:
            r = radii.backward_radius(c, EpicycloidDomain(n))
            out.append(_close("table2", f"{c.label()} n={n}", radii.table2_printed(c, n),
                              r.closed_form, 1e-5, r.errata_note))
    return out


def suite_backward_oracle(ns=radii.TABLE2_N, samples: int = radii.ORACLE_SAMPLES,
                          tol: float = radii.ORACLE_TOL) -> List[CaseResult]:
    out = []
    for c in C.BACKWARD_TABLE_CLASSES:
        for n in ns:
            d = EpicycloidDomain(n)
            r = radii.backward_radius(c, d, oracle=True, tol=tol, samples=samples)
            note = r.errata_note
            if not r.agree:
                note = ((note + "; ") if note else "") + (
                    f"oracle {r.oracle:.6f} differs from the disk-bound root {r.closed_form:.6f}")
            out.append(_close("backward_oracle", f"{c.label()} n={n}", r.closed_form,
                              r.oracle, radii.AGREE_TOL, note))
            if c.tag == "RationalR" and n == 4:
                out.append(adjudicate_rational_r(r.oracle))
    return out


def adjudicate_rational_r(oracle: float, n: int = 4) -> CaseResult:
    cands = radii.rational_r_candidates(n)
    hits = [k for k, v in cands.items() if abs(v - oracle) <= radii.AGREE_TOL]
    passed = len(hits) == 1
    note = (f"oracle {oracle:.6f} matches the {hits[0]} form ({cands[hits[0]]:.6f})" if passed
            else f"oracle {oracle:.6f} matches {len(hits)} candidate forms")
    return CaseResult("backward_oracle", f"RationalR n={n} adjudication",
                      {k: round(v, 6) for k, v in cands.items()}, oracle, radii.AGREE_TOL,
                      passed, note)


def suite_limits() -> List[CaseResult]:
    out = []
    for res in radii.limit_table():
        row = res.row
        if row.consistent:
            out.append(CaseResult("limits", row.label, row.printed, res.computed, res.tol, res.agree))
        else:
            out.append(CaseResult("limits", row.label, row.printed, res.computed, res.tol,
                                  res.agree, row.note, errata=True))
    return out


def brute_inscribed(d: EpicycloidDomain, a: float, samples: int = 10 ** 5) -> float:
    t = np.linspace(-np.pi, np.pi, samples, endpoint=False)
    return float(np.sqrt(d.sigma(a, t).min()))


def suite_lemma1(ns=(4, 6, 8), centres: int = 50) -> List[CaseResult]:
    out = []
    for n in ns:
        d = EpicycloidDomain(n)
        for a in np.linspace(2 / (n + 1) + 0.01, 1.99, centres):
            out.append(_close("lemma1", f"n={n} a={a:.6f}", brute_inscribed(d, a),
                              d.inscribed_radius(float(a)), 1e-6))
    out.append(_close("lemma1", "n=4 a=1", 0.6, EpicycloidDomain(4).inscribed_radius(1.0), 1e-12))
    # the middle branch as printed is the squared distance; show it next to the brute force
    d, a = EpicycloidDomain(4), 1.2
    sq = float(d.sigma(a, math.pi / 3))
    brute = brute_inscribed(d, a)
    out.append(CaseResult("lemma1", "n=4 a=1.2 middle branch as printed", brute, sq, 1e-6,
                          abs(sq - brute) <= 1e-6,
                          f"printed sigma {sq:.6f}, implemented sqrt(sigma) {math.sqrt(sq):.6f}, "
                          f"brute force {brute:.6f}", errata=True))
    return out


def suite_coefficients(ns=(4, 6, 8), lemma_range=range(4, 65)) -> List[CaseResult]:
    out = []
    for n in ns:
        rep = series.coefficient_bounds(n)
        for i, (b, v) in enumerate(zip(rep.bounds, rep.extremal_values), start=2):
            case = f"n={n} a_{i}"
            if i == 4:
                out.append(CaseResult("coefficients", case, b, v, 0.0, v == b,
                                      f"printed bound {b}, extremal value {v}", errata=True))
            else:
                out.append(CaseResult("coefficients", case, b, v, 0.0, v == b))
    ok_ii = all(series.lemma21_condition("ii", **series.a4_parameters(n)) for n in lemma_range)
    ok_iii = all(series.lemma21_condition("iii", **series.a5_parameters(n)) for n in lemma_range)
    ok_poly = all(series.printed_reduced_polynomial(n) <= 0 for n in range(1, 65))
    out.append(CaseResult("coefficients", "lemma (ii) parameters n=4..64", True, ok_ii, None, ok_ii))
    out.append(CaseResult("coefficients", "lemma (iii) parameters n=4..64", True, ok_iii, None, ok_iii))
    out.append(CaseResult("coefficients", "printed reduced polynomial <= 0 n=1..64", True, ok_poly,
                          None, ok_poly))
    return out


def suite_inclusion(n: int = 8) -> List[CaseResult]:
    d = EpicycloidDomain(n)
    rep = inclusion_constants(d)
    out = [
        _close("inclusion", "alpha0", 1 - math.cos(math.pi / 9), rep.alpha0, 1e-4),
        _close("inclusion", "tan beta0", 5.0273, rep.tan_beta0, 5e-4),
        _close("inclusion", "cassinian c", 77 / 81, rep.cassinian_c_max, 1e-4),
        _close("inclusion", "janowski disk radius", 7 / 9, rep.janowski_disk_radius, 1e-4),
    ]
    t = np.linspace(-np.pi, np.pi, 10 ** 6, endpoint=False)
    w = d.phi(np.exp(1j * t))
    out.append(_close("inclusion", "alpha0 vs grid", float(w.real.min()), rep.alpha0, 1e-8))
    out.append(_close("inclusion", "beta0 vs grid", float(np.abs(np.angle(w)).max()), rep.beta0, 1e-8))
    return out


def suite_domain(ns=(4, 6, 8, 20), grid: int = 10 ** 5) -> List[CaseResult]:
    out = []
    for n in ns:
        d = EpicycloidDomain(n)
        t = np.linspace(-np.pi, np.pi, grid, endpoint=False)
        rho = np.abs(d.phi(np.exp(1j * t)) - 1)
        lo, hi = (n - 1) / (n + 1), 1.0
        out.append(CaseResult("domain", f"n={n} modulus bounds", [lo, hi],
                              [float(rho.min()), float(rho.max())], 1e-9,
                              bool(rho.min() >= lo - 1e-9 and rho.max() <= hi + 1e-9)))
        cusp = abs(d.cusp_value(math.pi / (n - 1)))
        out.append(_close("domain", f"n={n} modulus at cusp", lo, cusp, 1e-9))
        out.append(_close("domain", f"n={n} modulus at t=0", hi, abs(d.cusp_value(0.0)), 1e-9))
        h = 1e-6
        worst = 0.0
        for tk in d.cusps().angles:
            bp, bm = d.boundary(tk + h), d.boundary(tk - h)
            worst = max(worst, abs(bp.x - bm.x) / (2 * h), abs(bp.y - bm.y) / (2 * h))
        out.append(_close("domain", f"n={n} cusp derivative", 0.0, worst, 1e-9))
        out.append(_close("domain", f"n={n} hausdorff gap", 2 / (n + 1),
                          d.hausdorff_gap_to_unit_circle(), 1e-9))
    return out


def suite_unit_radius(ns=(4, 6, 8), samples: int = 4096) -> List[CaseResult]:
    out = []
    t = np.linspace(-np.pi, np.pi, samples, endpoint=False)
    for n in ns:
        d = EpicycloidDomain(n)
        for c in (C.SG, C.Cos, C.Cosh):
            verdicts = d.classify(C.phi_of(c, np.exp(1j * t)))
            bad = sum(v == Verdict.OUTSIDE for v in verdicts)
            out.append(CaseResult("unit_radius", f"{c.label()} n={n}", 0, bad, None, bad == 0))
    return out


def suite_touching(n: int = 4, samples: int = radii.ORACLE_SAMPLES) -> List[CaseResult]:
    out = []
    d = EpicycloidDomain(n)
    for c in radii.TOUCHING_CLASSES:
        r = radii.forward_oracle(c, d, samples=samples)
        inner = radii.sample_verdicts(c, d, 0.99 * r, samples)
        outer = radii.sample_verdicts(c, d, 1.01 * r, samples)
        n_in = sum(v == Verdict.INSIDE for v in inner)
        n_out = sum(v == Verdict.OUTSIDE for v in outer)
        out.append(CaseResult("touching", f"{c.label()} n={n} 0.99 r*", samples, n_in, None,
                              n_in == samples))
        out.append(CaseResult("touching", f"{c.label()} n={n} 1.01 r*", ">=1", n_out, None, n_out >= 1))
    return out


SUITES: Dict[str, Callable[[], List[CaseResult]]] = {
    "table2": suite_table2,
    "backward_oracle": suite_backward_oracle,
    "limits": suite_limits,
    "lemma1": suite_lemma1,
    "coefficients": suite_coefficients,
    "inclusion": suite_inclusion,
    "domain": suite_domain,
    "unit_radius": suite_unit_radius,
    "touching": suite_touching,
}


def run_all(names=None) -> List[CaseResult]:
    out = []
    for name in (names or SUITES):
        out.extend(SUITES[name]())
    return out
