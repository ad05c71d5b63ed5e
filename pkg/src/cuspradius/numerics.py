"""Scalar numerical kernel: bracketed roots, Lambert W and complex branches.

Branch conventions used everywhere in the package:

* ``csqrt`` returns the root with argument in (-pi/2, pi/2].
* ``clog`` returns the logarithm with imaginary part in (-pi, pi].
* ``casin(z) = -i * clog(i z + csqrt(1 - z**2))``.

Signed zeros are normalised before evaluation, so ``-1 - 0j`` lies on the
same side of every cut as ``-1 + 0j``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import BranchPole, NoRoot, NoSignChange, OutOfDomain

DEFAULT_TOL = 1e-12
DEFAULT_GRID = 4096

_INV_E = math.exp(-1.0)


@dataclass(frozen=True)
class RootProblem:
    """A scalar equation ``f(x) = 0`` bracketed by ``[lo, hi]``."""

    f: Callable[[float], float]
    lo: float
    hi: float
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if not self.tol > 0:
            raise ValueError("tol must be positive")

    def solve(self) -> float:
        return find_root_bracketed(self.f, self.lo, self.hi, self.tol)


def find_root_bracketed(f: Callable[[float], float], lo: float, hi: float,
                        tol: float = DEFAULT_TOL, maxiter: int = 400) -> float:
    """Root of ``f`` in ``[lo, hi]`` by bisection with safeguarded secant steps.

    A secant (regula falsi) step is taken whenever it lands strictly inside the
    bracket and the previous step at least halved the bracket; otherwise the
    bracket is bisected. The iteration stops once the bracket is no wider than
    ``tol`` and returns the endpoint with the smaller residual.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise ValueError("tol must be positive")
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0:
        raise NoSignChange(f"f({a})={fa:g} and f({b})={fb:g} have the same sign")

    prev_width = 2.0 * (b - a)
    for _ in range(maxiter):
        width = b - a
        if width <= tol:
            break
        x = b - fb * (b - a) / (fb - fa)
        if not (a < x < b) or width > 0.5 * prev_width:
            x = 0.5 * (a + b)
        else:
            # keep the step at least tol/2 away from the ends so the bracket closes
            x = min(max(x, a + 0.5 * tol), b - 0.5 * tol)
        prev_width = width
        fx = f(x)
        if fx == 0.0:
            return x
        if fa * fx < 0:
            b, fb = x, fx
        else:
            a, fa = x, fx
    return a if abs(fa) <= abs(fb) else b


def smallest_positive_root(f: Callable[[float], float], hi: float = 1.0,
                           grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL,
                           eps: float = 1e-9,
                           satisfied_sign: Optional[int] = None) -> float:
    """Smallest root of ``f`` in ``[eps, hi]``, found by a uniform scan.

    The scan looks for the first sign change and refines it with
    :func:`find_root_bracketed`. With no sign change the radius saturates
    and ``hi`` is returned.

    ``satisfied_sign`` (+1 or -1) names the sign of ``f`` on the side where the
    underlying constraint holds; if given and ``f(eps)`` has the other sign,
    :class:`NoRoot` is raised because the parameters admit no positive radius.
    """
    if hi > 1.0:
        raise ValueError("hi must be <= 1")
    if grid < 64:
        raise ValueError("grid must be >= 64")
    if not eps < hi:
        raise ValueError("eps must be below hi")
    x0 = eps
    f0 = f(x0)
    if satisfied_sign is not None:
        if f0 == 0.0 or math.copysign(1.0, f0) != math.copysign(1.0, satisfied_sign):
            raise NoRoot(f"constraint already violated at r={eps:g} (f={f0:g})")
    elif f0 == 0.0:
        return x0
    step = (hi - eps) / grid
    for i in range(1, grid + 1):
        x1 = hi if i == grid else eps + i * step
        f1 = f(x1)
        if f1 == 0.0:
            return x1
        if f0 * f1 < 0:
            return find_root_bracketed(f, x0, x1, tol)
        x0, f0 = x1, f1
    return hi


def lambert_w0(x: float, tol: float = 1e-15, maxiter: int = 64) -> float:
    """Principal branch of the Lambert W function for real ``x >= -1/e``.

    Halley iteration seeded with ``log1p(x)`` for ``x >= 0`` and with the
    branch-point series in ``p = sqrt(2 (e x + 1))`` for ``x < 0``.
    """
    x = float(x)
    if not math.isfinite(x):
        raise OutOfDomain(f"lambert_w0 needs a finite argument, got {x}")
    if x < -_INV_E:
        # allow a few ulps of rounding at the branch point itself
        if x < -_INV_E * (1 + 4e-16):
            raise OutOfDomain(f"lambert_w0 is real only for x >= -1/e, got {x}")
        return -1.0
    if x == 0.0:
        return 0.0
    if x >= 0:
        w = math.log1p(x)
    else:
        p = math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3
    for _ in range(maxiter):
        ew = math.exp(w)
        fw = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        dw = fw / (ew * wp1 - (w + 2.0) * fw / (2.0 * wp1))
        w -= dw
        if abs(dw) <= tol * (1.0 + abs(w)):
            break
    return w


def lambert_w0_complex(z: complex, tol: float = 1e-15, maxiter: int = 64) -> complex:
    """Principal branch of Lambert W at a complex argument (Halley iteration)."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise OutOfDomain(f"lambert_w0_complex needs a finite argument, got {z}")
    if z == 0:
        return 0j
    if abs(z + _INV_E) <= 0.5:
        # branch-point expansion; complex start for real z < -1/e
        p = csqrt(2.0 * (math.e * z + 1.0))
        w = -1.0 + p - p * p / 3.0
    elif abs(z) < 3.0 and abs(1.0 + z) >= 0.5:
        w = clog(1.0 + z)
    else:
        lz = clog(z)
        w = lz - clog(lz)
    for _ in range(maxiter):
        ew = cmath.exp(w)
        fw = w * ew - z
        wp1 = w + 1.0
        if wp1 == 0:
            break
        dw = fw / (ew * wp1 - (w + 2.0) * fw / (2.0 * wp1))
        w -= dw
        if abs(dw) <= tol * (1.0 + abs(w)):
            break
    return w


def _unsign_zero(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise OutOfDomain(f"non-finite complex value {z}")
    return complex(z.real + 0.0, z.imag + 0.0)


def csqrt(z: complex) -> complex:
    return cmath.sqrt(_unsign_zero(z))


def clog(z: complex) -> complex:
    z = _unsign_zero(z)
    if z == 0:
        raise BranchPole("log(0) is undefined")
    return cmath.log(z)


def casin(z: complex) -> complex:
    z = _unsign_zero(z)
    return -1j * clog(1j * z + csqrt(1.0 - z * z))


_PRINCIPAL = {"sqrt": csqrt, "log": clog, "arcsin": casin}


def complex_principal(fn: str, z: complex) -> complex:
    """Dispatch to the principal-branch ``sqrt``, ``log`` or ``arcsin``."""
    try:
        return _PRINCIPAL[fn](z)
    except KeyError:
        raise ValueError(f"unknown function {fn!r}; expected one of {sorted(_PRINCIPAL)}") from None


def _default_guesses() -> list:
    radii = (0.25, 0.5, 0.75, 1.0)
    return [r * cmath.exp(0.5j * math.pi * k + 0.25j * math.pi) for r in radii for k in range(4)]


def complex_newton_roots(g: Callable[[complex], complex],
                         dg: Optional[Callable[[complex], complex]] = None,
                         guesses: Optional[Iterable[complex]] = None,
                         tol: float = 1e-13, maxiter: int = 100) -> list:
    """Distinct roots of an analytic ``g`` reached by damped Newton restarts.

    Without ``dg`` the derivative is taken by a central difference, which is
    adequate for analytic ``g``. The step is halved until ``|g|`` decreases.
    """
    if dg is None:
        def dg(z, h=1e-7):
            return (g(z + h) - g(z - h)) / (2 * h)
    roots: list = []
    for z in (guesses if guesses is not None else _default_guesses()):
        z = complex(z)
        try:
            gz = g(z)
            for _ in range(maxiter):
                d = dg(z)
                if d == 0:
                    break
                step = gz / d
                lam = 1.0
                for _ in range(40):
                    znew = z - lam * step
                    gnew = g(znew)
                    if abs(gnew) < abs(gz):
                        break
                    lam *= 0.5
                z, gz = znew, gnew
                if abs(lam * step) <= tol * (1 + abs(z)):
                    break
        except (OverflowError, ZeroDivisionError, ValueError):
            continue
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            continue
        if abs(gz) > 1e-9 * (1 + abs(z)):
            continue
        if all(abs(z - r) > 1e-8 * (1 + abs(r)) for r in roots):
            roots.append(z)
    return roots


def smallest_modulus_root(g: Callable[[complex], complex],
                          dg: Optional[Callable[[complex], complex]] = None,
                          guesses: Optional[Iterable[complex]] = None) -> complex:
    """Root of smallest modulus among the damped-Newton restarts."""
    roots = complex_newton_roots(g, dg, guesses)
    if not roots:
        raise NoRoot("complex Newton did not converge from any starting point")
    return min(roots, key=abs)
