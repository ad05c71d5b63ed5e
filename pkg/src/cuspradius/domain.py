"""The epicycloid domain: image of the unit disk under

    phi(z) = 1 + n z / (n + 1) + z**n / (n + 1),    n even, n >= 4.

The boundary phi(e^{it}) has n - 1 inward cusps at t = (2k - 1) pi / (n - 1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List

import numpy as np

from .errors import OutOfRange
from .geometry import ClosedPolyline, Verdict
from .numerics import find_root_bracketed

DEFAULT_BOUNDARY_SAMPLES = 8192


def ipow(z, n: int):
    """``z**n`` for a non-negative integer ``n`` by repeated squaring."""
    result = np.ones_like(z) if isinstance(z, np.ndarray) else 1.0 + 0j
    base = z
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


@dataclass(frozen=True)
class BoundaryPoint:
    t: float
    x: float
    y: float

    @property
    def w(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class CuspSet:
    angles: tuple
    primary_cusp: complex

    def __len__(self):
        return len(self.angles)


@dataclass(frozen=True)
class EpicycloidDomain:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise TypeError(f"n must be an integer, got {self.n!r}")
        if self.n < 4 or self.n % 2:
            raise ValueError(f"n must be even and >= 4, got {self.n}")

    # -- the map and its boundary -------------------------------------------

    def phi(self, z):
        n = self.n
        return 1 + n * z / (n + 1) + ipow(z, n) / (n + 1)

    def boundary(self, t: float) -> BoundaryPoint:
        n = self.n
        x = 1 + n / (n + 1) * math.cos(t) + math.cos(n * t) / (n + 1)
        y = n / (n + 1) * math.sin(t) + math.sin(n * t) / (n + 1)
        return BoundaryPoint(t, x, y)

    def boundary_derivative(self, t: float) -> tuple:
        n = self.n
        dx = -n / (n + 1) * (math.sin(t) + math.sin(n * t))
        dy = n / (n + 1) * (math.cos(t) + math.cos(n * t))
        return dx, dy

    def boundary_samples(self, samples: int = DEFAULT_BOUNDARY_SAMPLES) -> tuple:
        """Uniform parameters on [-pi, pi) and the matching boundary points."""
        t = np.linspace(-np.pi, np.pi, samples, endpoint=False)
        n = self.n
        w = 1 + (n * np.exp(1j * t) + np.exp(1j * n * t)) / (n + 1)
        return t, w

    def polyline(self, samples: int = DEFAULT_BOUNDARY_SAMPLES) -> ClosedPolyline:
        return _polyline(self.n, samples)

    @property
    def gamma(self) -> complex:
        """Primary cusp parameter e^{i pi/(n-1)}."""
        return cmath.exp(1j * math.pi / (self.n - 1))

    def cusp_value(self, theta: float) -> complex:
        """phi(e^{i theta}) - 1 computed from the angle, accurate for huge n."""
        n = self.n
        return (n * cmath.exp(1j * theta) + cmath.exp(1j * n * theta)) / (n + 1)

    def cusps(self) -> CuspSet:
        n = self.n
        angles = set()
        for k in range(1, n // 2 + 1):
            t = (2 * k - 1) * math.pi / (n - 1)
            angles.add(t)
            if t < math.pi:
                angles.add(-t)
        return CuspSet(tuple(sorted(angles)), self.gamma)

    # -- distance from a real centre ----------------------------------------

    def sigma(self, a: float, t):
        """Squared distance from (a, 0) to the boundary point at parameter t."""
        n = self.n
        x = 1 + n / (n + 1) * np.cos(t) + np.cos(n * t) / (n + 1) - a
        y = n / (n + 1) * np.sin(t) + np.sin(n * t) / (n + 1)
        return x * x + y * y

    def a1_threshold(self) -> float:
        """Upper end of the centres for which the primary cusp is a local minimum of sigma."""
        n = self.n
        c = math.pi / (n - 1)
        return 1 - (n - 1) ** 2 / ((1 + n) * math.cos(c) + n * (n + 1) * math.cos(n * c))

    def a3_threshold(self) -> float:
        """Centre at which the primary cusp and the point 2 are equidistant."""
        return _a3(self.n)

    def inscribed_radius(self, a: float) -> float:
        """Radius of the largest disk centred at (a, 0) inside the domain.

        Piecewise in ``a``: the distance to the leftmost point 2/(n+1), then the
        distance to the primary cusp, then the distance to the rightmost point 2.
        """
        n = self.n
        left = 2 / (n + 1)
        if not left < a < 2:
            raise OutOfRange(f"centre a={a} outside ({left}, 2)")
        if a <= 1:
            return a - left
        a3 = self.a3_threshold()
        if a < a3:
            return math.sqrt(self.sigma(a, math.pi / (n - 1)))
        return 2 - a

    # -- extremes of the boundary -------------------------------------------

    def min_real_part(self) -> float:
        n = self.n
        t0 = n * math.pi / (n + 1)
        return (1 + math.cos(n * t0) + n * (1 + math.cos(t0))) / (n + 1)

    def max_argument(self) -> float:
        n = self.n
        return math.atan(math.sin(math.pi / n) / (1 - math.cos(math.pi / n)))

    # -- membership ---------------------------------------------------------

    def contains_point(self, w: complex, samples: int = DEFAULT_BOUNDARY_SAMPLES,
                       band=None) -> Verdict:
        if samples < 1024:
            raise ValueError("samples must be >= 1024")
        return self.polyline(samples).classify(np.asarray([w]), band)[0]

    def classify(self, w, samples: int = DEFAULT_BOUNDARY_SAMPLES, band=None) -> List[Verdict]:
        return self.polyline(samples).classify(w, band)

    def hausdorff_gap_to_unit_circle(self, samples: int = 0) -> float:
        """max over t of | |phi(e^{it}) - 1| - 1 |, on a grid that includes the cusps."""
        n = self.n
        samples = samples or max(DEFAULT_BOUNDARY_SAMPLES, 64 * (n - 1))
        t = np.linspace(-np.pi, np.pi, samples, endpoint=False)
        t = np.concatenate([t, np.asarray(self.cusps().angles)])
        rho = np.abs(n * np.exp(1j * t) + np.exp(1j * n * t)) / (n + 1)
        return float(np.max(np.abs(rho - 1)))


@lru_cache(maxsize=64)
def _polyline(n: int, samples: int) -> ClosedPolyline:
    # the cusp tips are vertices, otherwise chords shave them off
    d = EpicycloidDomain(n)
    t, _ = d.boundary_samples(samples)
    t = np.union1d(t, np.asarray(d.cusps().angles))
    w = 1 + (n * np.exp(1j * t) + np.exp(1j * n * t)) / (n + 1)
    return ClosedPolyline(w)


@lru_cache(maxsize=256)
def _a3(n: int) -> float:
    c1 = math.cos(math.pi / (n - 1))
    cn = math.cos(n * math.pi / (n - 1))
    num = -(1 + 4 * n + n * n) + n * (1 + n) * c1 + (n + 1) * cn
    den = n * (1 + n) * c1 + (n + 1) * cn - (n + 1) ** 2
    a3 = num / den
    d = EpicycloidDomain(n)
    gap = d.sigma(a3, math.pi / (n - 1)) - d.sigma(a3, 0.0)
    assert abs(gap) < 1e-9, f"a3 closed form fails sigma equality by {gap:g}"
    assert 2 * (1 + n * n) / (1 + n) ** 2 < a3 < 2
    return a3


def a3_by_root(n: int) -> float:
    """a3 as the root of sigma(pi/(n-1)) - sigma(0) on (1, 2); independent of the closed form."""
    d = EpicycloidDomain(n)
    c = math.pi / (n - 1)
    return find_root_bracketed(lambda a: d.sigma(a, c) - d.sigma(a, 0.0), 1.0 + 1e-12, 2.0 - 1e-12)
