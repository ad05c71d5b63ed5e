"""Catalog of comparator classes of starlike functions.

Each class is an immutable :class:`ComparatorClass` (a tag plus parameters).
Three things hang off it:

* :func:`phi_of` evaluates the defining function, when the class has one;
* :func:`membership` decides whether a point lies in the region phi(D);
* :func:`disk_threshold` gives the constant used by the backward root equations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .errors import NotInBackwardTable, NotMaMinda, UnsupportedClass
from .geometry import ClosedPolyline, Verdict

SQRT2 = math.sqrt(2.0)
K_R = SQRT2 + 1.0  # the constant k of the rational class
C_RL = 2.0 * (SQRT2 - 1.0)
DEFAULT_PROBE_SAMPLES = 4096
INEQUALITY_TOL = 1e-9


def _always(**_):
    return True


# tag -> (parameter names, validator, CLI id)
_CATALOG: Dict[str, Tuple[Tuple[str, ...], Callable[..., bool], str]] = {
    "MBeta": (("beta",), lambda beta: beta > 1, "m-beta"),
    "BS": (("alpha",), lambda alpha: 0 < alpha <= 1, "bs-alpha"),
    "W": ((), _always, "w"),
    "F1": ((), _always, "f1"),
    "F2": ((), _always, "f2"),
    "SLalpha": (("alpha",), lambda alpha: 0 <= alpha < 1, "sl-alpha"),
    "Cassinian": (("c",), lambda c: 0 < c <= 1, "cassinian"),
    "AlphaExp": (("alpha",), lambda alpha: 0 <= alpha < 1, "alpha-exp"),
    "EL": (("alpha",), lambda alpha: 0 <= alpha < 1, "el"),
    "Cardioid": ((), _always, "cardioid"),
    "Lune": ((), _always, "lune"),
    "RationalR": ((), _always, "rational-r"),
    "RL": ((), _always, "rl"),
    "Lim": ((), _always, "lim"),
    "ZExp": ((), _always, "z-exp"),
    "Car": ((), _always, "car"),
    "Sin": ((), _always, "sin"),
    "Nephroid": ((), _always, "nephroid"),
    "Janowski": (("A", "B"), lambda A, B: -1 <= B < A <= 1, "janowski"),
    "OrderAlpha": (("alpha",), lambda alpha: 0 <= alpha < 1, "order-alpha"),
    "SG": ((), _always, "sg"),
    "Cos": ((), _always, "cos"),
    "Cosh": ((), _always, "cosh"),
    "ArcSinh": ((), _always, "arc-sinh"),
    "SnL": (("n",), lambda n: int(n) == n and n >= 4 and n % 2 == 0, "snl"),
}

NOT_MA_MINDA = frozenset({"W", "F1", "F2", "MBeta"})


@dataclass(frozen=True)
class ComparatorClass:
    tag: str
    params: Tuple[Tuple[str, float], ...] = ()

    def __post_init__(self):
        if self.tag not in _CATALOG:
            raise UnsupportedClass(self.tag)
        names, valid, _ = _CATALOG[self.tag]
        given = tuple(k for k, _ in self.params)
        if given != names:
            raise ValueError(f"{self.tag} takes parameters {names}, got {given}")
        if not valid(**dict(self.params)):
            raise ValueError(f"parameters {dict(self.params)} out of range for {self.tag}")

    @classmethod
    def make(cls, tag: str, **params) -> "ComparatorClass":
        if tag not in _CATALOG:
            raise UnsupportedClass(tag)
        names = _CATALOG[tag][0]
        missing = set(names) - set(params)
        if missing or set(params) - set(names):
            raise ValueError(f"{tag} takes parameters {names}, got {tuple(params)}")
        return cls(tag, tuple((k, params[k]) for k in names))

    def __getattr__(self, name):
        # expose parameters as attributes: MBeta(2).beta
        if name.startswith("_") or name in ("tag", "params"):
            raise AttributeError(name)
        for k, v in self.params:
            if k == name:
                return v
        raise AttributeError(f"{self.tag} has no parameter {name!r}")

    @property
    def cli_id(self) -> str:
        return _CATALOG[self.tag][2]

    @property
    def is_ma_minda(self) -> bool:
        return self.tag not in NOT_MA_MINDA

    def label(self) -> str:
        if not self.params:
            return self.tag
        inner = ",".join(f"{k}={v:g}" for k, v in self.params)
        return f"{self.tag}({inner})"

    def to_dict(self) -> dict:
        return {"tag": self.tag, "id": self.cli_id, "params": dict(self.params)}


def from_cli_id(cli_id: str, **params) -> ComparatorClass:
    for tag, (_, _, ident) in _CATALOG.items():
        if ident == cli_id:
            return ComparatorClass.make(tag, **params)
    raise UnsupportedClass(cli_id)


def cli_ids() -> list:
    return [ident for _, _, ident in _CATALOG.values()]


# -- factories ---------------------------------------------------------------

def MBeta(beta: float) -> ComparatorClass:
    return ComparatorClass.make("MBeta", beta=beta)


def BS(alpha: float) -> ComparatorClass:
    return ComparatorClass.make("BS", alpha=alpha)


def SLalpha(alpha: float = 0.0) -> ComparatorClass:
    return ComparatorClass.make("SLalpha", alpha=alpha)


def Cassinian(c: float) -> ComparatorClass:
    return ComparatorClass.make("Cassinian", c=c)


def AlphaExp(alpha: float = 0.0) -> ComparatorClass:
    return ComparatorClass.make("AlphaExp", alpha=alpha)


def EL(alpha: float) -> ComparatorClass:
    return ComparatorClass.make("EL", alpha=alpha)


def Janowski(A: float, B: float) -> ComparatorClass:
    return ComparatorClass.make("Janowski", A=A, B=B)


def OrderAlpha(alpha: float) -> ComparatorClass:
    return ComparatorClass.make("OrderAlpha", alpha=alpha)


def SnL(n: int) -> ComparatorClass:
    return ComparatorClass.make("SnL", n=n)


W = ComparatorClass("W")
F1 = ComparatorClass("F1")
F2 = ComparatorClass("F2")
Cardioid = ComparatorClass("Cardioid")
Lune = ComparatorClass("Lune")
RationalR = ComparatorClass("RationalR")
RL = ComparatorClass("RL")
Lim = ComparatorClass("Lim")
ZExp = ComparatorClass("ZExp")
Car = ComparatorClass("Car")
Sin = ComparatorClass("Sin")
Nephroid = ComparatorClass("Nephroid")
SG = ComparatorClass("SG")
Cos = ComparatorClass("Cos")
Cosh = ComparatorClass("Cosh")
ArcSinh = ComparatorClass("ArcSinh")


def janowski_order_alpha(alpha: float) -> ComparatorClass:
    """S*(alpha) written as the Janowski class [1 - 2 alpha, -1]."""
    return Janowski(1 - 2 * alpha, -1.0)


def janowski_symmetric(alpha: float) -> ComparatorClass:
    return Janowski(alpha, -alpha)


def janowski_shifted(alpha: float) -> ComparatorClass:
    return Janowski(1 - alpha, 0.0)


def janowski_m(M: float) -> ComparatorClass:
    return Janowski(1.0, -(M - 1) / M)


# -- defining functions ------------------------------------------------------

def _phi_array(c: ComparatorClass, z: np.ndarray) -> np.ndarray:
    t = c.tag
    p = dict(c.params)
    if t == "SLalpha":
        a = p["alpha"]
        return a + (1 - a) * np.sqrt(1 + z)
    if t == "Cassinian":
        return np.sqrt(1 + p["c"] * z)
    if t == "AlphaExp":
        a = p["alpha"]
        return a + (1 - a) * np.exp(z)
    if t == "EL":
        a = p["alpha"]
        return a * np.exp(z) + (1 - a) * (1 + z)
    if t == "Cardioid":
        return 1 + 4 * z / 3 + 2 * z * z / 3
    if t == "Lune":
        return z + np.sqrt(1 + z * z)
    if t == "RationalR":
        return (K_R ** 2 + z * z) / (K_R ** 2 - K_R * z)
    if t == "RL":
        return SQRT2 - (SQRT2 - 1) * np.sqrt((1 - z) / (1 + C_RL * z))
    if t == "Lim":
        return 1 + SQRT2 * z + z * z / 2
    if t == "ZExp":
        return 1 + z * np.exp(z)
    if t == "Car":
        return 1 + z + z * z / 2
    if t == "Sin":
        return 1 + np.sin(z)
    if t == "Nephroid":
        return 1 + z - z ** 3 / 3
    if t == "Janowski":
        return (1 + p["A"] * z) / (1 + p["B"] * z)
    if t == "OrderAlpha":
        a = p["alpha"]
        return (1 + (1 - 2 * a) * z) / (1 - z)
    if t == "SG":
        return 2 / (1 + np.exp(-z))
    if t == "Cos":
        return np.cos(z)
    if t == "Cosh":
        return np.cosh(z)
    if t == "ArcSinh":
        return 1 + np.arcsinh(z)
    if t == "BS":
        return 1 + z / (1 - p["alpha"] * z * z)
    if t == "SnL":
        n = int(p["n"])
        return 1 + n * z / (n + 1) + z ** n / (n + 1)
    raise NotMaMinda(f"{t} is not defined through a single function phi")


def phi_of(c: ComparatorClass, z):
    """Evaluate phi_C at ``z`` (scalar or array, |z| <= 1)."""
    if not c.is_ma_minda:
        raise NotMaMinda(f"{c.tag} is not defined through a single function phi")
    scalar = np.ndim(z) == 0
    arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(arr) > 1 + 1e-12):
        raise ValueError("phi_of needs |z| <= 1")
    with np.errstate(divide="ignore", invalid="ignore"):
        out = _phi_array(c, arr)
    return complex(out) if scalar else out


def boundary_param(c: ComparatorClass, t):
    """phi_C(e^{it}), the boundary of the region for Ma-Minda classes."""
    return phi_of(c, np.exp(1j * np.asarray(t, dtype=float)))


@lru_cache(maxsize=128)
def _class_polyline(c: ComparatorClass, samples: int) -> ClosedPolyline:
    t = np.linspace(-np.pi, np.pi, samples, endpoint=False)
    return ClosedPolyline(boundary_param(c, t))


def region_polyline(c: ComparatorClass, samples: int = DEFAULT_PROBE_SAMPLES) -> ClosedPolyline:
    if samples < DEFAULT_PROBE_SAMPLES:
        raise ValueError(f"samples must be >= {DEFAULT_PROBE_SAMPLES}")
    return _class_polyline(c, samples)


# -- membership ---------------------------------------------------------------

def _margin(c: ComparatorClass, w: np.ndarray) -> Optional[np.ndarray]:
    """Signed slack of the defining inequality (positive inside), or None.

    Where a region is an intersection of two conditions the smaller slack wins.
    """
    t = c.tag
    p = dict(c.params)
    with np.errstate(divide="ignore", invalid="ignore"):
        if t == "SLalpha":
            a = p["alpha"]
            s = (w - a) / (1 - a)
            return np.minimum(1 - np.abs(s * s - 1), w.real - a)
        if t == "Cassinian":
            return np.minimum(p["c"] - np.abs(w * w - 1), w.real)
        if t == "Lune":
            # the inequality alone also admits the mirror image in Re w < 0
            return np.minimum(2 * np.abs(w) - np.abs(w * w - 1), w.real)
        if t == "SG":
            q = w / (2 - w)
            out = 1 - np.abs(np.log(q))
            return np.where(np.isfinite(out), out, -np.inf)
        if t == "AlphaExp":
            a = p["alpha"]
            out = 1 - np.abs(np.log((w - a) / (1 - a)))
            return np.where(np.isfinite(out), out, -np.inf)
        if t == "RL":
            return np.minimum(1 - np.abs((w - SQRT2) ** 2 - 1), SQRT2 - w.real)
        if t == "Janowski":
            A, B = p["A"], p["B"]
            if B == -1:
                return w.real - (1 - A) / 2
            centre = (1 - A * B) / (1 - B * B)
            radius = (A - B) / (1 - B * B)
            return radius - np.abs(w - centre)
        if t == "OrderAlpha":
            return w.real - p["alpha"]
        if t == "MBeta":
            return p["beta"] - w.real
        if t == "BS":
            return 1 - _bs_preimage_modulus(p["alpha"], w)
    return None


def _bs_preimage_modulus(alpha: float, w: np.ndarray) -> np.ndarray:
    """Smallest |z| with 1 + z/(1 - alpha z^2) = w."""
    v = w - 1
    out = np.zeros(w.shape)
    nz = v != 0
    vv = v[nz]
    disc = np.sqrt(1 + 4 * alpha * vv * vv)
    r1 = (-1 + disc) / (2 * alpha * vv)
    r2 = (-1 - disc) / (2 * alpha * vv)
    out[nz] = np.minimum(np.abs(r1), np.abs(r2))
    return out


def membership(c: ComparatorClass, w, samples: int = DEFAULT_PROBE_SAMPLES, band=None):
    """Inside / Outside / Boundary for ``w`` (scalar gives a Verdict, array a list).

    Classes with a closed-form defining inequality are decided by it, with
    |slack| below ``INEQUALITY_TOL`` reported as Boundary. The rest use the
    winding number of the sampled boundary phi_C(e^{it}).
    """
    scalar = np.ndim(w) == 0
    arr = np.atleast_1d(np.asarray(w, dtype=complex))
    m = _margin(c, arr)
    if m is not None:
        verdicts = [Verdict.BOUNDARY if abs(x) < INEQUALITY_TOL
                    else (Verdict.INSIDE if x > 0 else Verdict.OUTSIDE) for x in m]
    elif c.tag in NOT_MA_MINDA:
        raise NotMaMinda(f"{c.tag} has no region probe")
    else:
        verdicts = region_polyline(c, samples).classify(arr, band)
    return verdicts[0] if scalar else verdicts


def inside_mask(c: ComparatorClass, w, samples: int = DEFAULT_PROBE_SAMPLES) -> np.ndarray:
    """Strict membership as a boolean array (no Boundary band)."""
    arr = np.atleast_1d(np.asarray(w, dtype=complex))
    m = _margin(c, arr)
    if m is not None:
        return m > 0
    return region_polyline(c, samples).inside_mask(arr)


def has_inequality(c: ComparatorClass) -> bool:
    return _margin(c, np.asarray([1.0 + 0j])) is not None


@dataclass(frozen=True)
class RegionProbe:
    cls: ComparatorClass
    samples: int = DEFAULT_PROBE_SAMPLES

    def membership(self, w):
        return membership(self.cls, w, self.samples)

    def boundary_param(self, t):
        return boundary_param(self.cls, t)


# -- backward thresholds ------------------------------------------------------

@dataclass(frozen=True)
class DiskThreshold:
    """``kind`` is "symmetric" (r^n + n r - (n+1) k = 0) or "left_gap" (r^n - n r + (n+1) k = 0)."""

    kind: str
    value: float


_GOLDEN_RL = 2 * SQRT2 - 2

BACKWARD_TABLE_CLASSES = (SLalpha(0.0), RL, RationalR, Sin, SG, Nephroid, ZExp, ArcSinh)


def disk_threshold(c: ComparatorClass) -> DiskThreshold:
    t = c.tag
    p = dict(c.params)
    if t == "SLalpha":
        return DiskThreshold("symmetric", (SQRT2 - 1) * (1 - p["alpha"]))
    if t == "RL":
        return DiskThreshold("symmetric", math.sqrt(math.sqrt(_GOLDEN_RL) - _GOLDEN_RL))
    if t == "RationalR":
        return DiskThreshold("symmetric", 3 - 2 * SQRT2)
    if t == "Sin":
        return DiskThreshold("symmetric", math.sin(1.0))
    if t == "SG":
        return DiskThreshold("symmetric", (math.e - 1) / (math.e + 1))
    if t == "Nephroid":
        return DiskThreshold("symmetric", 2.0 / 3.0)
    if t == "ZExp":
        return DiskThreshold("left_gap", 1 / math.e)
    if t == "ArcSinh":
        return DiskThreshold("symmetric", math.asinh(1.0))
    if t == "MBeta":
        return DiskThreshold("symmetric", p["beta"] - 1)
    if t == "Janowski" and p["B"] == 0:
        return DiskThreshold("symmetric", p["A"])
    raise NotInBackwardTable(c.label())
