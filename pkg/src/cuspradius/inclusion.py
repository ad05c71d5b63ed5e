"""Which comparator classes sit inside S*_nL, and for which parameters."""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass

from .domain import EpicycloidDomain
from .errors import ParamOrder


@dataclass(frozen=True)
class InclusionReport:
    n: int
    alpha0: float
    beta0: float
    sl_alpha_min: float
    cassinian_c_max: float
    janowski_uniform_alpha_min: float
    alpha_alpha_max: float
    m_beta_min: float

    @property
    def tan_beta0(self) -> float:
        return math.tan(self.beta0)

    @property
    def janowski_disk_radius(self) -> float:
        """Radius of the disk |w - 1| < 1 - alpha at the smallest admissible alpha."""
        return 1 - self.janowski_uniform_alpha_min

    def to_dict(self) -> dict:
        out = asdict(self)
        out["tan_beta0"] = self.tan_beta0
        out["janowski_disk_radius"] = self.janowski_disk_radius
        return out


def alpha_alpha_max(n: int) -> float:
    g = cmath.exp(1j * math.pi / (n - 1))
    gn = cmath.exp(1j * n * math.pi / (n - 1))
    return abs((gn + n * g) / (2 + gn + 2 * n + n * g))


def inclusion_constants(d: EpicycloidDomain) -> InclusionReport:
    n = d.n
    return InclusionReport(
        n=n,
        alpha0=d.min_real_part(),
        beta0=d.max_argument(),
        sl_alpha_min=2 / (n + 1),
        cassinian_c_max=1 - 4 / (n + 1) ** 2,
        janowski_uniform_alpha_min=2 / (n + 1),
        alpha_alpha_max=alpha_alpha_max(n),
        m_beta_min=2.0,
    )


def janowski_disk(A: float, B: float) -> tuple:
    """Centre and radius of the image disk of (1 + Az)/(1 + Bz), B > -1."""
    return (1 - A * B) / (1 - B * B), (A - B) / (1 - B * B)


def janowski_inclusion(d: EpicycloidDomain, A: float, B: float) -> bool:
    """True if the Janowski disk lies in the domain, by the inscribed-disk cases."""
    if not B < A:
        raise ParamOrder(f"need B < A, got A={A}, B={B}")
    if not (-1 <= B and A <= 1):
        raise ValueError("need -1 <= B < A <= 1")
    if B == -1:
        return False  # half-plane
    a, r = janowski_disk(A, B)
    n = d.n
    if a <= 2 / (n + 1) or a >= 2:
        return False
    if a <= 1:
        return r <= a - 2 / (n + 1)
    if a < d.a3_threshold():
        return r <= math.sqrt(d.sigma(a, math.pi / (n - 1)))
    return r <= 2 - a


def printed_case_b_holds(d: EpicycloidDomain, A: float, B: float) -> bool:
    """The middle case as printed: A <= sigma(pi/(n-1)) (1 - B^2) + B (squared distance)."""
    a, _ = janowski_disk(A, B)
    return bool(A <= d.sigma(a, math.pi / (d.n - 1)) * (1 - B * B) + B)


def m_disk_inclusion(M: float) -> bool:
    """S*_nL sits inside {|w - M| < M} whenever M >= 1."""
    return M >= 1


def m_beta_inclusion(beta: float) -> bool:
    """S*_nL sits inside M(beta) = {Re w < beta} for beta > 2 (and at beta = 2 by strictness)."""
    return beta >= 2
