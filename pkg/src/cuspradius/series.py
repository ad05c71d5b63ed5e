"""Truncated power series, extremal functions and initial-coefficient bounds.

Coefficients are kept as :class:`fractions.Fraction` (exact mode) or as floats.
Every operation truncates at the order of its operands, so nothing past
``order`` is ever read or produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import List, Sequence, Union

from .errors import NonzeroConstantTerm

Number = Union[Fraction, float]

DEFAULT_ORDER = 12
EXACT_MAX_ORDER = 16


class TruncatedSeries:
    """Power series a_0 + a_1 z + ... + a_K z^K, truncated at order K."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Number], order: int = None):
        coeffs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            zero = Fraction(0) if all(isinstance(c, Rational) for c in coeffs) else 0.0
            coeffs = (coeffs + [zero] * (order + 1))[: order + 1]
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(c, Rational) for c in self.coeffs)

    def __getitem__(self, k: int) -> Number:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs!r})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def _zero(self):
        return Fraction(0) if self.exact else 0.0

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        k = self._common(other)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(k + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs])
        k = self._common(other)
        out = []
        for m in range(k + 1):
            acc = self._zero()
            for i in range(m + 1):
                acc += self.coeffs[i] * other.coeffs[m - i]
            out.append(acc)
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def shift(self, by: int = 1) -> "TruncatedSeries":
        """Multiply by z**by, keeping the same order."""
        return TruncatedSeries([self._zero()] * by + self.coeffs[: self.order + 1 - by])

    def to_float(self) -> "TruncatedSeries":
        return TruncatedSeries([float(c) for c in self.coeffs])

    def evaluate(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, via k g_k = sum_j j s_j g_{k-j}."""
    if s.coeffs[0] != 0:
        raise NonzeroConstantTerm("series_exp needs s(0) = 0")
    one = Fraction(1) if s.exact else 1.0
    g = [one]
    for k in range(1, s.order + 1):
        acc = s._zero()
        for j in range(1, k + 1):
            acc += j * s.coeffs[j] * g[k - j]
        g.append(acc / k)
    return TruncatedSeries(g)


def _exact(order: int) -> bool:
    return order <= EXACT_MAX_ORDER


def phi_series(n: int, order: int = DEFAULT_ORDER, exact: bool = None) -> TruncatedSeries:
    """The polynomial 1 + n z/(n+1) + z^n/(n+1) as a truncated series."""
    exact = _exact(order) if exact is None else exact
    num = Fraction if exact else float
    c = [num(0)] * (order + 1)
    c[0] = num(1)
    if order >= 1:
        c[1] = num(n) / (n + 1)
    if order >= n:
        c[n] += num(1) / (n + 1)
    return TruncatedSeries(c)


def extremal_series(n: int, i: int, order: int = DEFAULT_ORDER, exact: bool = None) -> TruncatedSeries:
    """Coefficients of f_i(z) = z exp(int_0^z (phi(t^{i-1}) - 1)/t dt).

    The exponent integrates term by term to
    n z^{i-1} / ((n+1)(i-1)) + z^{n(i-1)} / (n (n+1) (i-1)).
    ``i = 2`` gives the extremal function with z f'/f = phi exactly.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be even and >= 4")
    if not 2 <= i <= 5:
        raise ValueError("i must be in 2..5")
    if order < i:
        raise ValueError("order must be at least i")
    exact = _exact(order) if exact is None else exact
    num = Fraction if exact else float
    expo = [num(0)] * order  # exp factor only needs order - 1
    if i - 1 <= order - 1:
        expo[i - 1] += num(n) / ((n + 1) * (i - 1))
    m = n * (i - 1)
    if m <= order - 1:
        expo[m] += num(1) / (n * (n + 1) * (i - 1))
    g = series_exp(TruncatedSeries(expo))
    return TruncatedSeries([num(0)] + g.coeffs)


def log_derivative_series(f: TruncatedSeries) -> TruncatedSeries:
    """p = z f'/f for f = z + a_2 z^2 + ..., returned to order K - 1."""
    if f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise ValueError("f must be normalised: f(0) = 0, f'(0) = 1")
    a = f.coeffs[1:]  # f/z
    K = len(a) - 1
    zero = f._zero()
    # z f'/f = (sum (k+1) a_k z^k) / (sum a_k z^k); long division
    num = [(k + 1) * a[k] for k in range(K + 1)]
    p = []
    for k in range(K + 1):
        acc = num[k]
        for j in range(k):
            acc -= p[j] * a[k - j]
        p.append(acc / a[0] if acc != zero else zero)
    return TruncatedSeries(p)


def verify_recurrence(p: TruncatedSeries, f: TruncatedSeries, tol: float = 1e-12) -> bool:
    """Check (k-1) a_k = sum_{j=1}^{k-1} b_j a_{k-j} for every order available.

    ``f`` holds a_0..a_K with a_1 = 1; ``p`` holds 1, b_1, b_2, ...
    """
    if f.coeffs[1] != 1:
        raise ValueError("f must be normalised with a_1 = 1")
    K = min(f.order, p.order + 1)
    exact = f.exact and p.exact
    for k in range(2, K + 1):
        rhs = sum(p.coeffs[j] * f.coeffs[k - j] for j in range(1, k))
        lhs = (k - 1) * f.coeffs[k]
        if exact:
            if lhs != rhs:
                return False
        elif abs(lhs - rhs) > tol:
            return False
    return True


def stated_bounds(n: int) -> List[Fraction]:
    """|a_2| .. |a_5| bounds exactly as printed for the class."""
    n1 = n + 1
    return [Fraction(n, n1), Fraction(n, 2 * n1), Fraction(n, 12 * n1), Fraction(n, 4 * n1)]


@dataclass
class CoefficientReport:
    n: int
    bounds: List[Fraction]
    extremal_values: List[Fraction]
    agreement: List[bool]
    errata: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "bounds": [float(b) for b in self.bounds],
            "bounds_exact": [str(b) for b in self.bounds],
            "extremal_values": [float(v) for v in self.extremal_values],
            "extremal_exact": [str(v) for v in self.extremal_values],
            "agreement": list(self.agreement),
            "errata": list(self.errata),
        }


def coefficient_bounds(n: int) -> CoefficientReport:
    """Printed bounds next to the i-th coefficient of the i-th extremal function."""
    bounds = stated_bounds(n)
    values = [extremal_series(n, i, order=max(i, 5))[i] for i in range(2, 6)]
    agreement = [v == b for v, b in zip(values, bounds)]
    errata = []
    for i, (v, b, ok) in enumerate(zip(values, bounds, agreement), start=2):
        if not ok:
            errata.append(f"|a_{i}|: printed bound {b} but the extremal function f_{i} "
                          f"has a_{i} = {v}")
    return CoefficientReport(n, bounds, values, agreement, errata)


# -- Caratheodory coefficient predicates ------------------------------------

def lemma21_condition(kind: str, **params) -> bool:
    """Evaluate the hypotheses of the Caratheodory coefficient estimates.

    ``kind="ii"`` takes ``beta, delta``;
    ``kind="iii"`` takes ``alpha, a, beta, gamma``.
    Fractions give an exact verdict.
    """
    if kind == "ii":
        beta, delta = params["beta"], params["delta"]
        return 0 <= beta <= 1 and beta * (2 * beta - 1) <= delta <= beta
    if kind == "iii":
        alpha, a, beta, gamma = params["alpha"], params["a"], params["beta"], params["gamma"]
        if not (0 < alpha < 1 and 0 < a < 1):
            return False
        return lemma21_iii_lhs(alpha, a, beta, gamma) <= 0
    raise ValueError(f"kind must be 'ii' or 'iii', got {kind!r}")


def lemma21_iii_lhs(alpha, a, beta, gamma):
    """Left side minus right side of the part (iii) inequality (<= 0 when it holds)."""
    return (8 * a * (1 - a) * ((alpha * beta - 2 * gamma) ** 2 + (alpha * (a + alpha) - beta) ** 2)
            + alpha * (1 - alpha) * (beta - a * alpha) ** 2
            - 4 * alpha ** 2 * (1 - alpha) ** 2 * a * (1 - a))


def a4_parameters(n: int) -> dict:
    n = Fraction(n)
    return {"beta": (n + 4) / (8 * (n + 1)), "delta": (n + 2) / (8 * (n + 1) ** 2)}


def a5_parameters(n: int) -> dict:
    n = Fraction(n)
    return {
        "beta": (n * n + 7 * n + 9) / (18 * (n + 1) ** 2),
        "a": (n + 2) / (4 * (n + 1)),
        "alpha": (n + 3) / (6 * (n + 1)),
        "gamma": (n + 2) * (2 * n + 3) / (48 * (n + 1) ** 3),
    }


_PRINTED_REDUCED = (5832, 46656, 156564, 286536, 310942, 203428, 77806, 15816, 1301)


def printed_reduced_polynomial(n) -> Fraction:
    """The reduced form of the part (iii) condition as printed alongside the a_5 bound."""
    n = Fraction(n)
    num = sum(c * n ** k for k, c in enumerate(_PRINTED_REDUCED))
    return -num / (93312 * (1 + n) ** 8)
