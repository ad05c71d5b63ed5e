"""Radius problems for the starlike class whose zf'/f values lie in a cusped epicycloid domain."""

from .classes import ComparatorClass, disk_threshold, membership, phi_of
from .domain import EpicycloidDomain
from .errors import CuspRadiusError
from .inclusion import InclusionReport, inclusion_constants, janowski_inclusion
from .radii import (RadiusResult, backward_oracle, backward_radius, forward_oracle, forward_radius,
                    limit_radius, parity_radius_sin_ne, strohhacker_bound, unit_radius_classes)
from .series import TruncatedSeries, coefficient_bounds, extremal_series, series_exp

__version__ = "0.1.0"

__all__ = [
    "ComparatorClass", "CuspRadiusError", "EpicycloidDomain", "InclusionReport", "RadiusResult",
    "TruncatedSeries", "backward_oracle", "backward_radius", "coefficient_bounds",
    "disk_threshold", "extremal_series", "forward_oracle", "forward_radius", "inclusion_constants",
    "janowski_inclusion", "limit_radius", "membership", "parity_radius_sin_ne", "phi_of",
    "series_exp", "strohhacker_bound", "unit_radius_classes",
]
