"""Sampled closed curves: winding numbers, distances and curve crossings.

Points are complex numbers throughout. Every routine is vectorised over the
query points; the per-edge work is restricted to the queries whose ordinate
falls inside the edge's y-range, so the cost stays close to linear.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree


class Verdict(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


class ClosedPolyline:
    """Closed polygonal curve through ``points`` (the last point joins the first)."""

    def __init__(self, points):
        pts = np.asarray(points, dtype=complex).ravel()
        if pts.size >= 2 and pts[0] == pts[-1]:
            pts = pts[:-1]
        if pts.size < 3:
            raise ValueError("a closed polyline needs at least three vertices")
        if not np.all(np.isfinite(pts)):
            raise ValueError("polyline vertices must be finite")
        self.points = pts
        self.start = pts
        self.end = np.roll(pts, -1)

    def __len__(self):
        return self.points.size

    @cached_property
    def segment_lengths(self) -> np.ndarray:
        return np.abs(self.end - self.start)

    @property
    def mean_segment(self) -> float:
        return float(self.segment_lengths.mean())

    @cached_property
    def _tree(self) -> cKDTree:
        return cKDTree(np.column_stack([self.points.real, self.points.imag]))

    def winding(self, w) -> np.ndarray:
        """Winding number of the polyline around each query point."""
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        order = np.argsort(w.imag, kind="stable")
        qy = w.imag[order]
        y0, y1 = self.start.imag, self.end.imag
        lo = np.searchsorted(qy, np.minimum(y0, y1), side="left")
        hi = np.searchsorted(qy, np.maximum(y0, y1), side="left")
        counts = hi - lo
        total = int(counts.sum())
        wn = np.zeros(w.size, dtype=np.int64)
        if total:
            edge = np.repeat(np.arange(len(self)), counts)
            offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
            q = order[np.repeat(lo, counts) + offsets]
            a, b, p = self.start[edge], self.end[edge], w[q]
            side = _cross(b.real - a.real, b.imag - a.imag, p.real - a.real, p.imag - a.imag)
            upward = b.imag > a.imag
            contrib = np.where(upward & (side > 0), 1, 0) - np.where(~upward & (side < 0), 1, 0)
            np.add.at(wn, q, contrib)
        return wn

    def distance(self, w, k: int = 8) -> np.ndarray:
        """Distance from each query point to the polyline.

        Exact up to the candidate set: segments adjacent to the ``k`` nearest
        vertices, which covers dense, well-sampled curves.
        """
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        k = min(k, len(self))
        _, idx = self._tree.query(np.column_stack([w.real, w.imag]), k=k)
        idx = np.atleast_2d(idx).reshape(w.size, k)
        seg = np.concatenate([idx, (idx - 1) % len(self)], axis=1)
        a, b = self.start[seg], self.end[seg]
        p = w[:, None]
        ab = b - a
        denom = np.abs(ab) ** 2
        s = np.where(denom > 0, ((p - a) * np.conj(ab)).real / np.where(denom > 0, denom, 1), 0.0)
        s = np.clip(s, 0.0, 1.0)
        return np.abs(p - (a + s * ab)).min(axis=1)

    def classify(self, w, band: Optional[float] = None) -> list:
        """Inside/Outside by winding number, Boundary within ``band`` of the curve.

        ``band`` defaults to ten mean segment lengths; pass 0 for a strict
        winding-number verdict.
        """
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        if band is None:
            band = 10.0 * self.mean_segment
        inside = self.winding(w) != 0
        near = self.distance(w) < band if band > 0 else np.zeros(w.size, bool)
        return [Verdict.BOUNDARY if nb else (Verdict.INSIDE if ins else Verdict.OUTSIDE)
                for ins, nb in zip(inside, near)]

    def inside_mask(self, w) -> np.ndarray:
        return self.winding(w) != 0

    def signed_clearance(self, w) -> np.ndarray:
        """Distance to the curve, negative for points outside."""
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        d = self.distance(w)
        return np.where(self.winding(w) != 0, d, -d)

    def crossed_by(self, points, closed: bool = True) -> bool:
        """True if the polyline through ``points`` intersects this curve."""
        p = np.atleast_1d(np.asarray(points, dtype=complex))
        a = p if closed else p[:-1]
        b = np.roll(p, -1) if closed else p[1:]
        reach = np.abs(b - a) + self.segment_lengths.max()
        mid = 0.5 * (a + b)
        dist, _ = self._tree.query(np.column_stack([mid.real, mid.imag]), k=1)
        cand = np.nonzero(dist <= reach)[0]
        if cand.size == 0:
            return False
        near = self._tree.query_ball_point(np.column_stack([mid[cand].real, mid[cand].imag]),
                                           r=reach[cand])
        counts = np.fromiter((len(v) for v in near), dtype=np.int64, count=cand.size)
        if counts.sum() == 0:
            return False
        inner = np.repeat(cand, counts)
        verts = np.concatenate([np.asarray(v, dtype=np.int64) for v in near if len(v)])
        # each nearby vertex contributes its two incident segments
        inner = np.concatenate([inner, inner])
        segs = np.concatenate([verts, (verts - 1) % len(self)])
        return bool(_segments_intersect(a[inner], b[inner],
                                        self.start[segs], self.end[segs]).any())


def _segments_intersect(p1, p2, q1, q2) -> np.ndarray:
    """Proper or touching intersection of segment pairs ``p1p2`` and ``q1q2``."""
    r = p2 - p1
    s = q2 - q1
    d1 = _cross(s.real, s.imag, (p1 - q1).real, (p1 - q1).imag)
    d2 = _cross(s.real, s.imag, (p2 - q1).real, (p2 - q1).imag)
    d3 = _cross(r.real, r.imag, (q1 - p1).real, (q1 - p1).imag)
    d4 = _cross(r.real, r.imag, (q2 - p1).real, (q2 - p1).imag)
    return (d1 * d2 <= 0) & (d3 * d4 <= 0) & ~((d1 == 0) & (d2 == 0))


@dataclass(frozen=True)
class ContainmentReport:
    """Signed clearance of a sampled inner curve against an outer region."""

    r: float
    min_clearance: float
    touching_angle: float
    contained: bool

    def to_dict(self) -> dict:
        return {"r": self.r, "min_clearance": self.min_clearance,
                "touching_angle": self.touching_angle, "contained": self.contained}
