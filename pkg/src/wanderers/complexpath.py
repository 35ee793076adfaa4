"""Oriented piecewise-straight contours in the complex plane.

Every kernel in this package is a double contour integral.  This module owns
the geometry: building the wedge contours of the Airy-type kernels, the
cross + vertical pair of the Pearcey kernel, the eight-ray star of the
quintic kernel, discretizing them with Gauss-Legendre panels, testing that
paired contours do not intersect, and verifying the steepest-descent property
numerically.

Conventions
-----------
A path is an ordered tuple of oriented straight segments (start, end).
Consecutive segments that share an endpoint form a *branch*; a path may have
several disjoint branches (the Pearcey cross has two chevrons, the quintic
star has a wedge branch and a loop branch per path).

Wedge orientations are fixed once and for all:

* a "right-of" wedge (label ``airy_right``) runs from ``e^{-2пi/3}оо`` up to
  ``e^{+2пi/3}оо`` through a vertex on the real axis; the poles it must avoid
  lie to its left,
* a "left-of" wedge (label ``airy_left``) runs from ``e^{+iп/3}оо`` down to
  ``e^{-iп/3}оо``; its poles lie to its right.

Segments adjacent to a vertex are geometrically graded (3 panels, ratio 4)
because the integrands vary fastest near the critical point.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import InvalidGeometryError, MisalignedPathError

LABELS = (
    "airy_right",      # Gamma_{a~ >}
    "airy_left",       # Gamma_{< b~}
    "pearcey_cross",   # Gamma_x
    "pearcey_vertical",
    "quintic_C",
    "quintic_Ctilde",
    "circle",
)

#: number of geometric panels attached to each vertex and their ratio
GRADE_LEVELS = 3
GRADE_RATIO = 4.0

DEFAULT_ORDER = 64


def _graded_breaks(levels: int = GRADE_LEVELS, ratio: float = GRADE_RATIO) -> list[float]:
    """Fractions 0 < f_1 < ... < f_levels = 1 accumulating toward 0."""
    return [ratio ** (k - levels + 1) for k in range(levels)]  # e.g. [1/16, 1/4, 1]


def graded_segments(start: complex, end: complex, grade_at_start: bool,
                    levels: int = GRADE_LEVELS) -> list[tuple[complex, complex]]:
    """Split one straight segment into geometric panels graded toward one end."""
    fr = _graded_breaks(levels)
    pts = [start + f * (end - start) for f in [0.0] + fr]
    if not grade_at_start:
        pts = [start + (1.0 - f) * (end - start) for f in reversed([0.0] + fr)]
    return list(zip(pts[:-1], pts[1:]))


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes/weights mapped onto the segments of a path.

    Weights carry the complex direction of each segment, so that
    ``sum(w * f(z))`` approximates the oriented contour integral of ``f``.
    """

    order_per_segment: int
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        if self.nodes.shape != self.weights.shape:
            raise InvalidGeometryError("nodes and weights must have equal shape")


@lru_cache(maxsize=32)
def _leggauss(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def segment_rule(start: complex, end: complex, order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = _leggauss(order)
    half = 0.5 * (end - start)
    mid = 0.5 * (end + start)
    return mid + half * x, half * w


@dataclass(frozen=True)
class ContourPath:
    """An oriented contour made of straight segments, possibly in several branches."""

    label: str
    segments: tuple[tuple[complex, complex], ...]
    radius: float = field(default=float("nan"), compare=False)

    def __post_init__(self) -> None:
        if self.label not in LABELS:
            raise InvalidGeometryError(f"unknown contour label {self.label!r}")
        if not self.segments:
            raise InvalidGeometryError("a contour needs at least one segment")

    def branches(self) -> list[list[tuple[complex, complex]]]:
        """Group consecutive segments into connected branches."""
        out: list[list[tuple[complex, complex]]] = []
        current = [self.segments[0]]
        for seg in self.segments[1:]:
            if abs(seg[0] - current[-1][1]) < 1e-12 * (1.0 + abs(seg[0])):
                current.append(seg)
            else:
                out.append(current)
                current = [seg]
        out.append(current)
        return out

    def discretize(self, order: int = DEFAULT_ORDER) -> QuadratureRule:
        nodes, weights = [], []
        for a, b in self.segments:
            z, w = segment_rule(a, b, order)
            nodes.append(z)
            weights.append(w)
        return QuadratureRule(order, np.concatenate(nodes), np.concatenate(weights))

    def reversed(self) -> "ContourPath":
        segs = tuple((b, a) for a, b in reversed(self.segments))
        return ContourPath(self.label, segs, self.radius)

    def endpoints(self) -> np.ndarray:
        pts = {p for seg in self.segments for p in seg}
        return np.array(sorted(pts, key=lambda z: (z.real, z.imag)), dtype=complex)

    def to_json(self) -> str:
        segs = [[s.real, s.imag, e.real, e.imag] for s, e in self.segments]
        return json.dumps({"label": self.label, "segments": segs})

    @staticmethod
    def from_json(text: str) -> "ContourPath":
        doc = json.loads(text)
        segs = tuple((complex(a, b), complex(c, d)) for a, b, c, d in doc["segments"])
        return ContourPath(doc["label"], segs)


# ---------------------------------------------------------------------------
# segment intersection
# ---------------------------------------------------------------------------

def _segments_cross(a0: complex, a1: complex, b0: complex, b1: complex,
                    endpoint_tol: float) -> bool:
    """True if the closed segments intersect, endpoint touches closer than
    ``endpoint_tol`` to a shared point being forgiven."""
    d1 = a1 - a0
    d2 = b1 - b0
    den = d1.real * d2.imag - d1.imag * d2.real
    r = b0 - a0
    if abs(den) < 1e-14 * (abs(d1) * abs(d2) + 1e-30):
        # parallel: check collinear overlap
        cross = d1.real * r.imag - d1.imag * r.real
        if abs(cross) > 1e-12 * (abs(d1) + abs(r) + 1.0):
            return False
        t0 = (r.real * d1.real + r.imag * d1.imag) / (abs(d1) ** 2)
        t1 = t0 + (d2.real * d1.real + d2.imag * d1.imag) / (abs(d1) ** 2)
        lo, hi = min(t0, t1), max(t0, t1)
        overlap = min(hi, 1.0) - max(lo, 0.0)
        return overlap * abs(d1) > endpoint_tol
    t = (r.real * d2.imag - r.imag * d2.real) / den
    u = (r.real * d1.imag - r.imag * d1.real) / den
    eps_t = endpoint_tol / (abs(d1) + 1e-30)
    eps_u = endpoint_tol / (abs(d2) + 1e-30)
    return (-eps_t < t < 1 + eps_t) and (-eps_u < u < 1 + eps_u) and not (
        min(t, 1 - t) < eps_t and min(u, 1 - u) < eps_u
    )


def paths_intersect(p: ContourPath, q: ContourPath, *, endpoint_tol: float = 1e-9,
                    ignore: Sequence[complex] = ()) -> bool:
    """Pairwise segment-intersection test between two paths.

    ``ignore`` lists points (e.g. the origin for the quintic star) where the
    two paths are allowed to touch.
    """
    for a0, a1 in p.segments:
        for b0, b1 in q.segments:
            if _segments_cross(a0, a1, b0, b1, endpoint_tol):
                pt = _crossing_point(a0, a1, b0, b1)
                if pt is not None and any(abs(pt - g) < 1e-7 * (1 + abs(pt)) for g in ignore):
                    continue
                return True
    return False


def _crossing_point(a0: complex, a1: complex, b0: complex, b1: complex) -> complex | None:
    d1, d2, r = a1 - a0, b1 - b0, b0 - a0
    den = d1.real * d2.imag - d1.imag * d2.real
    if abs(den) < 1e-14 * (abs(d1) * abs(d2) + 1e-30):
        return None
    t = (r.real * d2.imag - r.imag * d2.real) / den
    return a0 + t * d1


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _wedge(vertex: float, radius: float, opening: str, label: str,
           leg_angle: float | None = None) -> ContourPath:
    """Standard wedge through a real vertex.

    ``opening == "left"``: from e^{-2пi/3}R up to e^{+2пi/3}R (the a~-side
    path); ``opening == "right"``: from e^{+iп/3}R down to e^{-iп/3}R (the
    b~-side path).  Legs are graded toward the vertex.
    """
    if opening == "left":
        ang = leg_angle if leg_angle is not None else 2.0 * math.pi / 3.0
    else:
        ang = leg_angle if leg_angle is not None else math.pi / 3.0
    up = vertex + radius * cmath.exp(1j * ang)
    dn = vertex + radius * cmath.exp(-1j * ang)
    segs: list[tuple[complex, complex]] = []
    if opening == "left":
        segs += graded_segments(dn, vertex, grade_at_start=False)
        segs += graded_segments(vertex, up, grade_at_start=True)
    else:
        segs += graded_segments(up, vertex, grade_at_start=False)
        segs += graded_segments(vertex, dn, grade_at_start=True)
    return ContourPath(label, tuple(segs), radius)


def build_airy_contours(right_of: float, left_of: float, separation: float = 0.5,
                        radius: float = 20.0) -> tuple[ContourPath, ContourPath]:
    """Contour pair for the Airy-type kernels.

    Returns ``(gamma_gt, gamma_lt)`` where ``gamma_gt`` passes on the right of
    ``right_of`` (all poles a~_k) and ``gamma_lt`` on the left of ``left_of``
    (all poles b~_k).  When the two pole windows leave a gap of at least twice
    the separation, both paths are plain wedges and stay in disjoint
    half-planes.  When the windows overlap (e.g. the continued regime), the
    effective separation is reduced, never below 0.1, and if that still does
    not clear, the right-of path hugs the inside of the left-of wedge and only
    bends into its e^{±2пi/3} asymptotes beyond the other path's truncation
    radius, so that the truncated paths nest without crossing.
    """
    if separation <= 0.0 or radius <= 0.0:
        raise InvalidGeometryError("separation and radius must be positive")
    if radius <= max(abs(right_of), abs(left_of)) + separation:
        raise InvalidGeometryError("radius too small for the requested pole windows")
    gap = left_of - right_of
    sep = separation
    if gap < 2.0 * sep + 0.05:
        sep = max(0.1, 0.45 * gap)
    v_gt = right_of + sep
    v_lt = left_of - sep
    if v_gt < v_lt - 1e-12:
        return (
            _wedge(v_gt, radius, "left", "airy_right"),
            _wedge(v_lt, radius, "right", "airy_left"),
        )
    # nested construction: windows overlap or are inverted
    v_gt = right_of + separation
    v_lt = left_of - separation
    lt = _wedge(v_lt, radius, "right", "airy_left")
    # inner leg slightly steeper than п/3 so it diverges from lt's legs,
    # shallow enough that the crossing of the two leg *lines* happens beyond
    # the nesting region
    t_a = 1.25 * radius
    delta = min(0.15, 0.40 * (v_gt - v_lt + 0.2) / t_a)
    th_in = math.pi / 3.0 + delta
    p_up = v_gt + t_a * cmath.exp(1j * th_in)
    p_dn = v_gt + t_a * cmath.exp(-1j * th_in)
    out = 1.1 * radius * cmath.exp(2j * math.pi / 3.0)
    segs: list[tuple[complex, complex]] = []
    segs.append((p_dn + out.conjugate(), p_dn))
    segs += graded_segments(p_dn, v_gt, grade_at_start=False)
    segs += graded_segments(v_gt, p_up, grade_at_start=True)
    segs.append((p_up, p_up + out))
    gt = ContourPath("airy_right", tuple(segs), radius)
    return gt, lt


def build_pearcey_contours(radius: float = 15.0, epsilon: float = 0.25,
                           center: complex = 0.0) -> tuple[ContourPath, ContourPath]:
    """Vertical line and cross ``Gamma_x`` of the Pearcey kernel.

    The vertical line (z variable) runs upward from ``-i radius`` to
    ``+i radius`` at ``Re z = center - epsilon``.  The cross (z~ variable) has
    a right chevron with vertex at ``center`` traversed from ``e^{iп/4}оо``
    down to ``e^{-iп/4}оо`` and a left chevron indented to
    ``center - 2 epsilon`` traversed from ``e^{3iп/4}оо`` down to
    ``e^{-3iп/4}оо``; the offsets keep the pair disjoint, and the value of any
    kernel built on it is independent of ``epsilon`` by analyticity.
    """
    if radius <= 0.0:
        raise InvalidGeometryError("radius must be positive")
    if epsilon < 0.0 or 2.0 * epsilon >= radius:
        raise InvalidGeometryError("epsilon must satisfy 0 <= 2*epsilon < radius")
    c = complex(center)
    vert_segs: list[tuple[complex, complex]] = []
    lo = c - epsilon - 1j * radius
    hi = c - epsilon + 1j * radius
    mid = c - epsilon
    vert_segs += graded_segments(lo, mid, grade_at_start=False)
    vert_segs += graded_segments(mid, hi, grade_at_start=True)
    vertical = ContourPath("pearcey_vertical", tuple(vert_segs), radius)
    cross = _pearcey_cross(c, radius, indent=2.0 * epsilon)
    return vertical, cross


def _pearcey_cross(center: complex, arm: float, indent: float = 0.0,
                   arm_left: float | None = None, mirror: bool = False) -> ContourPath:
    """The cross Gamma_x: right chevron at ``center``, left chevron indented.

    ``arm_left`` truncates the e^{±3iп/4} arms separately (used by the
    finite-m cusp evaluator whose left arms are descent-limited).  With
    ``mirror=True`` the figure is reflected about the vertical axis through
    ``center`` (closing-cusp variant): the ±3п/4 arms sit at ``center`` and
    the ±п/4 chevron is indented/truncated instead.
    """
    if arm_left is None:
        arm_left = arm
    e = cmath.exp
    q = math.pi / 4.0
    if not mirror:
        v_right, v_left = center, center - indent
        segs: list[tuple[complex, complex]] = []
        segs += graded_segments(v_right + arm * e(1j * q), v_right, grade_at_start=False)
        segs += graded_segments(v_right, v_right + arm * e(-1j * q), grade_at_start=True)
        segs += graded_segments(v_left + arm_left * e(3j * q), v_left, grade_at_start=False)
        segs += graded_segments(v_left, v_left + arm_left * e(-3j * q), grade_at_start=True)
    else:
        v_right, v_left = center + indent, center
        segs = []
        segs += graded_segments(v_right + arm_left * e(-1j * q), v_right, grade_at_start=False)
        segs += graded_segments(v_right, v_right + arm_left * e(1j * q), grade_at_start=True)
        segs += graded_segments(v_left + arm * e(-3j * q), v_left, grade_at_start=False)
        segs += graded_segments(v_left, v_left + arm * e(3j * q), grade_at_start=True)
    return ContourPath("pearcey_cross", tuple(segs), arm)


QUINTIC_C_ANGLES = (-0.6, 0.6, -0.2, 0.2)        # multiples of п: wedge then loop legs
QUINTIC_CT_ANGLES = (0.4, -0.4, 0.8, -0.8)


def build_quintic_contours(radius: float = 10.0, levels: int = 10) -> tuple[ContourPath, ContourPath]:
    """Eight-ray star of the quintic kernel.

    The z path C owns the rays at ±п/5 and ±3п/5 (where Re(2z^5/5) -> -оо) and
    the z~ path C~ the rays at ±2п/5 and ±4п/5 (where Re(2z~^5/5) -> +оо), so
    each exponential decays along its own path.  Orientations are inherited
    from the finite-m contours they deform from: C = upward wedge through the
    origin plus the two legs of a counterclockwise loop stretched through the
    origin; C~ = downward wedge plus counterclockwise loop legs (the loop of a
    *downward* path keeps the counterclockwise residue orientation).  The two
    paths meet only at the origin, which quadrature nodes exclude.
    """
    if radius <= 0.0:
        raise InvalidGeometryError("radius must be positive")
    e = cmath.exp
    p = math.pi

    def ray(angle: float) -> complex:
        return radius * e(1j * angle)

    c_segs: list[tuple[complex, complex]] = []
    c_segs += graded_segments(ray(-0.6 * p), 0.0, grade_at_start=False, levels=levels)
    c_segs += graded_segments(0.0, ray(0.6 * p), grade_at_start=True, levels=levels)
    c_segs += graded_segments(0.0, ray(-0.2 * p), grade_at_start=True, levels=levels)   # loop leg out
    c_segs += graded_segments(ray(0.2 * p), 0.0, grade_at_start=False, levels=levels)   # loop leg in
    cpath = ContourPath("quintic_C", tuple(c_segs), radius)

    ct_segs: list[tuple[complex, complex]] = []
    ct_segs += graded_segments(ray(0.4 * p), 0.0, grade_at_start=False, levels=levels)
    ct_segs += graded_segments(0.0, ray(-0.4 * p), grade_at_start=True, levels=levels)
    ct_segs += graded_segments(ray(-0.8 * p), 0.0, grade_at_start=False, levels=levels)  # loop leg in
    ct_segs += graded_segments(0.0, ray(0.8 * p), grade_at_start=True, levels=levels)    # loop leg out
    ctpath = ContourPath("quintic_Ctilde", tuple(ct_segs), radius)
    return cpath, ctpath


def circle_rule(center: complex, radius: float, n_nodes: int = 512) -> QuadratureRule:
    """Trapezoid rule on a circle, spectrally accurate for periodic integrands.

    ``sum(w * f(z))`` approximates the counterclockwise ``∮ f``.
    """
    if radius <= 0.0:
        raise InvalidGeometryError("circle radius must be positive")
    theta = 2.0 * math.pi * np.arange(n_nodes) / n_nodes
    z = center + radius * np.exp(1j * theta)
    w = (2j * math.pi / n_nodes) * (z - center)
    return QuadratureRule(n_nodes, z, w)


# ---------------------------------------------------------------------------
# descent check
# ---------------------------------------------------------------------------

def descent_check(path: ContourPath, phase: Callable[[np.ndarray], np.ndarray],
                  critical_point: complex, *, rel_tol: float = 1e-9,
                  samples_per_segment: int = 160) -> dict:
    """Verify that Re(phase) is nonincreasing along arclength away from a point.

    The path must have a segment endpoint within 1e-6 of ``critical_point``;
    every branch is walked outward from there (branches not containing the
    point are walked from their end nearest to it).  Returns
    ``{"monotone": bool, "worst_violation": float}`` where the violation is a
    relative increase between consecutive samples.
    """
    pts = [p for seg in path.segments for p in seg]
    if min(abs(p - critical_point) for p in pts) > 1e-6:
        raise MisalignedPathError(
            f"path has no vertex within 1e-6 of {critical_point}")

    worst = 0.0
    for branch in path.branches():
        chain_pts = [branch[0][0]] + [seg[1] for seg in branch]
        dists = [abs(p - critical_point) for p in chain_pts]
        k = int(np.argmin(dists))
        runs: list[list[tuple[complex, complex]]] = []
        if k > 0:
            runs.append([(b, a) for a, b in reversed(branch[:k])])
        if k < len(branch):
            runs.append(list(branch[k:]))
        for run in runs:
            vals: list[np.ndarray] = []
            for a, b in run:
                t = np.linspace(0.0, 1.0, samples_per_segment)
                vals.append(np.real(phase(a + t * (b - a))))
            f = np.concatenate(vals)
            inc = np.diff(f) / np.maximum(1.0, np.abs(f[:-1]))
            if inc.size:
                worst = max(worst, float(inc.max()))
    return {"monotone": worst <= rel_tol, "worst_violation": worst}
