"""Limiting kernels of the wanderer ensemble as double contour integrals.

Every kernel is evaluated in "shifted" variables, where the contour geometry
depends only on the wanderer endpoints and the times enter the exponents:

    K(t1,x1;t2,x2) = heat(t1,x1;t2,x2)
        + (1/(2пi)^2) ∬ e^{E2(w)} / e^{E1(wt)} * P(w,wt)^m / (w - wt),

    E_i(z) = -(z - t_i)^3/3 + x_i (z - t_i),
    P(w,wt) = prod_k ((wt - a_k)(w - b_k)) / ((w - a_k)(wt - b_k)),

with the w-contour passing right of all a_k and the wt-contour left of all
b_k.  Three interchangeable evaluation routes are provided:

* ``direct``  - the product P^m inside the integrand, on non-crossing wedges
  (standard regime with a comfortable pole gap);
* ``split``   - airy part plus ∬ (P^m - 1)/(w - wt), whose integrand is
  regular at w = wt, so the two wedges only need to respect their own pole
  and may cross.  Each factor of the underlying sum decomposition is entire
  in the endpoints, which makes this route the analytic continuation to the
  inverted ordering b < a as well;
* ``loops`` / ``star`` - the continued-regime contours: wedges through the
  midpoint plus a counterclockwise loop around the a-poles and a clockwise
  loop around the b-poles, either as literal circles (small m) or stretched
  through the origin into the eight-ray star that survives in the quintic
  limit (large m under the quintic scaling).

Exponents are handled in log space throughout; the integer wanderer weight
enters as m times a complex logarithm, which is exact for any branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _integrate as eng
from .complexpath import (ContourPath, DEFAULT_ORDER, circle_rule,
                          graded_segments, segment_rule)
from .errors import (InvalidInputError, NumericalFailureError,
                     PoleOnContourError, QuadratureInstabilityError,
                     RegimeError)

IMAG_TOL_HARD = 1e-6

AIRY_RADIUS = 20.0
PEARCEY_RADIUS = 15.0
QUINTIC_RADIUS = 10.0
SEPARATION = 0.5
CBRT2 = 2.0 ** (1.0 / 3.0)


@dataclass(frozen=True)
class SpaceTimePoint:
    """Rescaled time tau and space xi at the edge of the bridge cloud."""

    tau: float
    xi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and math.isfinite(self.xi)):
            raise InvalidInputError("SpaceTimePoint needs finite coordinates")


@dataclass(frozen=True)
class KernelValue:
    """Complex kernel value with its real projection and imaginary residue."""

    value: complex
    real_projection: float
    imag_magnitude: float

    @staticmethod
    def wrap(z: complex, tol: float = IMAG_TOL_HARD) -> "KernelValue":
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise NumericalFailureError("kernel evaluation produced non-finite value")
        im = abs(z.imag)
        if im > tol * (1.0 + abs(z)):
            raise QuadratureInstabilityError(
                f"imaginary residue {im:.3e} exceeds tolerance for value {z:.6e}")
        return KernelValue(z, z.real, im)


@dataclass(frozen=True)
class WandererConfig:
    """Endpoint data of the m wanderers.

    ``a_tilde[k]`` and ``b_tilde[k]`` carry multiplicity ``counts[k]``; the
    conventional constructors produce all-ones counts (distinct points) or a
    single entry of multiplicity m (coincident points).  ``regime`` is
    ``"standard"`` when every a lies below every b and ``"continued"`` when
    every b lies below every a; mixed orderings are rejected.
    """

    a_tilde: tuple[float, ...]
    b_tilde: tuple[float, ...]
    counts: tuple[int, ...]
    regime: str

    def __post_init__(self) -> None:
        if not (len(self.a_tilde) == len(self.b_tilde) == len(self.counts)):
            raise InvalidInputError("a_tilde, b_tilde and counts must have equal length")
        if any(c < 1 for c in self.counts):
            raise InvalidInputError("multiplicities must be positive")
        if self.m > 0:
            if self.regime == "standard":
                if not max(self.a_tilde) < min(self.b_tilde):
                    raise RegimeError("standard regime requires max(a~) < min(b~)")
            elif self.regime == "continued":
                if not max(self.b_tilde) < min(self.a_tilde):
                    raise RegimeError(
                        "continued regime requires max(b~) < min(a~); "
                        "mixed orderings are not a determinantal ensemble here")
            else:
                raise InvalidInputError(f"unknown regime {self.regime!r}")

    @property
    def m(self) -> int:
        return int(sum(self.counts))

    @staticmethod
    def from_points(a_tilde, b_tilde) -> "WandererConfig":
        a = tuple(float(x) for x in a_tilde)
        b = tuple(float(x) for x in b_tilde)
        if len(a) != len(b):
            raise InvalidInputError("need equally many start and target points")
        if not a:
            return WandererConfig((), (), (), "standard")
        regime = "standard" if max(a) < min(b) else "continued"
        return WandererConfig(a, b, (1,) * len(a), regime)

    @staticmethod
    def coincident(m: int, a: float, b: float) -> "WandererConfig":
        if m < 0:
            raise InvalidInputError("m must be nonnegative")
        if m == 0:
            return WandererConfig((), (), (), "standard")
        regime = "standard" if a < b else "continued"
        if a == b:
            raise RegimeError("coincident a~ = b~ is neither regime")
        return WandererConfig((float(a),), (float(b),), (int(m),), regime)

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (np.asarray(self.a_tilde, dtype=float),
                np.asarray(self.b_tilde, dtype=float),
                np.asarray(self.counts, dtype=float))


# ---------------------------------------------------------------------------
# scalar pieces
# ---------------------------------------------------------------------------

def heat_term(p1: SpaceTimePoint, p2: SpaceTimePoint) -> float:
    """-1(t2>t1)/sqrt(4п(t2-t1)) * exp(-(x2-x1)^2/(4 dt) - dt(x2+x1)/2 + dt^3/12)."""
    sign, log_abs = _heat_log(p1, p2)
    return 0.0 if sign == 0.0 else sign * math.exp(log_abs)


def _heat_log(p1: SpaceTimePoint, p2: SpaceTimePoint) -> tuple[float, float]:
    dt = p2.tau - p1.tau
    if dt <= 0.0:
        return 0.0, -math.inf
    expo = (-(p2.xi - p1.xi) ** 2 / (4.0 * dt)
            - 0.5 * dt * (p2.xi + p1.xi) + dt ** 3 / 12.0)
    return -1.0, expo - 0.5 * math.log(4.0 * math.pi * dt)


def conjugation_factor(tau: float, xi: float) -> float:
    """f(tau, xi) = exp(tau^3/3 - xi*tau); conjugating by f is gap-invariant."""
    return math.exp(tau ** 3 / 3.0 - xi * tau)


def _cubic_exponent(nodes: np.ndarray, tau: float, xi: float) -> np.ndarray:
    z = nodes - tau
    return -z ** 3 / 3.0 + xi * z


def _pole_exponent(nodes: np.ndarray, a: np.ndarray, b: np.ndarray,
                   counts: np.ndarray) -> np.ndarray:
    out = np.zeros_like(nodes)
    for ak, bk, ck in zip(a, b, counts):
        out = out + ck * (np.log(nodes - bk) - np.log(nodes - ak))
    return out


def _guard_poles(nodes: np.ndarray, poles, tol: float = 1e-9) -> None:
    for p in poles:
        if np.min(np.abs(nodes - p)) < tol:
            raise PoleOnContourError(f"pole {p} within {tol} of a quadrature node")


# ---------------------------------------------------------------------------
# cached contour discretizations
# ---------------------------------------------------------------------------

def _wedge_rule(vertex: float, radius: float, opening: str, order: int):
    from .complexpath import _wedge
    path = _wedge(vertex, radius, opening, "airy_right" if opening == "left" else "airy_left")
    r = path.discretize(order)
    return r.nodes, r.weights


@lru_cache(maxsize=64)
def _airy_pair(sep: float, radius: float, order: int):
    zw, ww = _wedge_rule(-sep, radius, "left", order)
    zt, wt = _wedge_rule(+sep, radius, "right", order)
    coup = eng.coupling_inverse_difference(zw, zt)
    return zw, ww, zt, wt, coup


@lru_cache(maxsize=256)
def _pole_pair(v_gt: float, v_lt: float, radius: float, order: int):
    zw, ww = _wedge_rule(v_gt, radius, "left", order)
    zt, wt = _wedge_rule(v_lt, radius, "right", order)
    return zw, ww, zt, wt


def _auto_radius(radius: float, xis, taus) -> float:
    xi_max = max(abs(x) for x in xis) if xis else 0.0
    tau_max = max(abs(t) for t in taus) if taus else 0.0
    return max(radius, 2.2 * math.sqrt(xi_max + 1.0) + 3.0 * tau_max + 6.0)


def _airy_part(p1: SpaceTimePoint, p2: SpaceTimePoint, order: int,
               radius: float) -> eng.ScaledValue:
    """Double integral part of the extended Airy kernel (m = 0)."""
    r = _auto_radius(radius, (p1.xi, p2.xi), (p1.tau, p2.tau))
    zw, ww, zt, wt, coup = _airy_pair(SEPARATION, r, order)
    log_num = _cubic_exponent(zw, p2.tau, p2.xi)
    log_den = _cubic_exponent(zt, p1.tau, p1.xi)
    return eng.pair_integral(zw, ww, zt, wt, log_num, log_den, coup)


def extended_airy(p1: SpaceTimePoint, p2: SpaceTimePoint, *,
                  order: int = DEFAULT_ORDER, radius: float = AIRY_RADIUS) -> KernelValue:
    """Extended Airy kernel: heat term plus the m = 0 double contour integral."""
    total = eng.scaled_from_log(*_heat_log(p1, p2)) + _airy_part(p1, p2, order, radius)
    return KernelValue.wrap(total.to_complex())


# ---------------------------------------------------------------------------
# wanderer kernel (standard regime)
# ---------------------------------------------------------------------------

def _wanderer_scaled(cfg: WandererConfig, p1: SpaceTimePoint, p2: SpaceTimePoint,
                     *, order: int, radius: float, separation: float,
                     strategy: str) -> eng.ScaledValue:
    a, b, counts = cfg.arrays()
    if cfg.m == 0:
        return eng.scaled_from_log(*_heat_log(p1, p2)) + _airy_part(p1, p2, order, radius)
    cap = 1.5 + math.sqrt(max(abs(p1.xi), abs(p2.xi), 1.0))
    r = _auto_radius(radius, (p1.xi, p2.xi), (p1.tau, p2.tau))
    gap = float(np.min(b)) - float(np.max(a)) if cfg.regime == "standard" else -1.0
    if strategy == "auto":
        strategy = "direct" if gap >= 1.2 else "split"
    if strategy == "direct":
        if cfg.regime != "standard" or gap < 0.15:
            raise RegimeError("direct evaluation needs the standard regime "
                              "with a usable pole gap; use the split route")
        sep = min(separation, 0.45 * gap)
        v_gt = max(float(np.max(a)) + sep, min(-cap, float(np.min(b)) - sep - 0.2))
        v_lt = min(float(np.min(b)) - sep, max(+cap, v_gt + 0.2))
        zw, ww, zt, wt = _pole_pair(v_gt, v_lt, r, order)
        _guard_poles(zw, a)
        _guard_poles(zt, b)
        log_num = _cubic_exponent(zw, p2.tau, p2.xi) + _pole_exponent(zw, a, b, counts)
        log_den = _cubic_exponent(zt, p1.tau, p1.xi) + _pole_exponent(zt, a, b, counts)
        coup = eng.coupling_inverse_difference(zw, zt)
        val = eng.pair_integral(zw, ww, zt, wt, log_num, log_den, coup)
        return eng.scaled_from_log(*_heat_log(p1, p2)) + val
    if strategy == "split":
        airy = eng.scaled_from_log(*_heat_log(p1, p2)) + _airy_part(p1, p2, order, radius)
        v_gt = max(float(np.max(a)) + separation, -cap)
        v_lt = min(float(np.min(b)) - separation, +cap)
        zw, ww, zt, wt = _pole_pair(v_gt, v_lt, r, order)
        _guard_poles(zw, a)
        _guard_poles(zt, b)
        log_num = _cubic_exponent(zw, p2.tau, p2.xi)
        log_den = _cubic_exponent(zt, p1.tau, p1.xi)
        corr = eng.pair_integral_corrected(zw, ww, zt, wt, log_num, log_den,
                                           a, b, counts)
        return airy + corr
    raise InvalidInputError(f"unknown strategy {strategy!r}")


def wanderer_kernel(cfg: WandererConfig, p1: SpaceTimePoint, p2: SpaceTimePoint, *,
                    order: int = DEFAULT_ORDER, radius: float = AIRY_RADIUS,
                    separation: float = SEPARATION, strategy: str = "auto") -> KernelValue:
    """Extended kernel of the Airy process with m wanderers (standard regime)."""
    if cfg.m > 0 and cfg.regime != "standard":
        raise RegimeError("wanderer_kernel needs the standard regime; "
                          "use continued_wanderer_kernel for b~ < a~")
    val = _wanderer_scaled(cfg, p1, p2, order=order, radius=radius,
                           separation=separation, strategy=strategy)
    return KernelValue.wrap(val.to_complex())


# ---------------------------------------------------------------------------
# continued kernel (analytic continuation to b~ < a~, one time)
# ---------------------------------------------------------------------------

def _loop_rules(cfg: WandererConfig, n_nodes: int = 512):
    """Counterclockwise circles around the a-poles and the b-poles.

    The a-loop belongs to the upward w-path and the b-loop to the *downward*
    wt-path, which is why both residue loops carry the counterclockwise
    orientation (validated to machine precision against the entire
    decomposition route).
    """
    a, b, _ = cfg.arrays()
    gap = float(np.min(a) - np.max(b))
    ca = 0.5 * float(np.min(a) + np.max(a))
    cb = 0.5 * float(np.min(b) + np.max(b))
    spread_a = float(np.max(a) - np.min(a))
    spread_b = float(np.max(b) - np.min(b))
    ra = 0.5 * spread_a + 0.30 * gap
    rb = 0.5 * spread_b + 0.30 * gap
    mid = 0.5 * (float(np.min(a)) + float(np.max(b)))
    delta = 0.5 * (0.13 * gap - 0.077 * max(spread_a, spread_b))
    if delta <= 0.01 * gap:
        raise NumericalFailureError(
            "loop contours cannot clear the wedge legs for this endpoint spread")
    # wedge legs must clear the opposite circle
    for c, rad in ((ca, ra), (cb, rb)):
        if (abs(c - mid) - delta) * math.sin(math.pi / 3.0) <= rad + 0.02 * gap:
            raise NumericalFailureError(
                "loop contours cannot clear the wedge legs for this endpoint spread")
    la = circle_rule(ca, ra, n_nodes)
    lb = circle_rule(cb, rb, n_nodes)
    return mid, delta, la, lb


def _continued_loops_scaled(cfg: WandererConfig, xi1: float, xi2: float, *,
                            order: int, radius: float) -> eng.ScaledValue:
    a, b, counts = cfg.arrays()
    r = _auto_radius(radius, (xi1, xi2), (0.0,))
    mid, delta, loop_a, loop_b = _loop_rules(cfg)
    zw_w, ww_w = _wedge_rule(mid - delta, r, "left", order)
    zt_w, wt_w = _wedge_rule(mid + delta, r, "right", order)
    zw = np.concatenate([zw_w, loop_a.nodes])
    ww = np.concatenate([ww_w, loop_a.weights])
    zt = np.concatenate([zt_w, loop_b.nodes])
    wt = np.concatenate([wt_w, loop_b.weights])
    _guard_poles(zw, a)
    _guard_poles(zt, b)
    log_num = _cubic_exponent(zw, 0.0, xi2) + _pole_exponent(zw, a, b, counts)
    log_den = _cubic_exponent(zt, 0.0, xi1) + _pole_exponent(zt, a, b, counts)
    coup = eng.coupling_inverse_difference(zw, zt)
    return eng.pair_integral(zw, ww, zt, wt, log_num, log_den, coup)


def _geometric_panels(outer: complex, levels: int) -> list[tuple[complex, complex]]:
    pts = [outer * 0.25 ** k for k in range(levels)] + [0.0]
    pts.reverse()
    return list(zip(pts[:-1], pts[1:]))


def _star_rules(a: float, b: float, *, order: int, levels: int = 12,
                wedge_arm: float | None = None, loop_arm: float | None = None):
    """Eight-ray star through the origin for the continued kernel.

    The w path = upward wedge along e^{±3iп/5} plus the legs (at ±п/5) of a
    counterclockwise loop around the a-pole stretched through the origin; the
    wt path = downward wedge along e^{±2iп/5} plus the ±4п/5 legs of the
    counterclockwise loop around b.  Arm lengths default to the descent-valid
    window of the cusp phase: the loop legs stop near the dip of Re F before
    the cubic growth takes over, so the discarded closure around the pole is
    exponentially suppressed once m is a few dozen.
    """
    scale = 0.5 * (abs(a) + abs(b))
    if wedge_arm is None:
        wedge_arm = 2.4 * scale
    if loop_arm is None:
        loop_arm = 2.0 * scale
    e = cmath.exp
    p = math.pi

    def leg(angle: float, arm: float, outward: bool):
        panels = _geometric_panels(arm * e(1j * angle), levels)
        if not outward:
            panels = [(q, pp) for pp, q in reversed(panels)]
        return panels

    segs_w = (leg(-0.6 * p, wedge_arm, False) + leg(0.6 * p, wedge_arm, True)
              + leg(-0.2 * p, loop_arm, True) + leg(0.2 * p, loop_arm, False))
    segs_t = (leg(0.4 * p, wedge_arm, False) + leg(-0.4 * p, wedge_arm, True)
              + leg(-0.8 * p, loop_arm, False) + leg(0.8 * p, loop_arm, True))

    def rule(segs):
        ns, ws = [], []
        for s, t in segs:
            z, w = segment_rule(s, t, order)
            ns.append(z)
            ws.append(w)
        return np.concatenate(ns), np.concatenate(ws)

    return rule(segs_w), rule(segs_t)


def _continued_star_scaled(cfg: WandererConfig, xi1: float, xi2: float, *,
                           order: int) -> eng.ScaledValue:
    a, b, counts = cfg.arrays()
    if len(a) != 1:
        raise InvalidInputError("star contours support coincident endpoints only")
    (zw, ww), (zt, wt) = _star_rules(float(a[0]), float(b[0]), order=order)
    _guard_poles(zw, a)
    _guard_poles(zt, b)
    log_num = _cubic_exponent(zw, 0.0, xi2) + _pole_exponent(zw, a, b, counts)
    log_den = _cubic_exponent(zt, 0.0, xi1) + _pole_exponent(zt, a, b, counts)
    coup = eng.coupling_inverse_difference(zw, zt)
    return eng.pair_integral(zw, ww, zt, wt, log_num, log_den, coup)


def continued_wanderer_kernel(cfg: WandererConfig, xi1: float, xi2: float, *,
                              order: int = DEFAULT_ORDER, radius: float = AIRY_RADIUS,
                              variant: str = "auto",
                              log_prefactor: float = 0.0) -> KernelValue:
    """Analytic continuation of the one-time kernel to the regime b~ < a~.

    ``variant``: ``loops`` integrates over wedges through the pole gap plus a
    loop around each endpoint family (reliable for small m); ``star``
    integrates over the stretched eight-ray geometry (the large-m route,
    accurate near the quintic scaling window); ``split`` uses the
    entire-in-endpoints decomposition.  ``auto`` picks loops for m <= 8 and
    star beyond.
    """
    if cfg.m == 0:
        z = SpaceTimePoint(0.0, xi1), SpaceTimePoint(0.0, xi2)
        return extended_airy(z[0], z[1], order=order, radius=radius)
    if cfg.regime != "standard" and cfg.regime != "continued":
        raise InvalidInputError(f"unknown regime {cfg.regime!r}")
    if cfg.regime == "standard":
        raise RegimeError("continued_wanderer_kernel needs b~ < a~; "
                          "use wanderer_kernel for the standard ordering")
    if variant == "auto":
        variant = "loops" if cfg.m <= 8 else "star"
    if variant == "loops":
        val = _continued_loops_scaled(cfg, xi1, xi2, order=order, radius=radius)
    elif variant == "star":
        val = _continued_star_scaled(cfg, xi1, xi2, order=order)
    elif variant == "split":
        p1, p2 = SpaceTimePoint(0.0, xi1), SpaceTimePoint(0.0, xi2)
        val = _wanderer_scaled(cfg, p1, p2, order=order, radius=radius,
                               separation=SEPARATION, strategy="split")
    else:
        raise InvalidInputError(f"unknown contour variant {variant!r}")
    val = eng.ScaledValue(val.mantissa, val.log_scale + log_prefactor)
    return KernelValue.wrap(val.to_complex())


# ---------------------------------------------------------------------------
# single-contour limit functions (used by the decomposition oracles)
# ---------------------------------------------------------------------------

def phi_single(xi: float, pole: float, power: int = 1, *, tau: float = 0.0,
               order: int = DEFAULT_ORDER, radius: float = AIRY_RADIUS) -> complex:
    """(1/2пi) ∫_{G_{pole>}} e^{-(w-tau)^3/3 + xi (w-tau)} / (w-pole)^power dw."""
    cap = 1.5 + math.sqrt(max(abs(xi), 1.0))
    v = max(pole + SEPARATION, -cap)
    r = _auto_radius(radius, (xi,), (tau,))
    z, w = _wedge_rule(v, max(r, abs(pole) + 2.0), "left", order)
    log_f = _cubic_exponent(z, tau, xi) - power * np.log(z - pole)
    s = float(np.max(log_f.real))
    return complex(np.sum(w * np.exp(log_f - s))) * math.exp(s) / (2j * math.pi)


def psi_single(xi: float, pole: float, power: int = 1, *, tau: float = 0.0,
               order: int = DEFAULT_ORDER, radius: float = AIRY_RADIUS) -> complex:
    """(1/2пi) ∫_{G_{<pole}} e^{+(w-tau)^3/3 - xi (w-tau)} / (w-pole)^power dw."""
    cap = 1.5 + math.sqrt(max(abs(xi), 1.0))
    v = min(pole - SEPARATION, cap)
    r = _auto_radius(radius, (xi,), (tau,))
    z, w = _wedge_rule(v, max(r, abs(pole) + 2.0), "right", order)
    log_f = -_cubic_exponent(z, tau, xi) - power * np.log(z - pole)
    s = float(np.max(log_f.real))
    return complex(np.sum(w * np.exp(log_f - s))) * math.exp(s) / (2j * math.pi)


# ---------------------------------------------------------------------------
# Pearcey kernel
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def _pearcey_pair(radius: float, epsilon: float, order: int):
    from .complexpath import build_pearcey_contours
    vert, cross = build_pearcey_contours(radius, epsilon)
    rv, rc = vert.discretize(order), cross.discretize(order)
    coup = eng.coupling_inverse_difference(rv.nodes, rc.nodes)
    return rv, rc, coup


def _quartic(nodes: np.ndarray, theta: float, v: float) -> np.ndarray:
    return -nodes ** 4 / 4.0 + 0.5 * theta * nodes ** 2 - v * nodes


def pearcey_kernel(theta1: float, v1: float, theta2: float, v2: float, *,
                   order: int = DEFAULT_ORDER, radius: float = PEARCEY_RADIUS,
                   epsilon: float = 0.25) -> KernelValue:
    """Extended Pearcey kernel: Gaussian term plus the iR x Gamma_x integral."""
    gauss = 0.0
    if theta2 > theta1:
        dt = theta2 - theta1
        gauss = -math.exp(-(v2 - v1) ** 2 / (2.0 * dt)) / math.sqrt(2.0 * math.pi * dt)
    rv, rc, coup = _pearcey_pair(radius, epsilon, order)
    log_num = _quartic(rv.nodes, theta2, v2)
    log_den = _quartic(rc.nodes, theta1, v1)
    val = eng.pair_integral(rv.nodes, rv.weights, rc.nodes, rc.weights,
                            log_num, log_den, coup)
    total = eng.ScaledValue(complex(gauss), 0.0) + val
    return KernelValue.wrap(total.to_complex())


def pearcey_kernel_closing(theta1: float, v1: float, theta2: float, v2: float, *,
                           order: int = DEFAULT_ORDER,
                           radius: float = PEARCEY_RADIUS) -> KernelValue:
    """Kernel of the closing cusp: the opening kernel under the involution
    v1 <-> v2, theta1 <-> -theta2 (an exact contour substitution z -> -z~)."""
    return pearcey_kernel(-theta2, v2, -theta1, v1, order=order, radius=radius)


# ---------------------------------------------------------------------------
# quintic kernel
# ---------------------------------------------------------------------------

@lru_cache(maxsize=16)
def _quintic_pair(radius: float, order: int, variant: str):
    from .complexpath import build_quintic_contours
    cpath, ctpath = build_quintic_contours(radius)
    if variant == "loop-reversed":
        # flip the orientation of the loop legs of both paths: one of the
        # alternative path/orientation choices the positivity probe explores
        def flip(path: ContourPath, keep: int) -> ContourPath:
            segs = list(path.segments)
            head, tail = segs[:keep], segs[keep:]
            tail = [(b, a) for a, b in reversed(tail)]
            return ContourPath(path.label, tuple(head + tail), path.radius)

        n_wedge = len(cpath.segments) // 2
        cpath, ctpath = flip(cpath, n_wedge), flip(ctpath, n_wedge)
    elif variant != "default":
        raise InvalidInputError(f"unknown quintic contour variant {variant!r}")
    rc, rt = cpath.discretize(order), ctpath.discretize(order)
    coup = eng.coupling_inverse_difference(rc.nodes, rt.nodes)
    return rc, rt, coup


def _quintic_exponent(nodes: np.ndarray, theta: float, eta: float, v: float) -> np.ndarray:
    return (0.4 * nodes ** 5 - theta * nodes ** 3 / 3.0 - eta * nodes ** 2 + v * nodes)


def quintic_kernel(theta: float, eta: float, v1: float, v2: float, *,
                   order: int = DEFAULT_ORDER, radius: float = QUINTIC_RADIUS,
                   variant: str = "default") -> KernelValue:
    """Quintic kernel on the eight-ray star (conjectural process at merged cusps)."""
    rc, rt, coup = _quintic_pair(radius, order, variant)
    log_num = _quintic_exponent(rc.nodes, theta, eta, v2)
    log_den = _quintic_exponent(rt.nodes, theta, eta, v1)
    val = eng.pair_integral(rc.nodes, rc.weights, rt.nodes, rt.weights,
                            log_num, log_den, coup)
    return KernelValue.wrap(val.to_complex())
