"""Geometry of the two Pearcey cusps on the elliptic curve 4 s^6 x^4 - 2x + 3 = 0.

Given wanderer endpoint slopes alpha < beta, the cusp data is the unique
solution of

    beta - alpha = 4 x^{1/3} (2x-3)^{2/3} / (2 - x),   x in (3/2, 2),

with sigma_± = ∓((2x-3)/(4x^4))^{1/6} (sigma_+ < 0 labels the opening cusp).
The derived constants locate the two cusp tips in the rescaled wanderer
coordinates and carry the local Pearcey scales:

    T_± = (alpha+beta)/2 - 2 sigma_± / (2-x),
    X   = sigma_±^2 (1 - 2x)            (same for both branches),
    kappa = (2(x-1) / (|sigma_±| x^2))^{1/4},
    w_c  = sigma_± + T_±   (4-fold critical point of the phase),
    w_1  = T_± + sigma_± (3x-2)/(2-x)   (the spurious simple root),
    r    = 2 x^3 sigma^4 / (2-x) = (beta-alpha)/2.

As beta - alpha -> 0 the tips merge (x -> 3/2); the second real point of the
curve sits over x = infinity with (alpha, beta, X) = (2^{1/3}, -2^{1/3},
-2^{2/3}), where the phase acquires a 5-fold critical point at the origin:
the quintic regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError

CBRT2 = 2.0 ** (1.0 / 3.0)


def curve_residual(x: float, sigma: float) -> float:
    """4 sigma^6 x^4 - 2x + 3 (zero on the elliptic curve)."""
    return 4.0 * sigma ** 6 * x ** 4 - 2.0 * x + 3.0


def _gap_of_x(x: float) -> float:
    """beta - alpha = 4 sigma^4 x^3/(2-x) = (4x)^{1/3}(2x-3)^{2/3}/(2-x).

    Strictly increasing on (3/2, 2); the explicit form follows from the curve
    relation sigma^6 = (2x-3)/(4x^4).
    """
    return (4.0 * x) ** (1.0 / 3.0) * (2.0 * x - 3.0) ** (2.0 / 3.0) / (2.0 - x)


@dataclass(frozen=True)
class CuspGeometry:
    alpha: float
    beta: float
    x: float
    sigma_plus: float
    sigma_minus: float
    T_plus: float
    T_minus: float
    X: float
    kappa: float
    w_c_plus: float
    w_c_minus: float
    w_1_plus: float
    w_1_minus: float
    r: float
    #: x - 3/2 and 2 - x at full precision (x itself rounds them away near
    #: the interval ends, where the defining equations are most sensitive)
    x_minus_32: float = float("nan")
    two_minus_x: float = float("nan")

    def sigma(self, branch: str) -> float:
        return self.sigma_plus if branch == "plus" else self.sigma_minus

    def T(self, branch: str) -> float:
        return self.T_plus if branch == "plus" else self.T_minus

    def w_c(self, branch: str) -> float:
        return self.w_c_plus if branch == "plus" else self.w_c_minus

    def w_1(self, branch: str) -> float:
        return self.w_1_plus if branch == "plus" else self.w_1_minus

    def curve_residual_exact(self) -> float:
        """4 sigma^6 x^4 - 2x + 3 evaluated with the full-precision x - 3/2."""
        return 4.0 * self.sigma_plus ** 6 * self.x ** 4 - 2.0 * self.x_minus_32

    def gap_residual_exact(self) -> float:
        """(beta - alpha) - 4 sigma^4 x^3/(2-x), relative to the gap."""
        gap = self.beta - self.alpha
        return (gap - 4.0 * self.sigma_plus ** 4 * self.x ** 3 / self.two_minus_x) / gap


def _check_branch(branch: str) -> None:
    if branch not in ("plus", "minus"):
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")


def _bisect_geometric(fun, lo: float, hi: float, target: float) -> float:
    """Geometric bisection of an increasing fun on (lo, hi) for fun = target."""
    if not (fun(lo) <= target <= fun(hi)):
        raise DomainError("cusp gap outside the solvable bracket")
    for _ in range(220):
        mid = math.sqrt(lo * hi)
        if mid == lo or mid == hi:
            break
        if fun(mid) < target:
            lo = mid
        else:
            hi = mid
    return math.sqrt(lo * hi)


def solve_cusp(alpha: float, beta: float) -> CuspGeometry:
    """Solve the cusp system for alpha < beta by bisection on the monotone map.

    The unique x sits in (3/2, 2).  Narrow gaps push x toward 3/2 and wide
    gaps toward 2, where plain float64 bisection in x loses all the digits of
    the defining equations; the solve is therefore carried out in u = x - 3/2
    (narrow side) or z = 2 - x (wide side), both of which float64 resolves to
    full relative precision.
    """
    if not (alpha < beta):
        raise DomainError("solve_cusp needs alpha < beta")
    gap = beta - alpha

    def g_of_u(u: float) -> float:
        x = 1.5 + u
        return (4.0 * x) ** (1.0 / 3.0) * (2.0 * u) ** (2.0 / 3.0) / (0.5 - u)

    def g_of_z(z: float) -> float:
        x = 2.0 - z
        return (4.0 * x) ** (1.0 / 3.0) * (1.0 - 2.0 * z) ** (2.0 / 3.0) / z

    split = g_of_u(0.25)
    if gap <= split:
        u = _bisect_geometric(g_of_u, 1e-280, 0.25, gap)
        z = 0.5 - u
    else:
        z = _bisect_geometric(lambda t: -g_of_z(t), 1e-280, 0.25, -gap)
        u = 0.5 - z
    x = 1.5 + u
    s_abs = ((2.0 * u) / (4.0 * x ** 4)) ** (1.0 / 6.0)
    sp, sm = -s_abs, +s_abs
    mid_ab = 0.5 * (alpha + beta)
    tp = mid_ab - 2.0 * sp / z
    tm = mid_ab - 2.0 * sm / z
    big_x = s_abs ** 2 * (1.0 - 2.0 * x)
    kappa = (2.0 * (x - 1.0) / (s_abs * x ** 2)) ** 0.25
    return CuspGeometry(
        alpha=alpha, beta=beta, x=x, sigma_plus=sp, sigma_minus=sm,
        T_plus=tp, T_minus=tm, X=big_x, kappa=kappa,
        w_c_plus=sp + tp, w_c_minus=sm + tm,
        w_1_plus=tp + sp * (3.0 * x - 2.0) / z,
        w_1_minus=tm + sm * (3.0 * x - 2.0) / z,
        r=2.0 * x ** 3 * s_abs ** 4 / z,
        x_minus_32=u, two_minus_x=z,
    )


# ---------------------------------------------------------------------------
# steepest-descent phases
# ---------------------------------------------------------------------------

def phase_f0(g: CuspGeometry, branch: str) -> Callable[[np.ndarray], np.ndarray]:
    """F0(w) = -(w-T)^3/3 + X(w-T) + log(w-beta) - log(w-alpha)."""
    _check_branch(branch)
    t, bx = g.T(branch), g.X

    def f0(w):
        w = np.asarray(w, dtype=complex)
        return (-(w - t) ** 3 / 3.0 + bx * (w - t)
                + np.log(w - g.beta) - np.log(w - g.alpha))

    return f0


def phase_f0_derivatives(g: CuspGeometry, branch: str, w: complex) -> tuple[complex, ...]:
    """F0', F0'', F0''', F0'''' at w (analytic formulas)."""
    _check_branch(branch)
    t, bx = g.T(branch), g.X
    db, da = w - g.beta, w - g.alpha
    d1 = -(w - t) ** 2 + bx + 1.0 / db - 1.0 / da
    d2 = -2.0 * (w - t) - 1.0 / db ** 2 + 1.0 / da ** 2
    d3 = -2.0 + 2.0 / db ** 3 - 2.0 / da ** 3
    d4 = -6.0 / db ** 4 + 6.0 / da ** 4
    return d1, d2, d3, d4


def phase_f2(g: CuspGeometry, branch: str, theta: float) -> Callable[[np.ndarray], np.ndarray]:
    """F2(w, theta) = (1/2)((w-T)^2 - X) kappa^2 theta - (w-T) kappa^2 sigma theta."""
    _check_branch(branch)
    t, s, k2 = g.T(branch), g.sigma(branch), g.kappa ** 2

    def f2(w):
        w = np.asarray(w, dtype=complex)
        return 0.5 * ((w - t) ** 2 - g.X) * k2 * theta - (w - t) * k2 * s * theta

    return f2


def phase_f3(g: CuspGeometry, branch: str, v: float) -> Callable[[np.ndarray], np.ndarray]:
    """F3(w, v) = -(w-T) kappa v."""
    _check_branch(branch)
    t, k = g.T(branch), g.kappa

    def f3(w):
        w = np.asarray(w, dtype=complex)
        return -(w - t) * k * v

    return f3


def phase_f4(g: CuspGeometry, branch: str, theta: float) -> Callable[[np.ndarray], np.ndarray]:
    """F4(w, theta) = -(1/4)(w - T - sigma) kappa^4 theta^2."""
    _check_branch(branch)
    t, s, k4 = g.T(branch), g.sigma(branch), g.kappa ** 4

    def f4(w):
        w = np.asarray(w, dtype=complex)
        return -0.25 * (w - t - s) * k4 * theta ** 2

    return f4


def quintic_phase() -> Callable[[np.ndarray], np.ndarray]:
    """F(w) = -w^3/3 - 2^{2/3} w + log(w + 2^{1/3}) - log(w - 2^{1/3}).

    The phase of the merged-cusp point over x = infinity; F' has a 4-fold zero
    at the origin and the fifth derivative feeds the 2z^5/5 quintic exponent.
    """
    a, bx = CBRT2, -CBRT2 ** 2

    def f(w):
        w = np.asarray(w, dtype=complex)
        return -w ** 3 / 3.0 + bx * w + np.log(w + a) - np.log(w - a)

    return f


def quadruple_root_check(g: CuspGeometry, branch: str) -> dict:
    """Residuals of the 4-fold criticality of F0 at w_c (and at the quintic point).

    Returns relative residuals of F0', F0'', F0''' at w_c, the relative error
    of F0''''(w_c)/4! against (x-1)/(2 x^2 sigma), and for the branch-free
    quintic point the first four derivatives of the x = infinity phase at 0.
    """
    _check_branch(branch)
    wc = g.w_c(branch)
    s = g.sigma(branch)
    d1, d2, d3, d4 = phase_f0_derivatives(g, branch, complex(wc))
    t = g.T(branch)
    scale1 = abs(wc - t) ** 2 + abs(g.X) + 1.0 / abs(wc - g.beta) + 1.0 / abs(wc - g.alpha)
    scale2 = 2.0 * abs(wc - t) + 1.0 / abs(wc - g.beta) ** 2 + 1.0 / abs(wc - g.alpha) ** 2
    scale3 = 2.0 + 2.0 / abs(wc - g.beta) ** 3 + 2.0 / abs(wc - g.alpha) ** 3
    quartic = (g.x - 1.0) / (2.0 * g.x ** 2 * s)
    rep = {
        "d1_residual": abs(d1) / scale1,
        "d2_residual": abs(d2) / scale2,
        "d3_residual": abs(d3) / scale3,
        "quartic_residual": abs(d4 / 24.0 - quartic) / abs(quartic),
    }
    # derivatives of the quintic phase at the origin, exact zeros analytically
    a = CBRT2
    qd = (
        -CBRT2 ** 2 + 2.0 / a,
        -1.0 / a ** 2 + 1.0 / a ** 2,
        -2.0 + 2.0 / a ** 3 + 2.0 / a ** 3,
        -6.0 / a ** 4 + 6.0 / a ** 4,
    )
    rep["quintic_point_residuals"] = tuple(abs(v) for v in qd)
    rep["max_residual"] = max(rep["d1_residual"], rep["d2_residual"],
                              rep["d3_residual"], rep["quartic_residual"])
    return rep


# ---------------------------------------------------------------------------
# scaling maps into the limits
# ---------------------------------------------------------------------------

def pearcey_rescale(g: CuspGeometry, branch: str, theta: float, v: float,
                    m: int) -> tuple[float, float, float, float]:
    """Map Pearcey coordinates (theta, v) to wanderer coordinates at weight m.

    Returns (tau, xi, a_tilde, b_tilde) with a~ = alpha m^{1/3},
    b~ = beta m^{1/3},

        tau = T_± m^{1/3} + (1/2) kappa^2 theta m^{-1/6},
        xi  = X m^{2/3} - kappa^2 sigma_± theta m^{1/6} - kappa v m^{-1/12}.
    """
    _check_branch(branch)
    if m < 1:
        raise DomainError("m must be a positive integer")
    m13 = float(m) ** (1.0 / 3.0)
    k2 = g.kappa ** 2
    tau = g.T(branch) * m13 + 0.5 * k2 * theta * float(m) ** (-1.0 / 6.0)
    xi = (g.X * m13 ** 2 - k2 * g.sigma(branch) * theta * float(m) ** (1.0 / 6.0)
          - g.kappa * v * float(m) ** (-1.0 / 12.0))
    return tau, xi, g.alpha * m13, g.beta * m13


def pearcey_prefactor_log(g: CuspGeometry, m: int) -> float:
    """log(kappa m^{-1/12}), the prefactor matching the kernels."""
    return math.log(g.kappa) - math.log(float(m)) / 12.0


def pearcey_conjugation_log(g: CuspGeometry, branch: str, theta: float, v: float,
                            m: int) -> float:
    """log Q with Q = exp((1/2) kappa^2 (sigma^2 + X) theta m^{1/2} + kappa sigma v m^{1/4})."""
    _check_branch(branch)
    s = g.sigma(branch)
    return (0.5 * g.kappa ** 2 * (s ** 2 + g.X) * theta * math.sqrt(float(m))
            + g.kappa * s * v * float(m) ** 0.25)


def quintic_rescale(theta: float, eta: float, v: float,
                    m: int) -> tuple[float, float, float]:
    """Map quintic coordinates (theta, eta, v) to continued-regime wanderer data.

    Returns (a_tilde, b_tilde, xi); note b~ < a~ (continued regime):

        a~ = (2m)^{1/3} (+1 + theta m^{-2/5}/6 + eta m^{-3/5}/2),
        b~ = (2m)^{1/3} (-1 - theta m^{-2/5}/6 + eta m^{-3/5}/2),
        xi = -(2m)^{2/3} (1 - theta m^{-2/5}/6 - (v - theta^2/18) m^{-4/5}/2).
    """
    if m < 1:
        raise DomainError("m must be a positive integer")
    c = (2.0 * float(m)) ** (1.0 / 3.0)
    t_term = theta * float(m) ** (-0.4) / 6.0
    e_term = 0.5 * eta * float(m) ** (-0.6)
    a_t = c * (1.0 + t_term + e_term)
    b_t = c * (-1.0 - t_term + e_term)
    xi = -c ** 2 * (1.0 - t_term - 0.5 * (v - theta ** 2 / 18.0) * float(m) ** (-0.8))
    return a_t, b_t, xi


def quintic_prefactor_log(m: int) -> float:
    """log(2^{-1/3} m^{-2/15}), the prefactor matching the kernels."""
    return -math.log(2.0) / 3.0 - 2.0 / 15.0 * math.log(float(m))
