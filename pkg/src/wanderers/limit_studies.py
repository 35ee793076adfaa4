"""Convergence harnesses for the three limit theorems.

* finite-to-wanderer: the rescaled finite-n kernel against the wanderer
  kernel (rate ~ n^{-1/3});
* wanderer-to-pearcey: the wanderer kernel at cusp-rescaled arguments, times
  kappa m^{-1/12} and the Gaussian conjugation Q(2)/Q(1), against the Pearcey
  kernel (rate between m^{-1/4} and m^{-1/5});
* continued-to-quintic: the analytically continued kernel at the quintic
  scaling, times 2^{-1/3} m^{-2/15}, against the quintic kernel (rate
  ~ m^{-2/5}).

The cusp-rescaled kernel at m up to 1e7 cannot be integrated on the
pole-window wedges (the integrand there dwarfs the answer by e^{O(m)}), so a
saddle-adapted contour pair is used: the wt path is the cross through the
critical point W_c = w_c m^{1/3} (right chevron at W_c, left chevron indented
by twice the offset, its backward arms truncated inside their descent-valid
window), and the w path is a vertical line offset a quarter of the local
Pearcey unit m^{1/12}/kappa to the left, exactly the geometry that collapses
onto the Pearcey contours.  The closing cusp is evaluated through the exact
finite-m involution

    K_m^{a~,b~}(t1,x1;t2,x2) = K_m^{-b~,-a~}(-t2,x2;-t1,x1),

a plain substitution w -> -w~ in the double integral, which sends the
sigma_- scaling of (alpha, beta) to the sigma_+ scaling of (-beta, -alpha)
and the limit to the involuted (closing-cusp) Pearcey kernel.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import _integrate as eng
from .complexpath import DEFAULT_ORDER, graded_segments, segment_rule
from .cusp_geometry import (CuspGeometry, pearcey_conjugation_log,
                            pearcey_prefactor_log, quintic_prefactor_log,
                            quintic_rescale, pearcey_rescale, solve_cusp)
from .errors import DomainError, InvalidInputError
from .kernels_limit import (SpaceTimePoint, WandererConfig, KernelValue,
                            _cubic_exponent, _heat_log, _pole_exponent,
                            continued_wanderer_kernel, pearcey_kernel,
                            pearcey_kernel_closing, quintic_kernel,
                            wanderer_kernel)

PEARCEY_ARM_Z = 12.0   # contour arm length in local Pearcey units
PEARCEY_EPS_Z = 0.25   # vertical-line offset in local Pearcey units


def _rule_of_segments(segs, order):
    ns, ws = [], []
    for a, b in segs:
        z, w = segment_rule(a, b, order)
        ns.append(z)
        ws.append(w)
    return np.concatenate(ns), np.concatenate(ws)


def _cusp_saddle_rules(g: CuspGeometry, m: int, order: int):
    """Vertical (w) and cross (wt) rules through W_c for the opening cusp."""
    m13 = float(m) ** (1.0 / 3.0)
    unit = float(m) ** (1.0 / 12.0) / g.kappa          # local Pearcey length
    wc = g.w_c_plus * m13
    eps = PEARCEY_EPS_Z * unit
    arm = PEARCEY_ARM_Z * unit
    # backward arms must stay inside the proven descent window of -F0
    zeta0 = (4.0 * (g.x - 1.0) * (2.0 - g.x)
             / (-g.x ** 2 + 6.0 * g.x - 4.0))
    c_w = abs(g.sigma_plus) * g.x / (2.0 - g.x)
    arm_back = min(arm, 0.85 * zeta0 * c_w * math.sqrt(2.0) * m13)
    e = cmath.exp
    q = math.pi / 4.0
    lv = 4
    vert = (graded_segments(wc - eps - 1j * arm, wc - eps, False, levels=lv)
            + graded_segments(wc - eps, wc - eps + 1j * arm, True, levels=lv))
    cross = (graded_segments(wc + arm * e(1j * q), wc, False, levels=lv)
             + graded_segments(wc, wc + arm * e(-1j * q), True, levels=lv)
             + graded_segments(wc - 2 * eps + arm_back * e(3j * q), wc - 2 * eps,
                               False, levels=lv)
             + graded_segments(wc - 2 * eps, wc - 2 * eps + arm_back * e(-3j * q),
                               True, levels=lv))
    return _rule_of_segments(vert, order), _rule_of_segments(cross, order)


def cusp_scaled_wanderer(g: CuspGeometry, branch: str, m: int,
                         theta1: float, v1: float, theta2: float, v2: float, *,
                         order: int = DEFAULT_ORDER) -> float:
    """kappa m^{-1/12} Q(2)/Q(1) K_m at the branch scaling of (theta_i, v_i).

    This is the quantity that converges to the (opening or involuted/closing)
    Pearcey kernel at (theta_1, v_1; theta_2, v_2).
    """
    if m < 1:
        raise DomainError("m must be a positive integer")
    if branch == "minus":
        g_flip = solve_cusp(-g.beta, -g.alpha)
        return cusp_scaled_wanderer(g_flip, "plus", m, -theta2, v2, -theta1, v1,
                                    order=order)
    if branch != "plus":
        raise DomainError(f"branch must be 'plus' or 'minus', got {branch!r}")
    tau1, xi1, a_t, b_t = pearcey_rescale(g, "plus", theta1, v1, m)
    tau2, xi2, _, _ = pearcey_rescale(g, "plus", theta2, v2, m)
    log_pref = (pearcey_prefactor_log(g, m)
                + pearcey_conjugation_log(g, "plus", theta2, v2, m)
                - pearcey_conjugation_log(g, "plus", theta1, v1, m))
    (zw, ww), (zt, wt) = _cusp_saddle_rules(g, m, order)
    a = np.array([a_t])
    b = np.array([b_t])
    counts = np.array([float(m)])
    log_num = _cubic_exponent(zw, tau2, xi2) + _pole_exponent(zw, a, b, counts)
    log_den = _cubic_exponent(zt, tau1, xi1) + _pole_exponent(zt, a, b, counts)
    coup = eng.coupling_inverse_difference(zw, zt)
    val = eng.pair_integral(zw, ww, zt, wt, log_num, log_den, coup)
    val = eng.ScaledValue(val.mantissa, val.log_scale + log_pref)
    p1 = SpaceTimePoint(tau1, xi1)
    p2 = SpaceTimePoint(tau2, xi2)
    hs, hl = _heat_log(p1, p2)
    total = val + eng.scaled_from_log(hs, hl + log_pref)
    return KernelValue.wrap(total.to_complex()).real_projection


# ---------------------------------------------------------------------------
# the three studies
# ---------------------------------------------------------------------------

PEARCEY_GRID = (
    (0.0, -1.0, 0.0, 0.0), (0.0, -1.0, 0.0, 1.0), (0.0, 0.0, 0.0, 1.5),
    (0.0, 1.0, 0.0, -1.0), (0.0, 0.5, 0.0, 0.5),
    (-0.3, 0.5, 0.4, -0.5), (-0.3, -0.5, 0.4, 0.5), (0.2, 0.0, 0.6, 0.0),
)

QUINTIC_GRID = (
    (0.0, 0.0, 0.0, 0.0), (0.0, 0.0, 0.5, -0.5), (0.0, 0.0, -0.5, 0.5),
    (0.4, 0.2, 0.3, 0.1), (0.0, 0.3, -0.5, 0.5), (0.4, 0.0, 0.0, 0.8),
)

FINITE_GRID_XI = (-1.0, 0.0, 1.0)
FINITE_TAU_PAIRS = ((0.0, 0.0), (0.2, 0.5))


def loglog_slope(scales, errors) -> float:
    """Least-squares slope of log10(error) against log10(scale)."""
    lx = np.log10(np.asarray(scales, dtype=float))
    ly = np.log10(np.asarray(errors, dtype=float))
    return float(np.polyfit(lx, ly, 1)[0])


def study_wanderer_to_pearcey(alpha: float, beta: float, branch: str,
                              m_list=(10 ** 3, 10 ** 5, 10 ** 7), *,
                              grid=PEARCEY_GRID,
                              order: int = DEFAULT_ORDER) -> dict:
    """Sup-grid error of the rescaled wanderer kernel against the Pearcey kernel."""
    g = solve_cusp(alpha, beta)
    errors = []
    for m in m_list:
        worst = 0.0
        for (t1, v1, t2, v2) in grid:
            got = cusp_scaled_wanderer(g, branch, int(m), t1, v1, t2, v2, order=order)
            if branch == "plus":
                ref = pearcey_kernel(t1, v1, t2, v2).real_projection
            else:
                ref = pearcey_kernel_closing(t1, v1, t2, v2).real_projection
            worst = max(worst, abs(got - ref))
        errors.append(worst)
    return {"scales": list(m_list), "sup_errors": errors,
            "slope": loglog_slope(m_list, errors)}


def study_continued_to_quintic(m_list=(10 ** 3, 10 ** 5, 10 ** 7), *,
                               grid=QUINTIC_GRID,
                               order: int = DEFAULT_ORDER) -> dict:
    """Sup-grid error of the rescaled continued kernel against the quintic kernel."""
    errors = []
    for m in m_list:
        lp = quintic_prefactor_log(int(m))
        worst = 0.0
        for (th, eta, v1, v2) in grid:
            a_t, b_t, xi1 = quintic_rescale(th, eta, v1, int(m))
            _, _, xi2 = quintic_rescale(th, eta, v2, int(m))
            cfg = WandererConfig.coincident(int(m), a_t, b_t)
            got = continued_wanderer_kernel(cfg, xi1, xi2, variant="star",
                                            order=order,
                                            log_prefactor=lp).real_projection
            ref = quintic_kernel(th, eta, v1, v2).real_projection
            worst = max(worst, abs(got - ref))
        errors.append(worst)
    return {"scales": list(m_list), "sup_errors": errors,
            "slope": loglog_slope(m_list, errors)}


def study_finite_to_wanderer(n_list=(64, 512), m: int = 1, *,
                             a_tilde=(-0.5,), b_tilde=(0.5,),
                             order: int = DEFAULT_ORDER) -> dict:
    """Sup-grid error of the rescaled finite-n kernel against the wanderer kernel.

    The finite kernel is conjugated by f(tau, xi) = exp(tau^3/3 - xi tau)
    before the comparison, per the equivalence of the scaling limit.
    """
    from .kernels_finite import FiniteEnsemble, finite_kernel
    from .kernels_limit import conjugation_factor

    cfg = WandererConfig.from_points(a_tilde, b_tilde)
    errors = []
    for n in n_list:
        n = int(n)
        sq2n = math.sqrt(2.0 * n)
        pref = math.sqrt(2.0) * float(n) ** (1.0 / 6.0)
        a_phys = [sq2n * (1.0 + at / float(n) ** (1.0 / 3.0)) for at in a_tilde]
        b_phys = [sq2n * (1.0 - bt / float(n) ** (1.0 / 3.0)) for bt in b_tilde]
        ens = FiniteEnsemble(n=n, m=m, a=tuple(a_phys), b=tuple(b_phys))
        worst = 0.0
        for (tau1, tau2) in FINITE_TAU_PAIRS:
            for xi1 in FINITE_GRID_XI:
                for xi2 in FINITE_GRID_XI:
                    t1 = tau1 * float(n) ** (-1.0 / 3.0)
                    t2 = tau2 * float(n) ** (-1.0 / 3.0)
                    x1 = sq2n + (xi1 - tau1 ** 2) / (math.sqrt(2.0) * float(n) ** (1.0 / 6.0))
                    x2 = sq2n + (xi2 - tau2 ** 2) / (math.sqrt(2.0) * float(n) ** (1.0 / 6.0))
                    kf = finite_kernel(ens, t1, x1, t2, x2) / pref
                    kf *= conjugation_factor(tau2, xi2) / conjugation_factor(tau1, xi1)
                    kw = wanderer_kernel(cfg, SpaceTimePoint(tau1, xi1),
                                         SpaceTimePoint(tau2, xi2),
                                         order=order).real_projection
                    worst = max(worst, abs(kf - kw))
        errors.append(worst)
    return {"scales": list(n_list), "sup_errors": errors,
            "slope": loglog_slope(n_list, errors)}


def run_study(name: str, scale_list=None, **kw) -> dict:
    if name == "wanderer-to-pearcey":
        args = dict(alpha=-1.0, beta=1.0, branch="plus")
        args.update(kw)
        if scale_list is not None:
            args["m_list"] = scale_list
        return study_wanderer_to_pearcey(**args)
    if name == "continued-to-quintic":
        if scale_list is not None:
            kw["m_list"] = scale_list
        return study_continued_to_quintic(**kw)
    if name == "finite-to-wanderer":
        if scale_list is not None:
            kw["n_list"] = scale_list
        return study_finite_to_wanderer(**kw)
    raise InvalidInputError(f"unknown study {name!r}")
