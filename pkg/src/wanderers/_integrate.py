"""Scale-safe double contour integration.

All kernels here have the shape

    (1/(2пi)^2) ∬ e^{A(w)} e^{-B(wt)} C(w, wt) dwt dw

where A and B are complex "log-integrands" whose real parts can reach ±1e7
in the cusp limit studies, and C is either 1/(w - wt) or the regularized
wanderer coupling (P^m - 1)/(w - wt).  Sums are always taken on mantissas
bounded by 1, with the common scale tracked as a separate real log.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI_I_SQ = -4.0 * math.pi ** 2


def log1p_c(z: np.ndarray) -> np.ndarray:
    """Complex log(1+z), accurate for small |z|."""
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    small = np.abs(z) < 1e-4
    zs = z[small]
    out[small] = zs * (1.0 - zs * (0.5 - zs * (1.0 / 3.0 - 0.25 * zs)))
    out[~small] = np.log(1.0 + z[~small])
    return out


def expm1_c(z: np.ndarray) -> np.ndarray:
    """Complex exp(z)-1, accurate for small |z|."""
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    small = np.abs(z) < 1e-4
    zs = z[small]
    out[small] = zs * (1.0 + zs * (0.5 + zs * (1.0 / 6.0 + zs / 24.0)))
    out[~small] = np.exp(z[~small]) - 1.0
    return out


@dataclass
class ScaledValue:
    """mantissa * e^{log_scale}; mantissa kept O(1) whenever possible."""

    mantissa: complex
    log_scale: float

    def to_complex(self) -> complex:
        if self.mantissa == 0:
            return 0.0 + 0.0j
        s = self.log_scale + math.log(abs(self.mantissa))
        if s < -700.0:
            return 0.0 + 0.0j
        if s > 700.0:
            raise OverflowError(
                f"kernel value overflows float64 (log magnitude {s:.1f}); "
                "supply a log_prefactor")
        return self.mantissa * math.exp(self.log_scale)

    def __add__(self, other: "ScaledValue") -> "ScaledValue":
        if other.mantissa == 0:
            return self
        if self.mantissa == 0:
            return other
        if self.log_scale >= other.log_scale:
            hi, lo = self, other
        else:
            hi, lo = other, self
        shift = lo.log_scale - hi.log_scale
        extra = lo.mantissa * math.exp(shift) if shift > -745.0 else 0.0
        return ScaledValue(hi.mantissa + extra, hi.log_scale)


def scaled_from_log(sign: float, log_abs: float) -> ScaledValue:
    if sign == 0.0 or log_abs == -math.inf:
        return ScaledValue(0.0, 0.0)
    return ScaledValue(complex(sign), log_abs)


def pair_integral(nodes_w: np.ndarray, weights_w: np.ndarray,
                  nodes_t: np.ndarray, weights_t: np.ndarray,
                  log_num: np.ndarray, log_den: np.ndarray,
                  coupling: np.ndarray) -> ScaledValue:
    """(1/(2пi)^2) * sum_ij u_i C_ij v_j with u = w * e^{log_num},
    v = wt * e^{-log_den}, evaluated at a common safe scale."""
    s_a = float(np.max(log_num.real))
    s_b = float(np.min(log_den.real))
    u = weights_w * np.exp(log_num - s_a)
    v = weights_t * np.exp(-(log_den - s_b))
    val = u @ coupling @ v
    return ScaledValue(val / TWO_PI_I_SQ, s_a - s_b)


def coupling_inverse_difference(nodes_w: np.ndarray, nodes_t: np.ndarray) -> np.ndarray:
    """Matrix 1/(w_i - wt_j)."""
    return 1.0 / (nodes_w[:, None] - nodes_t[None, :])


def wanderer_log_ratio(nodes_w: np.ndarray, nodes_t: np.ndarray,
                       poles_a: np.ndarray, poles_b: np.ndarray,
                       counts: np.ndarray) -> np.ndarray:
    """log P with P = prod_k [((wt-a_k)(w-b_k)) / ((w-a_k)(wt-b_k))]^{c_k},
    written through log1p so that log P -> 0 smoothly as w -> wt.

    Any branch is acceptable: the counts are integers, so exp(m log P)
    reproduces the single-valued product exactly.
    """
    d = nodes_w[:, None] - nodes_t[None, :]
    out = np.zeros(d.shape, dtype=complex)
    for a, b, c in zip(poles_a, poles_b, counts):
        out += c * (log1p_c(-d / (nodes_w[:, None] - a))
                    + log1p_c(d / (nodes_t[None, :] - b)))
    return out


def coupling_wanderer_correction(nodes_w: np.ndarray, nodes_t: np.ndarray,
                                 poles_a: np.ndarray, poles_b: np.ndarray,
                                 counts: np.ndarray) -> np.ndarray:
    """(P - 1)/(w - wt): removable at w = wt, so crossing contours are fine.

    Entries whose log P has a large positive real part are NOT folded here;
    callers combining this with exponentially small e^{A-B} factors rely on
    pair_integral_corrected below, which keeps everything at one scale.
    """
    d = nodes_w[:, None] - nodes_t[None, :]
    logp = wanderer_log_ratio(nodes_w, nodes_t, poles_a, poles_b, counts)
    return expm1_c(np.where(logp.real > 660.0, 660.0 + 1j * logp.imag, logp)) / d


def pair_integral_corrected(nodes_w: np.ndarray, weights_w: np.ndarray,
                            nodes_t: np.ndarray, weights_t: np.ndarray,
                            log_num: np.ndarray, log_den: np.ndarray,
                            poles_a: np.ndarray, poles_b: np.ndarray,
                            counts: np.ndarray) -> ScaledValue:
    """∬ e^{A - B} (P - 1)/(w - wt), overflow-safe for any wanderer weight.

    The matrix e^{A_i - B_j + logP_ij} can dwarf e^{A_i - B_j}; both terms of
    P - 1 = (e^{logP} - 1) are brought to the single scale
    s = max(Re(A - B + max(logP, 0))) before summation.
    """
    logp = wanderer_log_ratio(nodes_w, nodes_t, poles_a, poles_b, counts)
    d = nodes_w[:, None] - nodes_t[None, :]
    g = log_num[:, None] - log_den[None, :]
    s = float(np.max(g.real + np.maximum(logp.real, 0.0)))
    big = logp.real > 30.0
    core = np.exp(g - s) * expm1_c(np.where(big, 0.0, logp))
    corr = np.exp(np.where(big, g + logp - s, -np.inf)) * \
        (1.0 - np.exp(np.where(big, -logp, 0.0)))
    val = ((weights_w[:, None] * ((core + corr) / d)) @ weights_t).sum()
    return ScaledValue(val / TWO_PI_I_SQ, s)
