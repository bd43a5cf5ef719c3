"""Gaussian-normalized complementary error function and Tricomi's U.

Two conventions to be aware of:

* ``erfc_paper(z)`` is the bare Gaussian tail integral_z^inf e^{-t^2} dt,
  i.e. (sqrt(pi)/2) times the standard erfc.  All closed-form propagator
  weights in this library are written against this normalization.
* ``tricomi_u(a, c, z)`` is the z -> infinity recessive solution of
  Kummer's equation, evaluated through its real integral representation
  U(a,c,z) = (1/Gamma(a)) integral_0^inf e^{-zt} t^{a-1} (1+t)^{c-a-1} dt,
  valid for a > 0, z > 0.  The parameter families used downstream are
  (1, 3/2), (1/2, 1/2) and (2, 5/2).

U is singular at z = 0 when c > 1 (it behaves like
Gamma(c-1)/Gamma(a) * z^{1-c}); use ``tricomi_u_small_z`` for that limit.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import erfc as _erfc_std
from scipy.special import gamma as _gamma

__all__ = [
    "UEvalPolicy",
    "erfc_paper",
    "tricomi_u",
    "tricomi_u_deriv",
    "tricomi_u_small_z",
]

SQRT_PI = np.sqrt(np.pi)


@dataclass(frozen=True)
class UEvalPolicy:
    """Evaluation knobs for tricomi_u.

    quadrature_points: trapezoid node count for the integral representation.
    series_cutoff: below this z the singular small-z form is substituted
        (only relevant for c > 1).
    target_abs_error: requested accuracy, absolute for O(1) values and
        relative for large ones.
    """

    # the log-substituted integral keeps ~4e-14 relative accuracy down to
    # z = 1e-15 at least; the asymptotic form (relative error O(z) for
    # c = 3/2) is only a guard for arguments below any physical scale
    quadrature_points: int = 900
    series_cutoff: float = 1.0e-12
    target_abs_error: float = 1.0e-12

    def __post_init__(self):
        if not (1.0e-14 <= self.target_abs_error <= 1.0e-6):
            raise ValueError("target_abs_error must lie in [1e-14, 1e-6]")
        if self.quadrature_points < 50:
            raise ValueError("too few quadrature points")


DEFAULT_POLICY = UEvalPolicy()


def erfc_paper(z):
    """Gaussian tail integral_z^inf e^{-t^2} dt for z >= 0.

    Equals (sqrt(pi)/2) * erfc(z) in the standard normalization.
    Accepts scalars or arrays; rejects negative or non-finite input.
    """
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)):
        raise ValueError("erfc_paper needs finite arguments")
    if np.any(z < 0):
        raise ValueError("erfc_paper is defined here for z >= 0 only")
    out = (SQRT_PI / 2.0) * _erfc_std(z)
    return float(out) if out.ndim == 0 else out


def tricomi_u_small_z(a, c, z):
    """Small-z behavior of U(a, c, z) for c > 1.

    The singular part is Gamma(c-1)/Gamma(a) * z^{1-c}.  For 1 < c < 2 the
    next contribution is the constant Gamma(1-c)/Gamma(a-c+1), and keeping
    it tightens the error from O(1) to O(z^{2-c}).
    """
    if c <= 1:
        raise ValueError("small-z singular form applies to c > 1 only")
    lead = _gamma(c - 1.0) / _gamma(a) * z ** (1.0 - c)
    if c < 2.0:
        lead += _gamma(1.0 - c) / _gamma(a - c + 1.0)
    return lead


def _u_integral(a, c, z, n_nodes):
    # substitute t = e^v; integrand e^{-z e^v + a v} (1+e^v)^{c-a-1} decays
    # exponentially as v -> -inf and double-exponentially as v -> +inf,
    # where the trapezoid rule converges geometrically
    v_min = -42.0 / a - max(0.0, np.log(z))
    v_max = np.log(60.0 / z)
    if c < 1.0:
        # the algebraic factor alone already kills the integrand
        v_max = min(v_max, 48.0 / (1.0 - c))
    v_max = max(v_max, v_min + 1.0)
    v = np.linspace(v_min, v_max, n_nodes)
    ev = np.exp(v)
    log_integrand = -z * ev + a * v + (c - a - 1.0) * np.log1p(ev)
    integrand = np.exp(log_integrand)
    dv = v[1] - v[0]
    total = dv * (np.sum(integrand) - 0.5 * (integrand[0] + integrand[-1]))
    return total / _gamma(a)


def tricomi_u(a, c, z, policy=DEFAULT_POLICY):
    """Tricomi confluent hypergeometric U(a, c, z) for a > 0, z > 0."""
    a = float(a)
    c = float(c)
    if a <= 0:
        raise ValueError("integral representation needs a > 0")
    if np.ndim(z) == 0:
        if not np.isfinite(z) or z <= 0:
            raise ValueError("tricomi_u needs z > 0")
        if c > 1.0 and z < policy.series_cutoff:
            return float(tricomi_u_small_z(a, c, z))
        return float(_u_integral(a, c, z, policy.quadrature_points))
    z = np.asarray(z, dtype=float)
    if np.any(~np.isfinite(z)) or np.any(z <= 0):
        raise ValueError("tricomi_u needs z > 0")
    return np.array([tricomi_u(a, c, zz, policy) for zz in z])


def tricomi_u_deriv(a, c, z, policy=DEFAULT_POLICY):
    """dU/dz through the contiguous relation dU(a,c,z)/dz = -a U(a+1, c+1, z)."""
    return -a * tricomi_u(a + 1.0, c + 1.0, z, policy)
