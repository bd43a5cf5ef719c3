"""Propagators for the first-order derivative operator on the line.

The heat flow of d/dX is plain transport, solved exactly by translation.
The wave flow has a closed-form kernel in two equivalent shapes, one
through the complementary error function and one through the Tricomi
function; both are implemented, cross-checked, and confronted with an
independent spectral-multiplier solution.
"""

import warnings

import numpy as np

from .fourier import (DECAY_TOL, SQRT_2PI, SpectralFunction, forward_ft,
                      inverse_ft)
from .grids import SampledFunction, sample_at
from .special import SQRT_PI, erfc_paper, tricomi_u

# agreement demanded between the two closed forms of the wave kernel
FORM_AGREEMENT_TOL = 1.0e-10

# live spectral content below this fraction of the peak is treated as
# zero before the wave multiplier can amplify it
ORACLE_BAND_TOL = 1.0e-13

# cap on t*sqrt(R/2); beyond it the multiplier tops 1e10 and the
# oracle output would be dominated by band-edge content
ORACLE_GROWTH_CAP = 25.0

WAVE_QUAD_POINTS = 257


class ShiftCoverageWarning(UserWarning):
    """Translation pulled data across the periodic seam of the grid."""


def heat_dirac(U0, t):
    """Translate U0 by t: the transport solution U(t, X) = U0(X + t).

    The shift is done by a spectral phase factor, so it is exact for
    band-limited data at any real offset, on-grid or not.  Data whose
    support would be pushed across the grid boundary re-enters on the
    other side; that case is flagged with ShiftCoverageWarning.
    """
    if t < 0:
        raise ValueError("transport flow is defined for t >= 0")
    if t == 0:
        return SampledFunction(U0.grid, U0.values.copy())
    _warn_if_wrapping(U0, t)
    F = forward_ft(U0)
    xi = F.xi_grid.points
    shifted = SpectralFunction(F.xi_grid, F.values * np.exp(1j * xi * t), F.x_grid)
    return inverse_ft(shifted)


def _warn_if_wrapping(U0, t):
    mag = np.abs(U0.values)
    peak = np.max(mag)
    if peak == 0.0:
        return
    live = U0.grid.points[mag > DECAY_TOL * peak]
    if live.size and live.min() - t < U0.grid.x_min:
        warnings.warn(
            f"shift by t={t:g} moves live data past the grid start; "
            "the result wraps around",
            ShiftCoverageWarning,
            stacklevel=3,
        )


def wave_kernel_dirac(t, X, Xp, form="erfc", cross_check=True):
    """Wave kernel of the derivative operator at one point pair.

    Two algebraically identical expressions exist: an Erfc form and a
    Tricomi form.  `form` selects which one is returned; with
    cross_check on, both are evaluated and must agree to 1e-10.
    """
    if t <= 0:
        raise ValueError("the wave kernel needs t > 0")
    gap = abs(X - Xp)
    if gap == 0:
        raise ValueError("X == X' makes the kernel argument singular")
    if form not in ("erfc", "tricomi"):
        raise ValueError(f"unknown form {form!r}")
    z2 = t * t / (4.0 * gap)
    w_erfc = (2.0 / SQRT_PI) * float(erfc_paper(np.sqrt(z2)))
    need_tricomi = cross_check or form == "tricomi"
    if need_tricomi:
        w_tric = (t / np.sqrt(4.0 * np.pi * gap)) * np.exp(-z2) * float(
            tricomi_u(1.0, 1.5, z2)
        )
    if cross_check and abs(w_erfc - w_tric) > FORM_AGREEMENT_TOL:
        raise ArithmeticError(
            f"kernel forms disagree by {abs(w_erfc - w_tric):.3e} at "
            f"t={t:g}, |X-X'|={gap:g}"
        )
    return w_tric if form == "tricomi" else w_erfc


def wave_dirac(V0, t, n_quad=WAVE_QUAD_POINTS):
    """Windowed convolution solution of the wave problem for d/dX.

    V(t, X) integrates the wave kernel against V0 over |X - X'| < t/2.
    Near the window center the kernel argument diverges while the kernel
    itself vanishes; substituting the offset u = (t/2) s with s = sigma^2
    turns the integrand into a bounded smooth function of sigma on [0, 1],
    which composite Simpson then handles at spectral-free second order:

        V(t, X) = (2/sqrt(pi)) t * int_0^1 Erfc(sqrt(t/2)/sigma)
                  [V0(X - u) + V0(X + u)] sigma dsigma,   u = sigma^2 t/2.
    """
    if t < 0:
        raise ValueError("the wave solution is computed for t >= 0")
    g = V0.grid
    if t == 0:
        return SampledFunction(g, np.zeros(g.n, dtype=complex))
    if t / 2.0 >= (g.x_max - g.x_min) / 4.0:
        raise ValueError(
            f"integration window t/2 = {t / 2.0:g} exceeds a quarter of "
            "the grid span; enlarge the grid or reduce t"
        )
    if n_quad < 9 or n_quad % 2 == 0:
        raise ValueError("n_quad must be odd and at least 9")
    sigma = np.linspace(0.0, 1.0, n_quad)
    h = sigma[1] - sigma[0]
    w = np.ones(n_quad)
    w[1:-1:2], w[2:-1:2] = 4.0, 2.0
    w *= h / 3.0
    X = g.points
    acc = np.zeros(g.n, dtype=complex)
    # sigma = 0 contributes nothing: the kernel factor decays like
    # exp(-t/(2 sigma^2)) and the Jacobian vanishes too
    for s, ws in zip(sigma[1:], w[1:]):
        kern = float(erfc_paper(np.sqrt(t / 2.0) / s)) * s
        if kern == 0.0:
            continue
        u = s * s * t / 2.0
        vals = sample_at(V0, X - u) + sample_at(V0, X + u)
        acc += (ws * kern) * vals
    return SampledFunction(g, (2.0 / SQRT_PI) * t * acc)


def _sine_multiplier(t, z):
    """sin(t sqrt(z))/sqrt(z) for complex z, entire in z and odd in t."""
    tz = abs(t * t * z)
    if tz <= 1.0:
        total = 0.0j
        term = complex(t)
        n = 0
        while abs(term) > 1e-20 * max(abs(total), 1.0) and n < 40:
            total += term
            n += 1
            term *= -z * t * t / ((2 * n) * (2 * n + 1))
        return total
    w = t * np.sqrt(complex(z))
    return t * np.sin(w) / w


def spectral_wave_oracle_dirac(V0, t):
    """Independent wave solution by a spectral multiplier.

    On each Fourier mode e^{i xi X} the equation d^2/dt^2 V = dV/dX reads
    y'' = (i xi) y, so with V(0) = 0 and V_t(0) = V0 the mode evolves by
    the entire function sin(t sqrt(z))/sqrt(z) at z = -i xi.  Exact for
    band-limited data; the only approximations are the FFT pair and the
    suppression of spectrally dead bins, which would otherwise be blown
    up exponentially by the multiplier.
    """
    F = forward_ft(V0)
    xi = F.xi_grid.points
    vals = F.values.copy()
    peak = np.max(np.abs(vals))
    if peak == 0.0:
        return SampledFunction(V0.grid, np.zeros(V0.grid.n, dtype=complex))
    live = np.abs(vals) > ORACLE_BAND_TOL * peak
    vals[~live] = 0.0
    radius = np.max(np.abs(xi[live]))
    growth = abs(t) * np.sqrt(radius / 2.0)
    if growth > ORACLE_GROWTH_CAP:
        raise ValueError(
            f"t*sqrt(R/2) = {growth:.2f} exceeds {ORACLE_GROWTH_CAP:g}; "
            "the multiplier would amplify the band edge past 1e10"
        )
    idx = np.nonzero(live)[0]
    for k in idx:
        vals[k] *= _sine_multiplier(t, -1j * xi[k])
    return inverse_ft(SpectralFunction(F.xi_grid, vals, F.x_grid))
