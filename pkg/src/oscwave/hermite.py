"""Hermite eigenfunctions of the oscillator and spectral propagators on them.

h_n(x) = (a/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(a) x) e^{-a x^2/2} form an
orthonormal basis with (d^2/dx^2 - a^2 x^2) h_n = -(2n+1) a h_n.  Expanding
initial data in this basis gives independent ground-truth propagators:
multiply coefficient n by e^{-(2n+1)at} for heat, by
sin(t sqrt((2n+1)a)) / sqrt((2n+1)a) for the wave problem.
"""

import warnings

import numpy as np

from .grids import SampledFunction, quadrature

__all__ = [
    "SpectralCoefficients",
    "hermite_fn",
    "hermite_table",
    "expand",
    "reconstruct",
    "heat_oracle",
    "wave_oracle",
    "wave_oracle_velocity",
    "wave_energy",
]

MAX_MODE = 256
TAIL_WARN = 1.0e-6


class SpectralCoefficients:
    """Eigenfunction coefficients c_0..c_N for one coupling a."""

    def __init__(self, a, coeffs):
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("need a flat, non-empty coefficient vector")
        if coeffs.size - 1 > MAX_MODE:
            raise ValueError(f"mode count capped at {MAX_MODE}")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite")
        self.a = float(a)
        self.coeffs = coeffs

    @property
    def n_max(self):
        return self.coeffs.size - 1

    def tail_fraction(self):
        """|c_N| relative to the largest coefficient, for truncation checks."""
        peak = np.max(np.abs(self.coeffs))
        return float(np.abs(self.coeffs[-1]) / peak) if peak > 0 else 0.0


def hermite_table(n_max, a, x):
    """Rows 0..n_max of the orthonormal eigenfunctions at the points x.

    Three-term recurrence on the normalized functions in the scaled
    variable y = sqrt(a) x; no factorials, stable to n = 256.
    """
    if n_max < 0 or n_max > MAX_MODE:
        raise ValueError(f"mode index must lie in 0..{MAX_MODE}")
    if a <= 0:
        raise ValueError("coupling a must be positive")
    x = np.asarray(x, dtype=float)
    y = np.sqrt(a) * x
    out = np.empty((n_max + 1, x.size))
    out[0] = (a / np.pi) ** 0.25 * np.exp(-0.5 * y**2)
    if n_max >= 1:
        out[1] = np.sqrt(2.0) * y * out[0]
    for n in range(1, n_max):
        out[n + 1] = np.sqrt(2.0 / (n + 1)) * y * out[n] - np.sqrt(
            n / (n + 1.0)
        ) * out[n - 1]
    return out


def hermite_fn(n, a, x):
    """The n-th orthonormal eigenfunction at x (scalar or array)."""
    scalar = np.ndim(x) == 0
    vals = hermite_table(n, a, np.atleast_1d(x))[n]
    return float(vals[0]) if scalar else vals


def eigenvalue(n, a):
    """Eigenvalue of d^2/dx^2 - a^2 x^2 on mode n: -(2n+1) a."""
    return -(2 * n + 1) * a


def expand(f, a, n_max):
    """Project a sampled function onto modes 0..n_max by quadrature.

    Warns when the last coefficient is above 1e-6 of the largest one
    (truncation not converged).
    """
    table = hermite_table(n_max, a, f.grid.points)
    w = f.grid.spacing * _weights(f.grid.n)
    coeffs = table @ (w * f.values)
    c = SpectralCoefficients(a, coeffs)
    if c.tail_fraction() > TAIL_WARN:
        warnings.warn(
            f"expansion tail |c_{n_max}| is {c.tail_fraction():.2e} of the "
            "peak coefficient; raise n_max or enlarge the grid",
            stacklevel=2,
        )
    return c


def _weights(n):
    # same rule as grids.quadrature, inlined to weight the projection sums
    w = np.ones(n)
    if n % 2 == 1:
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w /= 3.0
    else:
        w[0] = w[-1] = 0.5
    return w


def _synthesize(c, grid, multipliers):
    table = hermite_table(c.n_max, c.a, grid.points)
    vals = (multipliers * c.coeffs) @ table
    return SampledFunction(grid, vals)


def reconstruct(c, grid):
    """Sum c_n h_n on a grid."""
    return _synthesize(c, grid, np.ones(c.n_max + 1))


def heat_oracle(c, t, grid):
    """Heat evolution: coefficient n decays as e^{-(2n+1)a t}."""
    n = np.arange(c.n_max + 1)
    return _synthesize(c, grid, np.exp(-(2 * n + 1) * c.a * t))


def _wave_multipliers(c, t):
    lam = (2 * np.arange(c.n_max + 1) + 1) * c.a
    root = np.sqrt(lam)
    return np.sin(t * root) / root


def wave_oracle(c, t, grid):
    """Wave evolution from rest: v(0) = 0, dv/dt(0) = sum c_n h_n."""
    return _synthesize(c, grid, _wave_multipliers(c, t))


def wave_oracle_velocity(c, t, grid):
    """Exact time derivative of wave_oracle: multipliers cos(t sqrt(lam))."""
    lam = (2 * np.arange(c.n_max + 1) + 1) * c.a
    return _synthesize(c, grid, np.cos(t * np.sqrt(lam)))


def wave_energy(c, t, grid, n_max=None):
    """Wave energy ||dv/dt||^2 + sum lam_n |<v, h_n>|^2 at time t.

    The inner products are recomputed by quadrature from the sampled
    solution, so the constancy of this quantity exercises the grid,
    the projection, and the multipliers together.
    """
    n_max = c.n_max if n_max is None else n_max
    v = wave_oracle(c, t, grid)
    dv = wave_oracle_velocity(c, t, grid)
    proj = expand(v, c.a, n_max)
    lam = (2 * np.arange(n_max + 1) + 1) * c.a
    kinetic = abs(quadrature(SampledFunction(grid, np.abs(dv.values) ** 2)))
    potential = float(np.sum(lam * np.abs(proj.coeffs) ** 2))
    return kinetic + potential
