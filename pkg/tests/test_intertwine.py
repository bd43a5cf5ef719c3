import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscwave import (
    BranchPair,
    IntertwineParams,
    SampledFunction,
    apply_T,
    apply_T_inverse,
    branch_spectra,
    derive_params,
    forward_ft,
    hermite_fn,
    intertwine_residual,
    inverse_ft,
    make_grid,
    oscillator_apply,
    rel_l2_error,
    weight,
)
from oscwave.fourier import SpectralFunction
from oscwave.intertwine import _centered_d

GRID = make_grid(-12.0, 12.0, 2048)
X = GRID.points
WINDOW = IntertwineParams(1.0, GRID, make_grid(0.0, 1.2, 2048))


def test_weight_closed_forms():
    assert weight(1.0, 0.7) == pytest.approx(np.exp(1 / 2.8), rel=1e-14)
    assert weight(4.0, 1.0) == pytest.approx(2 * np.exp(4.0), rel=1e-14)
    assert weight(-1.0, 1.0) == pytest.approx(np.exp(0.25), rel=1e-14)
    with pytest.raises(ValueError):
        weight(0.0, 1.0)


def test_params_validation():
    with pytest.raises(ValueError):
        IntertwineParams(-1.0, GRID, make_grid(0.0, 1.0, 64))


def test_branch_pair_needs_shared_grid():
    g1 = make_grid(0.0, 1.0, 64)
    g2 = make_grid(0.0, 2.0, 64)
    f1 = SampledFunction(g1, np.zeros(64, dtype=complex))
    f2 = SampledFunction(g2, np.zeros(64, dtype=complex))
    with pytest.raises(ValueError):
        BranchPair(f1, f2)


def test_ground_state_branches_are_exponentials():
    """The Gaussian weight cancels exactly: both branches e^{-aX}/sqrt(2a)."""
    phi = SampledFunction(GRID, np.exp(-(X**2) / 2).astype(complex))
    b = apply_T(phi, WINDOW, coverage="window")
    XX = WINDOW.X_grid.points
    target = np.exp(-XX) / np.sqrt(2.0)
    for side in (b.plus, b.minus):
        assert np.max(np.abs(side.values - target)) <= 1e-12 * np.max(target)


def test_zero_maps_to_zero():
    b = apply_T(SampledFunction(GRID, np.zeros(GRID.n, dtype=complex)), WINDOW, coverage="window")
    assert np.max(np.abs(b.plus.values)) == 0.0
    assert np.max(np.abs(b.minus.values)) == 0.0


def test_real_even_input_gives_equal_branches():
    phi = SampledFunction(GRID, (np.exp(-0.6 * X**2) * (1 + 0.2 * X**2)).astype(complex))
    b = apply_T(phi, WINDOW, coverage="window")
    assert np.max(np.abs(b.plus.values - b.minus.values)) <= 1e-10


def test_branch_spectra_deweights_to_the_damped_spectrum():
    phi = SampledFunction(GRID, np.exp(-(X**2) / 2).astype(complex))
    b = apply_T(phi, WINDOW, coverage="window")
    plus, minus = branch_spectra(b, WINDOW)
    target = np.exp(-WINDOW.xi_nodes**2 / 4) / np.sqrt(2.0)
    assert np.max(np.abs(plus - target)) <= 1e-12
    assert np.max(np.abs(minus - target)) <= 1e-12


def test_transform_linearity():
    f1 = SampledFunction(GRID, hermite_fn(1, 1.0, X).astype(complex))
    f2 = SampledFunction(GRID, hermite_fn(2, 1.0, X).astype(complex))
    al, be = 0.7 - 0.2j, -1.3 + 0.4j
    combo = SampledFunction(GRID, al * f1.values + be * f2.values)
    b1 = apply_T(f1, WINDOW, coverage="window")
    b2 = apply_T(f2, WINDOW, coverage="window")
    bc = apply_T(combo, WINDOW, coverage="window")
    for got, want in (
        (bc.plus.values, al * b1.plus.values + be * b2.plus.values),
        (bc.minus.values, al * b1.minus.values + be * b2.minus.values),
    ):
        assert np.max(np.abs(got - want)) <= 1e-12 * max(np.max(np.abs(want)), 1.0)


def test_eigenfunction_transport():
    """Mode n rides the conjugated flow with rate (2n+1)a."""
    p = IntertwineParams(1.0, GRID, make_grid(0.0, 0.3, 512))
    h = p.X_grid.spacing
    for n in range(5):
        f = SampledFunction(GRID, hermite_fn(n, 1.0, X).astype(complex))
        b = apply_T(f, p, coverage="window")
        der = _centered_d(b.plus.values, h)
        resid = der + (2 * n + 1) * b.plus.values[1:-1]
        assert np.linalg.norm(resid) / np.linalg.norm(der) <= 1e-4


def _spectral_derivative(f, order):
    F = forward_ft(f)
    vals = (1j * F.xi_grid.points) ** order * F.values
    return inverse_ft(SpectralFunction(F.xi_grid, vals, F.x_grid)).values


def test_conjugation_identity():
    # damping the oscillator by the ground-state Gaussian leaves a drift term
    a = 1.0
    psi_vals = (1 + 0.5 * X + 0.3 * X * X) * np.exp(-(X**2))
    psi = SampledFunction(GRID, psi_vals.astype(complex))
    grown = SampledFunction(GRID, psi_vals * np.exp(a * X**2 / 2))
    lap = _spectral_derivative(grown, 2) - (a * X) ** 2 * grown.values
    lhs = np.exp(-a * X**2 / 2) * lap
    rhs = _spectral_derivative(psi, 2) + 2 * a * X * _spectral_derivative(psi, 1) + a * psi_vals
    assert np.linalg.norm(lhs - rhs) / np.linalg.norm(rhs) <= 1e-8


def test_conjugated_operator_on_the_frequency_side():
    a = 1.0
    psi_vals = (1 + 0.5 * X + 0.3 * X * X) * np.exp(-(X**2))
    psi = SampledFunction(GRID, psi_vals.astype(complex))
    grown = SampledFunction(GRID, psi_vals * np.exp(a * X**2 / 2))
    lap = _spectral_derivative(grown, 2) - (a * X) ** 2 * grown.values
    lhs = forward_ft(SampledFunction(GRID, np.exp(-a * X**2 / 2) * lap))
    F = forward_ft(psi)
    xi = F.xi_grid.points
    dF = forward_ft(SampledFunction(GRID, -1j * X * psi_vals)).values
    rhs = -(xi**2) * F.values - 2 * a * xi * dF - a * F.values
    assert np.linalg.norm(lhs.values - rhs) / np.linalg.norm(rhs) <= 1e-6


def _tuned_round_trip(a, data, damped):
    # grid half-width: last point where the damped data is above 5e-16 of peak
    s = np.linspace(0.0, 40.0, 400001)
    dv = damped(s)
    L = s[np.nonzero(dv >= 5e-16 * dv.max())[0].max()]
    g = make_grid(-L, L, 4096)
    f = SampledFunction(g, data(g.points).astype(complex))
    p = derive_params(a, g, f, n_X=8192)
    back = apply_T_inverse(apply_T(f, p), p, mask_floor=5e-16)
    return rel_l2_error(back, f)


def test_round_trip_ground_state():
    err = _tuned_round_trip(1.0, lambda s: np.exp(-(s**2) / 2), lambda s: np.exp(-(s**2)))
    assert err <= 1e-8


def test_round_trip_odd_data():
    err = _tuned_round_trip(
        1.0, lambda s: s * np.exp(-(s**2) / 2), lambda s: np.abs(s) * np.exp(-(s**2))
    )
    assert err <= 1e-8


def test_round_trip_wide_coupling():
    err = _tuned_round_trip(
        0.5, lambda s: np.exp(-0.25 * s**2), lambda s: np.exp(-0.5 * s**2)
    )
    assert err <= 1e-8


# shared fixed-size configuration keeps each property example affordable
PROP_GRID = make_grid(-6.2, 6.2, 2048)
_PX = PROP_GRID.points
_PROP_BASIS = np.vstack([hermite_fn(k, 1.0, _PX) for k in range(3)])
PROP_PARAMS = derive_params(
    1.0,
    PROP_GRID,
    SampledFunction(PROP_GRID, _PROP_BASIS.sum(axis=0).astype(complex)),
    n_X=4096,
)


@settings(max_examples=5)
@given(
    c0=st.floats(-2, 2),
    c1=st.floats(-2, 2),
    c2=st.floats(-2, 2),
)
def test_round_trip_property_low_degree_data(c0, c1, c2):
    coeffs = np.array([c0, c1, c2])
    if np.max(np.abs(coeffs)) < 0.1:
        coeffs[0] = 1.0
    f = SampledFunction(PROP_GRID, (coeffs @ _PROP_BASIS).astype(complex))
    back = apply_T_inverse(apply_T(f, PROP_PARAMS), PROP_PARAMS, mask_floor=5e-16)
    assert rel_l2_error(back, f) <= 1e-7


def test_inverse_linearity():
    f1 = SampledFunction(PROP_GRID, _PROP_BASIS[0].astype(complex))
    f2 = SampledFunction(PROP_GRID, _PROP_BASIS[1].astype(complex))
    b1 = apply_T(f1, PROP_PARAMS)
    b2 = apply_T(f2, PROP_PARAMS)
    summed = BranchPair(
        SampledFunction(b1.plus.grid, b1.plus.values + b2.plus.values),
        SampledFunction(b1.minus.grid, b1.minus.values + b2.minus.values),
    )
    back = apply_T_inverse(summed, PROP_PARAMS, mask_floor=5e-16)
    target = SampledFunction(PROP_GRID, f1.values + f2.values)
    assert rel_l2_error(back, target) <= 1e-7


def test_residual_on_ground_state():
    rep = intertwine_residual(
        SampledFunction(GRID, np.exp(-(X**2) / 2).astype(complex)),
        IntertwineParams(1.0, GRID, make_grid(0.0, 0.3, 512)),
    )
    assert rep.verdict == "pass"
    assert rep.metric <= 1e-6


def test_residual_on_first_excited_mode():
    rep = intertwine_residual(
        SampledFunction(GRID, hermite_fn(1, 1.0, X).astype(complex)),
        IntertwineParams(1.0, GRID, make_grid(0.0, 0.3, 512)),
    )
    assert rep.verdict == "pass"
    assert rep.metric <= 1e-5


def test_residual_turns_informational_on_unresolved_data():
    g = make_grid(-12.0, 12.0, 256)
    p = IntertwineParams(1.0, g, make_grid(0.0, 0.3, 128))
    sharp = SampledFunction(g, np.exp(-20 * g.points**2).astype(complex))
    with pytest.warns(UserWarning):
        rep = intertwine_residual(sharp, p)
    assert rep.verdict == "informational"


def test_apply_T_rejects_uncovered_spectrum():
    wide = SampledFunction(GRID, np.exp(-20 * X**2).astype(complex))
    narrow_window = IntertwineParams(1.0, GRID, make_grid(0.0, 0.5, 256))
    with pytest.raises(ValueError, match="admissible"):
        apply_T(wide, narrow_window, coverage="full")
    with pytest.raises(ValueError):
        apply_T(wide, narrow_window, coverage="sideways")


def test_derive_params_rejects_aliased_data():
    g = make_grid(-12.0, 12.0, 256)
    sharp = SampledFunction(g, np.exp(-20 * g.points**2).astype(complex))
    with pytest.raises(ValueError):
        derive_params(1.0, g, sharp)


def test_inverse_rejects_undecayed_branches():
    # de-weighted spectrum identically 1: no decay at the large-frequency end
    w = weight(PROP_PARAMS.xi_nodes, PROP_PARAMS.a).astype(complex)
    flat = BranchPair(
        SampledFunction(PROP_PARAMS.X_grid, w),
        SampledFunction(PROP_PARAMS.X_grid, w.copy()),
    )
    with pytest.raises(ValueError, match="decay"):
        apply_T_inverse(flat, PROP_PARAMS)


def test_oscillator_apply_ground_state_eigenrelation():
    f = SampledFunction(GRID, np.exp(-(X**2) / 2).astype(complex))
    out = oscillator_apply(f, 1.0)
    assert np.max(np.abs(out.values + f.values)) <= 1e-10
