import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from muculants import (
    CharFnSamples,
    CharFnVanishes,
    EmptySample,
    FrequencyGrid,
    GridTooCoarse,
    complex_log,
    empirical_charfn,
    eval_charfn,
    grid_analysis,
    grid_synthesis,
    support_width,
    unwrap_phase,
    validate_pmf,
)

from support import random_pmf


@pytest.mark.parametrize("n", [63, 65, 100, 32, 0])
def test_grid_rejects_bad_sizes(n):
    with pytest.raises(ValueError):
        FrequencyGrid(n)


def test_grid_points_layout():
    g = FrequencyGrid(64)
    pts = g.points
    assert pts[0] == pytest.approx(-np.pi)
    assert pts[g.zero_index] == 0.0
    assert pts[-1] == pytest.approx(np.pi - 2 * np.pi / 64)
    np.testing.assert_allclose(np.diff(pts), 2 * np.pi / 64)


def test_grid_for_width_rounds_up():
    assert FrequencyGrid.for_width(10).n_points == 64
    assert FrequencyGrid.for_width(20).n_points == 128
    assert FrequencyGrid.for_width(3, minimum=256).n_points == 256


def test_support_width_includes_origin():
    assert support_width(validate_pmf(0, [0.5, 0.5])) == 2
    # shifted mass still has to resolve the linear phase back to zero
    assert support_width(validate_pmf(10, [1.0])) == 11
    assert support_width(validate_pmf(-4, [0.5, 0.5])) == 5


def test_synthesis_matches_direct_trig_sum():
    rng = np.random.default_rng(3)
    g = FrequencyGrid(64)
    coeffs = rng.normal(size=5)
    offset = -7
    direct = sum(
        c * np.exp(1j * g.points * (offset + i)) for i, c in enumerate(coeffs)
    )
    np.testing.assert_allclose(grid_synthesis(coeffs, offset, g), direct, atol=1e-12)


def test_synthesis_folds_indices_exactly():
    # e^(j mu xi) is N-periodic in xi on the grid, so shifting by N is a no-op
    g = FrequencyGrid(64)
    a = grid_synthesis([1.0, 2.0], 3, g)
    b = grid_synthesis([1.0, 2.0], 3 + 64, g)
    np.testing.assert_allclose(a, b, atol=1e-12)


@given(
    coeffs=arrays(np.float64, st.integers(1, 12), elements=st.floats(-5, 5)),
    offset=st.integers(-20, 20),
)
@settings(max_examples=60)
def test_analysis_inverts_synthesis(coeffs, offset):
    g = FrequencyGrid(128)
    vals = grid_synthesis(coeffs, offset, g)
    ns = offset + np.arange(len(coeffs))
    rec = grid_analysis(vals, ns)
    np.testing.assert_allclose(rec, coeffs, atol=1e-10)


def test_analysis_rejects_aliased_indices():
    g = FrequencyGrid(64)
    vals = grid_synthesis([1.0], 0, g)
    with pytest.raises(ValueError):
        grid_analysis(vals, [33])


def test_eval_charfn_basics():
    f = validate_pmf(0, [0.3, 0.7])
    cf = eval_charfn(f, FrequencyGrid(64))
    assert cf.values[cf.grid.zero_index] == 1.0
    # Hermitian grid: Phi(-mu) = conj(Phi(mu))
    direct = 0.3 + 0.7 * np.exp(1j * cf.grid.points)
    np.testing.assert_allclose(cf.values, direct, atol=1e-13)


def test_eval_charfn_needs_resolution():
    wide = validate_pmf(0, np.full(40, 1.0 / 40))
    with pytest.raises(GridTooCoarse):
        eval_charfn(wide, FrequencyGrid(64))


def test_charfn_samples_reject_non_hermitian():
    g = FrequencyGrid(64)
    vals = np.exp(1j * np.linspace(0, 1, 64))  # no conjugate symmetry
    with pytest.raises(ValueError):
        CharFnSamples(g, vals, "exact-from-pmf")


def test_empirical_charfn_is_sample_average():
    samples = np.array([0, 1, 1, 3, -2])
    g = FrequencyGrid(64)
    cf = empirical_charfn(samples, g)
    direct = np.mean(np.exp(1j * np.outer(g.points, samples)), axis=1)
    np.testing.assert_allclose(cf.values, direct, atol=1e-12)
    assert cf.values[g.zero_index] == 1.0
    assert cf.source == "empirical"


def test_empirical_charfn_input_checks():
    g = FrequencyGrid(64)
    with pytest.raises(EmptySample):
        empirical_charfn(np.array([], dtype=np.int64), g)
    with pytest.raises(ValueError):
        empirical_charfn(np.array([0.5, 1.0]), g)
    with pytest.raises(ValueError):
        empirical_charfn(np.array([[1, 2]]), g)


def test_unwrap_recovers_linear_phase():
    g = FrequencyGrid(256)
    half = g.points[g.zero_index :]
    principal = np.angle(np.exp(1j * 5 * half))
    np.testing.assert_allclose(unwrap_phase(principal), 5 * half, atol=1e-12)


@given(
    steps=arrays(
        np.float64, st.integers(1, 40), elements=st.floats(-3.1, 3.1)
    )
)
@settings(max_examples=60)
def test_unwrap_undoes_wrapping(steps):
    # any curve with increments below pi in magnitude survives a wrap/unwrap trip
    curve = np.concatenate([[0.0], np.cumsum(steps)])
    principal = np.angle(np.exp(1j * curve))
    np.testing.assert_allclose(unwrap_phase(principal), curve, atol=1e-9)


def test_unwrap_rejects_values_outside_principal_range():
    with pytest.raises(ValueError):
        unwrap_phase(np.array([0.0, 4.0]))


def test_complex_log_round_trip():
    rng = np.random.default_rng(5)
    f = random_pmf(rng)
    cf = eval_charfn(f, FrequencyGrid(256))
    lg = complex_log(cf)
    rebuilt = np.exp(lg.log_magnitude + 1j * lg.phase)
    # the sample at -pi takes the midpoint of the phase jump, so a winding
    # charfn may come back sign-flipped there; everywhere else exact
    np.testing.assert_allclose(rebuilt[1:], cf.values[1:], atol=1e-12)
    assert abs(rebuilt[0]) == pytest.approx(abs(cf.values[0]), abs=1e-12)


def test_complex_log_phase_is_odd_magnitude_even():
    f = validate_pmf(-2, [0.2, 0.3, 0.1, 0.4])
    lg = complex_log(eval_charfn(f, FrequencyGrid(256)))
    n = 256
    # indices k and n-k sit at +/- mu for k = 1..n/2-1
    np.testing.assert_allclose(
        lg.phase[1 : n // 2], -lg.phase[n // 2 + 1 :][::-1], atol=1e-12
    )
    np.testing.assert_allclose(
        lg.log_magnitude[1 : n // 2], lg.log_magnitude[n // 2 + 1 :][::-1], atol=1e-12
    )
    assert lg.phase[n // 2] == 0.0


def test_complex_log_pins_jump_midpoint_at_edge():
    # a pure shift has phase M*mu, which jumps by 2*pi*M across +/- pi;
    # the grid sample at -pi must take the midpoint value, zero
    f = validate_pmf(3, [1.0])
    lg = complex_log(eval_charfn(f, FrequencyGrid(256)))
    assert lg.phase[0] == 0.0
    interior = lg.phase[1:]
    np.testing.assert_allclose(interior, 3 * FrequencyGrid(256).points[1:], atol=1e-9)


def test_complex_log_raises_on_vanishing_modulus():
    f = validate_pmf(0, [0.5, 0.5])  # charfn has a zero at mu = pi
    with pytest.raises(CharFnVanishes):
        complex_log(eval_charfn(f, FrequencyGrid(64)))


def test_complex_log_vanish_floor_is_adjustable():
    f = validate_pmf(0, [0.5005, 0.4995])
    cf = eval_charfn(f, FrequencyGrid(64))
    complex_log(cf)  # min |phi| = 1e-3, above the default floor
    with pytest.raises(CharFnVanishes):
        complex_log(cf, vanish_tol=1e-2)
