"""Permittivity models: closures, zero-frequency classes, tabulated data."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_bvl import materials as M


def test_insulator_is_constant_everywhere():
    model = M.insulator(3.0)
    for w in (0.0, 1.0, 1e12, 1e16, 1j * 1e10, 1j * 1e15):
        assert M.eval_epsilon(model, w) == 3.0


def test_insulator_rejects_eps0_below_one():
    with pytest.raises(ValueError):
        M.insulator(0.5)


def test_drude_imaginary_axis_closure():
    wp, gamma = 1.37e16, 5.32e13
    model = M.drude(wp, gamma)
    for xi in (1e12, 1e14, 1e16):
        eps = M.eval_epsilon(model, 1j * xi)
        assert eps.imag == 0.0
        assert eps.real == pytest.approx(1.0 + wp**2 / (xi * (xi + gamma)),
                                         rel=1e-14)


def test_drude_real_axis_closure():
    wp, gamma = 1.37e16, 5.32e13
    model = M.drude(wp, gamma)
    w = 2e15
    expected = 1.0 - wp**2 / (w * (w + 1j * gamma))
    assert M.eval_epsilon(model, w) == pytest.approx(expected, rel=1e-14)


def test_drude_low_frequency_conductivity_asymptote():
    # omega*(eps - 1) -> 4*pi*i*sigma_0 as omega -> 0
    model = M.drude(1.37e16, 5.32e13)
    sigma0 = M.dc_conductivity(model)
    w = model.gamma * 1e-8
    val = w * (M.eval_epsilon(model, w) - 1.0)
    assert val.imag == pytest.approx(4.0 * math.pi * sigma0, rel=1e-6)
    assert abs(val.real) < abs(val.imag) * 1e-6


def test_dc_conductivity_value_and_guard():
    model = M.drude(2.0e16, 1.0e14)
    assert M.dc_conductivity(model) == pytest.approx(
        (2.0e16) ** 2 / (4.0 * math.pi * 1.0e14), rel=1e-15)
    with pytest.raises(ValueError):
        M.dc_conductivity(M.plasma(1e16))


def test_plasma_closures_both_axes():
    wp = 2.0
    model = M.plasma(wp)
    assert M.eval_epsilon(model, 1j * 1.0) == 5.0  # 1 + (2/1)^2
    eps = M.eval_epsilon(model, 4.0)
    assert eps == pytest.approx(1.0 - 0.25, rel=1e-15)
    assert eps.imag == 0.0


def test_generalized_plasma_adds_oscillators():
    osc = M.Oscillator(2e31, 3e15, 1e14)
    model = M.generalized_plasma(1.37e16, [osc])
    xi = 1e15
    base = 1.0 + (1.37e16 / xi) ** 2
    extra = osc.strength / (osc.center**2 + xi**2 + osc.width * xi)
    assert M.eval_epsilon(model, 1j * xi).real == pytest.approx(base + extra,
                                                                rel=1e-14)
    w = 1e15
    lorentz = osc.strength / (osc.center**2 - w**2 - 1j * osc.width * w)
    expected = 1.0 - (1.37e16 / w) ** 2 + lorentz
    assert M.eval_epsilon(model, w) == pytest.approx(expected, rel=1e-13)


def test_singular_models_raise_at_zero():
    for model in (M.drude(1e16, 1e13), M.plasma(1e16),
                  M.generalized_plasma(1e16)):
        with pytest.raises(M.EvalAtZero):
            M.eval_epsilon(model, 0.0)
        with pytest.raises(M.EvalAtZero):
            M._eval_imag_axis(model, 0.0)


def test_ideal_metal_has_no_epsilon():
    with pytest.raises(M.IdealMetalHasNoEpsilon):
        M.eval_epsilon(M.ideal_metal(), 1e15)


def test_off_axis_frequency_rejected():
    with pytest.raises(ValueError):
        M.eval_epsilon(M.drude(1e16, 1e13), 1e15 + 1j * 1e14)
    with pytest.raises(ValueError):
        M.eval_epsilon(M.plasma(1e16), -1j * 1e14)


def test_oscillator_parameter_validation():
    with pytest.raises(ValueError):
        M.Oscillator(-1.0, 1e15, 1e13)
    with pytest.raises(ValueError):
        M.Oscillator(1e30, 0.0, 1e13)
    with pytest.raises(ValueError):
        M.Oscillator(1e30, 1e15, -1e13)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=1e10, max_value=1e18),
       st.floats(min_value=1.01, max_value=3.0))
def test_imaginary_axis_reality_and_bound(xi, factor):
    """eps(i*xi) is real with eps >= 1 for every dissipative/lossless model."""
    models = [M.insulator(3.0, [M.Oscillator(2e31, 3e15, 1e14)]),
              M.drude(1.37e16, 5.32e13), M.plasma(1.37e16),
              M.generalized_plasma(1.37e16, [M.Oscillator(2e31, 3e15, 1e14)])]
    for model in models:
        eps = M.eval_epsilon(model, 1j * xi * factor)
        assert eps.imag == 0.0
        assert eps.real >= 1.0


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=1e11, max_value=1e17))
def test_imaginary_axis_monotone_decreasing(xi):
    """eps(i*xi) decreases with xi for the conducting models."""
    for model in (M.drude(1.37e16, 5.32e13), M.plasma(1.37e16)):
        lo = M.eval_epsilon(model, 1j * xi).real
        hi = M.eval_epsilon(model, 1j * xi * 2.0).real
        assert lo > hi >= 1.0


def test_zero_freq_class_mapping():
    table_d = [(1e14, 200.0), (2e14, 60.0), (4e14, 20.0)]
    assert M.zero_freq_class(M.insulator(3.0)) is M.ZeroFreqClass.FINITE
    assert M.zero_freq_class(M.drude(1e16, 1e13)) is M.ZeroFreqClass.INVERSE_OMEGA
    assert M.zero_freq_class(M.plasma(1e16)) is M.ZeroFreqClass.INVERSE_OMEGA_SQUARED
    assert (M.zero_freq_class(M.generalized_plasma(1e16))
            is M.ZeroFreqClass.INVERSE_OMEGA_SQUARED)
    assert M.zero_freq_class(M.ideal_metal()) is M.ZeroFreqClass.IDEAL
    assert (M.zero_freq_class(M.tabulated(table_d, M.Extrapolation.DRUDE_LIKE))
            is M.ZeroFreqClass.INVERSE_OMEGA)
    assert (M.zero_freq_class(M.tabulated(table_d, M.Extrapolation.PLASMA_LIKE))
            is M.ZeroFreqClass.INVERSE_OMEGA_SQUARED)
    assert (M.zero_freq_class(M.tabulated(table_d, M.Extrapolation.FINITE))
            is M.ZeroFreqClass.FINITE)


def test_static_epsilon():
    osc = M.Oscillator(2e30, 2e15, 1e14)
    model = M.insulator(3.0, [osc])
    assert M.static_epsilon(model) == pytest.approx(
        3.0 + osc.strength / osc.center**2, rel=1e-15)
    with pytest.raises(ValueError):
        M.static_epsilon(M.plasma(1e16))


def _drude_table(n=200, lo=1e12, hi=1e18):
    model = M.drude(1.37e16, 5.32e13)
    xs = np.geomspace(lo, hi, n)
    return [(float(x), float(M.eval_epsilon(model, 1j * x).real)) for x in xs]


def test_tabulated_round_trip_within_table():
    """Interpolated table built from a Drude model reproduces it to 1e-3."""
    model = M.tabulated(_drude_table(), M.Extrapolation.DRUDE_LIKE)
    ref = M.drude(1.37e16, 5.32e13)
    for xi in np.geomspace(1.5e12, 8e17, 41):
        got = M.eval_epsilon(model, 1j * xi).real
        want = M.eval_epsilon(ref, 1j * xi).real
        assert abs(got - want) <= 1e-3 * abs(want)


def test_tabulated_extrapolation_below_range():
    ref = M.drude(1.37e16, 5.32e13)
    model = M.tabulated(_drude_table(lo=1e13), M.Extrapolation.DRUDE_LIKE)
    # A/xi continuation tracks the 1/xi singularity of the source model;
    # the two-node fit carries an O(xi_lo / gamma) residual, here a few %
    got = M.eval_epsilon(model, 1j * 1e11).real
    want = M.eval_epsilon(ref, 1j * 1e11).real
    assert got == pytest.approx(want, rel=5e-2)

    plas = M.plasma(1.37e16)
    xs = np.geomspace(1e13, 1e18, 50)
    table = [(float(x), float(M.eval_epsilon(plas, 1j * x).real)) for x in xs]
    tab = M.tabulated(table, M.Extrapolation.PLASMA_LIKE)
    got = M.eval_epsilon(tab, 1j * 1e11).real
    want = M.eval_epsilon(plas, 1j * 1e11).real
    assert got == pytest.approx(want, rel=1e-6)
    assert M.effective_omega_p(tab) == pytest.approx(1.37e16, rel=1e-9)


def test_tabulated_finite_holds_boundary_and_above_range_tail():
    table = [(1e14, 5.0), (1e15, 3.0), (1e16, 1.5)]
    model = M.tabulated(table, M.Extrapolation.FINITE)
    assert M.eval_epsilon(model, 1j * 1e12).real == 5.0
    assert M.static_epsilon(model) == 5.0
    # above range: 1 + C/xi^2 matched at the top node
    c = (1.5 - 1.0) * (1e16) ** 2
    assert M.eval_epsilon(model, 1j * 1e17).real == pytest.approx(
        1.0 + c / 1e34, rel=1e-12)


def test_tabulated_validation():
    with pytest.raises(M.EmptyTable):
        M.tabulated([(1e14, 2.0)], M.Extrapolation.FINITE)
    with pytest.raises(ValueError):
        M.tabulated([(1e15, 2.0), (1e14, 3.0)], M.Extrapolation.FINITE)
    with pytest.raises(ValueError):
        M.tabulated([(1e14, 0.5), (1e15, 2.0)], M.Extrapolation.FINITE)
    with pytest.raises(ValueError):
        M.tabulated([(1e14, 2.0), (1e15, 3.0)], None)
    # singular continuation needs eps decreasing at the low end
    with pytest.raises(ValueError):
        M.tabulated([(1e14, 2.0), (1e15, 3.0)], M.Extrapolation.DRUDE_LIKE)


def test_tabulated_real_axis_rejected():
    model = M.tabulated([(1e14, 5.0), (1e15, 3.0)], M.Extrapolation.FINITE)
    with pytest.raises(M.TabulatedOutOfRange):
        M.eval_epsilon(model, 1e15)


def test_tabulated_singular_at_zero():
    table = [(1e14, 200.0), (2e14, 60.0)]
    model = M.tabulated(table, M.Extrapolation.DRUDE_LIKE)
    with pytest.raises(M.EvalAtZero):
        M.eval_epsilon(model, 1j * 0.0)


def test_load_table(tmp_path):
    path = tmp_path / "eps.dat"
    path.write_text("# xi  eps\n\n1e14  5.0\n1e15\t3.0\n")
    assert M.load_table(path) == [(1e14, 5.0), (1e15, 3.0)]
    bad = tmp_path / "bad.dat"
    bad.write_text("1e14 5.0 extra\n1e15 3.0\n")
    with pytest.raises(ValueError):
        M.load_table(bad)
    empty = tmp_path / "empty.dat"
    empty.write_text("# nothing\n")
    with pytest.raises(M.EmptyTable):
        M.load_table(empty)
