"""Smoke tests of the python bindings against known values."""

import math

import numpy as np
import pytest

import maserpairs as mp


def test_rabi_coefficients():
    c, s = mp.rabi_coefficients(0, 0.0)
    assert (c, s) == (1.0, 0.0)
    c, s = mp.rabi_coefficients(1, math.pi / 2)
    assert c == pytest.approx(-0.6056998670788134, abs=1e-14)
    assert s == pytest.approx(0.7956932015674809, abs=1e-14)


def test_steady_state_thermal_and_trapping():
    thermal = mp.steady_state(mp.MaserParams(nex=1.0, nu=0.2, phi=0.0))
    assert thermal.probs[0] == pytest.approx(5.0 / 6.0, abs=1e-12)
    assert mp.mean_photon(thermal) == pytest.approx(0.2, abs=1e-10)

    trapped = mp.steady_state(mp.MaserParams(nex=1.0, nu=0.0, phi=math.pi))
    assert trapped.probs[0] == 1.0

    with pytest.raises(mp.TruncationOverflow):
        mp.steady_state(
            mp.MaserParams(nex=0.0, nu=20.0, phi=1.0),
            mp.TruncationPolicy(tail_eps=1e-300, n_cap=1000),
        )


def test_correlations_and_measures():
    phi = 0.708 * math.pi
    dist = mp.steady_state(mp.MaserParams(nex=1.0, nu=0.0, phi=phi))
    corr = mp.correlations(dist, phi)
    assert mp.validate(corr).passed
    assert not mp.is_separable(corr)

    dense = mp.matrix_correlations(dist, phi)
    assert corr.s == pytest.approx(dense.s, abs=1e-10)
    assert corr.u == pytest.approx(dense.u, abs=1e-10)

    rho = mp.to_density_matrix(corr)
    assert rho.shape == (4, 4)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-14)
    assert mp.delta_trace_norm(corr) == pytest.approx(
        mp.numeric_trace_norm(corr), abs=1e-12
    )

    pt = mp.partial_transpose(rho)
    assert min(mp.spectrum_4x4(pt)) < 0.0


def test_ls_decomposition_worked_example():
    corr = mp.PairCorrelations(s=0.0, t=0.0, u=0.45, v=-0.2)
    ls = mp.ls_decompose(corr)
    assert ls.sep_degree == pytest.approx(0.95, abs=1e-12)
    assert ls.p == 0.0
    recon = ls.sep_degree * ls.rho_sep + (1 - ls.sep_degree) * ls.rho_pure
    assert np.max(np.abs(recon - mp.to_density_matrix(corr))) < 1e-12


def test_reference_operating_point():
    phi = 0.708 * math.pi
    rec = mp.evaluate_point(1.0, 0.0, phi)
    assert rec.one_minus_S == pytest.approx(0.5245, abs=2e-4)
    assert rec.separable == 0


def test_sweep_and_peaks():
    config = mp.SweepConfig()
    config.nex = 1.0
    config.nu = 0.0
    config.theta_max = 1.0
    config.steps = 100
    records = mp.run_sweep(config)
    assert len(records) == 101  # analytic theta=0 row + grid
    assert records[0].one_minus_S == 0.0
    thetas = [r.theta_over_pi for r in records]
    assert thetas == sorted(thetas)

    peaks = mp.find_peaks(records)
    assert any(abs(p.phi_over_pi - 0.708) < 0.02 for p in peaks)
