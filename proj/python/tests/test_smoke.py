import math

import numpy as np
import pytest

import acsa


def fig3(**overrides):
    return acsa.SystemParams(omega_l=10.0, omega_p=0.37, **overrides)


def test_hamiltonian_layout():
    h = acsa.build_hamiltonian(acsa.SystemParams(omega_p=1.0, phi_p=math.pi / 2))
    assert h.shape == (3, 3)
    assert h[0, 2] == pytest.approx(1j)
    assert h[2, 0] == pytest.approx(-1j)
    np.testing.assert_array_equal(h, h.conj().T)


def test_liouvillian_is_trace_preserving():
    l = acsa.build_liouvillian(fig3(delta_p=-3.0))
    assert l.shape == (9, 9)
    trace_row = l[0, :] + l[4, :] + l[8, :]
    assert np.max(np.abs(trace_row)) < 1e-12


def test_steady_state_bare_resonance():
    rho, residual = acsa.steady_state(fig3())
    assert residual < 1e-10
    assert abs(np.trace(rho) - 1) < 1e-12
    assert abs(acsa.coherence(rho, "ac")) < 1e-3
    assert acsa.coherence(rho, "ab") == pytest.approx(-0.037, abs=0.05 * 0.037)


def test_analytic_values():
    assert acsa.generalized_rabi(3.0, 4.0) == pytest.approx(5.0)
    plus, minus, r = acsa.dressed_states(fig3())
    assert np.vdot(plus, minus) == pytest.approx(0.0, abs=1e-12)
    assert r == pytest.approx(math.hypot(0.37, 10.0))
    assert acsa.rho_ab_bare(fig3()) == pytest.approx(-0.037)
    assert acsa.rho_ab_dressed(fig3(delta_p=-10.0), "+").imag > 0
    with pytest.raises(ValueError):
        acsa.rho_ab_dressed(fig3(), "x")


def test_errors_are_translated():
    with pytest.raises(acsa.AcsaError, match="NegativeRate"):
        acsa.validate_params(acsa.SystemParams(gamma_ca=-1.0))
    with pytest.raises(acsa.AcsaError, match="ParseError"):
        acsa.parse_config("mode = steady\nomega_l = ten\n")


def test_sweep_extrema():
    table = acsa.sweep_detuning(fig3(), -20.0, 20.0, 401, workers=2)
    assert table["rho_ab"].shape == (401,)
    im = table["rho_ab"].imag
    assert table["delta_p"][np.argmax(im)] == pytest.approx(-10.0, abs=0.1 + 1e-12)
    assert table["delta_p"][np.argmin(im)] == pytest.approx(10.0, abs=0.1 + 1e-12)
    assert all(s == "ok" for s in table["status"])
    np.testing.assert_allclose(table["rho_aa"] + table["rho_bb"] + table["rho_cc"], 1.0, atol=1e-12)


def test_map_is_row_major_and_worker_independent():
    a = acsa.map_phase_detuning(fig3(), (-10.0, 10.0, 5), (0.0, math.pi, 3), workers=1)
    b = acsa.map_phase_detuning(fig3(), (-10.0, 10.0, 5), (0.0, math.pi, 3), workers=3)
    assert a["rho_ab"].shape == (15,)
    assert list(a["delta_phi"][:3]) == pytest.approx([0.0, math.pi / 2, math.pi])
    np.testing.assert_array_equal(a["rho_ab"], b["rho_ab"])


def test_time_domain_spectrum_peak():
    params = acsa.SystemParams(omega_l=10.0, omega_p=0.1, delta_p=-10.0)
    times, rho_ab, final = acsa.evolve(params)
    assert len(times) == 2048
    steady, _ = acsa.steady_state(params)
    assert np.linalg.norm(final - steady) < 1e-6
    nu, amplitude, resolution = acsa.spectrum(rho_ab, 0.05, carrier=-10.0)
    peaks = acsa.find_peaks(nu, amplitude, resolution, 1e-3 * max(amplitude))
    assert peaks[0]["nu_center"] == pytest.approx(-10.0, abs=resolution)


def test_presets_round_trip():
    ids = acsa.preset_ids()
    assert len(ids) == 15
    for preset in ids:
        text = acsa.preset_config(preset)
        assert acsa.parse_config(text) == text
