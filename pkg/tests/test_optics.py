import numpy as np
import pytest

from donorspin import optics as op


class TestAbsorptionSpectrum:
    def test_empty_triplet_population_kills_triplet_lines(self):
        lines = [op.OpticalLine(center=3446.0, fwhm=0.007, ground_state="singlet"),
                 op.OpticalLine(center=3446.3, fwhm=0.007, ground_state="triplet")]
        nu = np.linspace(3445.8, 3446.5, 7001)
        spec = op.absorption_spectrum(lines, op.PopulationState(1.0, 0.0), nu)
        singlet_only = op.absorption_spectrum(lines[:1], op.PopulationState(1.0, 0.0), nu)
        assert np.max(np.abs(spec - singlet_only)) < 1e-12 * singlet_only.max()

    def test_fitted_fwhm(self):
        line = op.OpticalLine(center=3446.0, fwhm=0.007)
        nu = np.linspace(3445.9, 3446.1, 20001)
        spec = op.absorption_spectrum([line], op.PopulationState(1.0, 0.0), nu)
        half = spec.max() / 2.0
        above = nu[spec >= half]
        assert above[-1] - above[0] == pytest.approx(0.007, abs=1e-5)

    def test_area_ratio_follows_strength_weighting(self):
        # unpolarized populations with 1:3 singlet:triplet strength weighting
        lines = [op.OpticalLine(center=3446.0, fwhm=0.007, strength=1.0,
                                ground_state="singlet"),
                 op.OpticalLine(center=3447.0, fwhm=0.007, strength=3.0,
                                ground_state="triplet")]
        pops = op.PopulationState(0.5, 0.5)
        nu_s = np.linspace(3445.5, 3446.5, 40001)
        nu_t = np.linspace(3446.5, 3447.5, 40001)
        area_s = np.trapezoid(op.absorption_spectrum(lines, pops, nu_s), nu_s)
        area_t = np.trapezoid(op.absorption_spectrum(lines, pops, nu_t), nu_t)
        assert area_t / area_s == pytest.approx(3.0, rel=0.02)

    def test_linearity(self):
        a = op.OpticalLine(center=3446.0, fwhm=0.01)
        b = op.OpticalLine(center=3446.2, fwhm=0.02, ground_state="triplet")
        pops = op.PopulationState(0.4, 0.6)
        nu = np.linspace(3445.8, 3446.4, 3001)
        both = op.absorption_spectrum([a, b], pops, nu)
        summed = op.absorption_spectrum([a], pops, nu) + op.absorption_spectrum([b], pops, nu)
        assert np.max(np.abs(both - summed)) < 1e-12 * both.max()

    def test_area_independent_of_fwhm(self):
        nu = np.linspace(3346.0, 3546.0, 400001)
        pops = op.PopulationState(1.0, 0.0)
        areas = []
        for fwhm in (0.005, 0.05, 0.5):
            spec = op.absorption_spectrum([op.OpticalLine(center=3446.0, fwhm=fwhm)],
                                          pops, nu)
            areas.append(np.trapezoid(spec, nu))
        assert np.allclose(areas, areas[0], rtol=1e-2)

    def test_rejects_bad_line(self):
        with pytest.raises(ValueError):
            op.OpticalLine(center=3446.0, fwhm=0.0)
        with pytest.raises(ValueError):
            op.OpticalLine(center=3446.0, fwhm=0.01, ground_state="doublet")


class TestHyperpolarize:
    def test_time_constant_50ms_at_4uW(self):
        pump = op.PumpModel.calibrated(power=4e-6, time_constant=50e-3, ref_power=4e-6)
        t, _, p_t = op.hyperpolarize(pump, "triplet", np.array([0.0, 50e-3]))
        assert p_t[1] == pytest.approx(0.5 * np.exp(-1.0), rel=1e-12)

    def test_power_doubling_halves_time_constant(self):
        pump = op.PumpModel.calibrated(power=8e-6, time_constant=50e-3, ref_power=4e-6)
        assert pump.time_constant == pytest.approx(25e-3, rel=1e-12)

    def test_near_unit_polarization_at_long_times(self):
        pump = op.PumpModel.calibrated(power=4e-6, time_constant=50e-3, ref_power=4e-6)
        _, p_s, p_t = op.hyperpolarize(pump, "triplet", np.array([0.0, 0.5]))
        assert p_s[1] > 0.99

    def test_population_conservation(self):
        pump = op.PumpModel.calibrated(power=4e-6, time_constant=50e-3, ref_power=4e-6,
                                       branch_back=0.3)
        t, p_s, p_t = op.hyperpolarize(pump, "singlet", np.linspace(0.0, 1.0, 200))
        assert np.max(np.abs(p_s + p_t - 1.0)) < 1e-12

    def test_branch_back_slows_pumping(self):
        fast = op.PumpModel(power=4e-6, rate_coeff=5e6, branch_back=0.0)
        slow = op.PumpModel(power=4e-6, rate_coeff=5e6, branch_back=0.5)
        assert slow.time_constant == pytest.approx(2 * fast.time_constant, rel=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            op.PumpModel(power=1e-6, rate_coeff=0.0)
        with pytest.raises(ValueError):
            op.PumpModel(power=1e-6, rate_coeff=1.0, branch_back=1.0)
        with pytest.raises(ValueError):
            op.PopulationState(0.6, 0.6)


class TestConversions:
    def test_linewidth_to_frequency(self):
        assert op.wavenumber_to_hz(0.007) == pytest.approx(209.85e6, rel=5e-4)

    def test_linewidth_to_lifetime(self):
        tau = op.linewidth_to_lifetime(0.007, unit="cm-1")
        assert tau == pytest.approx(0.758e-9, rel=1e-3)

    def test_round_trip_identity(self):
        tau = 0.758e-9
        back = op.linewidth_to_lifetime(op.lifetime_to_linewidth(tau))
        assert back == pytest.approx(tau, rel=1e-12)

    def test_radiative_lifetime_13us(self):
        tau = op.radiative_lifetime(1.3, 2.9e-6, 3.45)
        assert tau == pytest.approx(13e-6, rel=0.10)

    def test_dipole_from_lifetime(self):
        d = op.dipole_from_lifetime(13e-6, 2.9e-6, 3.45)
        assert d == pytest.approx(1.3, rel=0.10)

    def test_dipole_round_trip(self):
        tau = op.radiative_lifetime(1.3, 2.9e-6, 3.45)
        assert op.dipole_from_lifetime(tau, 2.9e-6, 3.45) == pytest.approx(1.3, rel=1e-10)

    def test_inverse_square_dipole_scaling(self):
        t1 = op.radiative_lifetime(1.3, 2.9e-6, 3.45)
        t2 = op.radiative_lifetime(2.6, 2.9e-6, 3.45)
        assert t2 == pytest.approx(t1 / 4.0, rel=1e-12)

    def test_lifetime_discrepancy_reported_not_reconciled(self):
        rep = op.lifetime_discrepancy(0.007, 1.3, 2.9e-6, 3.45)
        assert rep["ratio"] == pytest.approx(rep["tau_radiative_s"] / rep["tau_linewidth_s"],
                                             rel=1e-12)
        assert rep["ratio"] > 1e4

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            op.linewidth_to_lifetime(0.0)
        with pytest.raises(ValueError):
            op.radiative_lifetime(-1.0, 2.9e-6, 3.45)
