import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from donorspin import coherence as co

from oracle_utils import echo_decay_oracle, ramsey_envelope_oracle


def quiet_qubit(**kw):
    return co.QubitModel(**kw)


class TestModels:
    def test_qubit_validation(self):
        with pytest.raises(ValueError):
            co.QubitModel(omega_R=-1.0)
        with pytest.raises(ValueError):
            co.QubitModel(T1=1.0, T2_intr=3.0)
        with pytest.raises(ValueError):
            co.QubitModel(stretch=0.5)

    def test_noise_validation(self):
        with pytest.raises(ValueError):
            co.NoiseModel(alpha=2.5)
        with pytest.raises(ValueError):
            co.NoiseModel(omega_lo=10.0, omega_hi=1.0)
        with pytest.raises(ValueError):
            co.NoiseModel(sigma_qs=-1.0)

    def test_sequence_validation(self):
        with pytest.raises(ValueError):
            co.PulseSequence(items=())
        with pytest.raises(ValueError):
            co.Pulse(theta=1.0, duration=-1.0)
        with pytest.raises(ValueError):
            co.Delay(tau=-1e-3)

    def test_trace_requires_increasing_x(self):
        with pytest.raises(ValueError):
            co.SignalTrace(x=np.array([0.0, 0.0]), y=np.zeros(2), stderr=np.zeros(2))


class TestEvolve:
    def test_ideal_pi_pulse(self):
        mean, _ = co.evolve(quiet_qubit(), co.PulseSequence.of(co.Pulse(np.pi)),
                            n_trajectories=1)
        assert mean[2] == pytest.approx(-1.0, abs=1e-12)

    def test_static_noise_perfectly_refocused(self):
        noise = co.NoiseModel.quasi_static(5e4, seed=11)
        seq = co.PulseSequence.of(co.Pulse(np.pi / 2), co.Delay(0.3), co.Pulse(np.pi),
                                  co.Delay(0.3), co.Pulse(np.pi / 2))
        mean, se = co.evolve(quiet_qubit(), seq, noise, n_trajectories=500)
        assert abs(mean[2]) == pytest.approx(1.0, abs=1e-9 + 3 * se[2])

    def test_intrinsic_echo_decay_hits_1_over_e(self):
        qubit = quiet_qubit(T2_intr=2.14)
        tau = 2.14 / 2
        seq = co.PulseSequence.of(co.Pulse(np.pi / 2), co.Delay(tau), co.Pulse(np.pi),
                                  co.Delay(tau), co.Pulse(np.pi / 2))
        mean, _ = co.evolve(qubit, seq, n_trajectories=1)
        assert abs(mean[2]) == pytest.approx(np.exp(-1.0), rel=0.02)

    def test_invalid_trajectory_count(self):
        with pytest.raises(ValueError):
            co.evolve(quiet_qubit(), co.PulseSequence.of(co.Pulse(1.0)), n_trajectories=0)


class TestRabi:
    def test_no_noise_cosine(self):
        q = quiet_qubit()
        t = np.linspace(1e-5, 5e-3, 31)
        trace = co.rabi_experiment(q, 1.0, t, n_trajectories=1)
        assert np.max(np.abs(trace.y - np.cos(q.omega_R * t))) < 1e-9

    def test_amplitude_doubles_frequency(self):
        q = quiet_qubit()
        t = np.linspace(1e-5, 8e-3, 200)
        freqs = []
        for amp in (1.0, 2.0):
            trace = co.rabi_experiment(q, amp, t, n_trajectories=1)
            fit = co.fit_decay(trace, "gaussian_sinusoid")
            freqs.append(fit.params["f"])
        assert freqs[1] / freqs[0] == pytest.approx(2.0, rel=5e-3)

    def test_contrast_decays_with_strong_static_noise(self):
        q = quiet_qubit(omega_R=2 * np.pi * 1e3)
        sigma = 2 * np.pi * 600.0
        noise = co.NoiseModel.quasi_static(sigma, seed=5)
        t = np.linspace(1e-5, 20.0 / sigma, 200)
        trace = co.rabi_experiment(q, 1.0, t, noise, n_trajectories=1500)
        early = trace.y[t < 2.0 / sigma]
        late = trace.y[t > 10.0 / sigma]
        assert np.ptp(late) < 0.5 * np.ptp(early)


class TestRamsey:
    def test_fringe_period(self):
        q = quiet_qubit()
        taus = np.linspace(1e-5, 8e-3, 400)
        trace = co.ramsey_experiment(q, 2 * np.pi * 500.0, taus, n_trajectories=1)
        fit = co.fit_decay(trace, "gaussian_sinusoid")
        assert 1.0 / fit.params["f"] == pytest.approx(2e-3, rel=5e-3)

    def test_tau_zero_signal_is_one(self):
        trace = co.ramsey_experiment(quiet_qubit(), 0.0, np.array([0.0, 1e-6]),
                                     n_trajectories=1)
        assert trace.y[0] == pytest.approx(1.0, abs=1e-12)

    def test_envelope_t2_star_one_ms(self):
        sigma = np.sqrt(2.0) / 1e-3
        noise = co.NoiseModel.quasi_static(sigma, seed=21)
        taus = np.linspace(2e-5, 3e-3, 80)
        trace = co.ramsey_experiment(quiet_qubit(), 2 * np.pi * 5e3, taus, noise,
                                     n_trajectories=2000)
        fit = co.fit_decay(trace, "gaussian_sinusoid")
        assert fit.params["T"] == pytest.approx(1e-3, rel=0.05)

    def test_envelope_matches_analytic_pointwise(self):
        sigma = 2e3
        noise = co.NoiseModel.quasi_static(sigma, seed=31)
        taus = np.linspace(1e-5, 2e-3, 25)
        trace = co.ramsey_experiment(quiet_qubit(), 0.0, taus, noise,
                                     n_trajectories=3000)
        expected = ramsey_envelope_oracle(sigma, taus)
        assert np.all(np.abs(trace.y - expected) < 3 * trace.stderr + 1e-9)


class TestHahnEcho:
    def test_fit_recovers_intrinsic_t2(self):
        qubit = quiet_qubit(T2_intr=2.14)
        noise = co.NoiseModel.quasi_static(1e4, seed=7)
        taus = np.linspace(0.05, 2.0, 30)
        trace, fit = co.hahn_echo_experiment(qubit, taus, noise, n_trajectories=300)
        assert fit.params["T"] == pytest.approx(2.14, rel=0.05)

    def test_phase_cycle_cancels_offset(self):
        qubit = quiet_qubit(T2_intr=2.14)
        taus = np.linspace(0.05, 2.0, 30)
        _, fit = co.hahn_echo_experiment(qubit, taus, offset=0.1, phase_cycle=True,
                                         n_trajectories=1)
        assert abs(fit.params["b"]) < 0.005

    def test_power_law_noise_gives_stretched_decay(self):
        noise = co.NoiseModel(alpha=1.0, S0=4.0, seed=13)
        taus = np.geomspace(0.01, 2.0, 24)
        trace, _ = co.hahn_echo_experiment(quiet_qubit(), taus, noise,
                                           n_trajectories=400, fit_model="stretched")
        fit = co.fit_decay(trace, "stretched")
        assert fit.params["n"] > 1.3
        # dual route: Monte-Carlo trace against the Bessel-product oracle
        expected = echo_decay_oracle(noise, 2 * taus, 1)
        assert np.all(np.abs(trace.y - expected) < 4 * trace.stderr + 0.02)

    def test_echo_independent_of_static_sigma(self):
        taus = np.linspace(0.05, 1.0, 10)
        refs = []
        for sigma in (1e3, 1e5):
            trace, _ = co.hahn_echo_experiment(
                quiet_qubit(), taus, co.NoiseModel.quasi_static(sigma, seed=3),
                n_trajectories=200)
            refs.append(trace.y)
        assert np.allclose(refs[0], refs[1], atol=1e-9)


class TestCPMG:
    def test_n1_matches_hahn(self):
        noise = co.NoiseModel(alpha=1.0, S0=4.0, seed=17)
        taus = np.linspace(0.1, 2.0, 12)
        res = co.cpmg_experiment(quiet_qubit(), [1], taus, noise, n_trajectories=300)
        trace_h, _ = co.hahn_echo_experiment(quiet_qubit(), taus / 2, noise,
                                             n_trajectories=300)
        assert np.allclose(res["traces"][1].y, trace_h.y, atol=1e-9)

    def test_static_noise_fully_refocused(self):
        noise = co.NoiseModel.quasi_static(5e4, seed=23)
        taus = np.linspace(0.1, 2.0, 8)
        res = co.cpmg_experiment(quiet_qubit(T2_intr=3.0), [1, 4], taus, noise,
                                 n_trajectories=200)
        for n in (1, 4):
            y = res["traces"][n].y
            assert np.allclose(y, np.exp(-taus / 3.0), atol=0.01)

    def test_scaling_exponent_for_one_over_f(self):
        noise = co.NoiseModel(alpha=1.0, S0=4.0, seed=3)
        taus = np.geomspace(0.02, 8.0, 18)
        res = co.cpmg_experiment(quiet_qubit(), [1, 2, 4, 8], taus, noise,
                                 n_trajectories=400)
        assert res["scaling_exponent"] == pytest.approx(0.5, abs=0.1)

    @pytest.mark.parametrize("alpha,expected", [(0.5, 1 / 3), (1.0, 0.5), (2.0, 2 / 3)])
    def test_oracle_scaling_exponent_alpha_over_alpha_plus_one(self, alpha, expected):
        # analytic tone-average oracle only: T2(N) ~ N^(alpha/(alpha+1))
        noise = co.NoiseModel(alpha=alpha, S0=4.0 * (2 * np.pi) ** (alpha - 1.0), seed=0,
                              omega_lo=2 * np.pi * 1e-4, omega_hi=2 * np.pi * 1e3,
                              n_tones=400)
        taus = np.geomspace(0.02, 30.0, 40)
        t2s = []
        for n in (1, 2, 4, 8):
            y = echo_decay_oracle(noise, taus, n)
            fit = co.fit_decay((taus, y), "stretched")
            t2s.append(fit.params["T"])
        slope = np.polyfit(np.log([1, 2, 4, 8]), np.log(t2s), 1)[0]
        assert slope == pytest.approx(expected, abs=0.1)

    def test_rejects_bad_counts(self):
        with pytest.raises(ValueError):
            co.cpmg_experiment(quiet_qubit(), [0], np.linspace(0.1, 1, 5))


class TestT1AndTipAngle:
    def test_t1_hits_1_over_e(self):
        trace = co.t1_experiment(quiet_qubit(T1=360.0, T2_intr=720.0),
                                 np.array([0.0, 360.0]))
        assert trace.y[0] == pytest.approx(1.0, abs=1e-12)
        assert trace.y[1] == pytest.approx(np.exp(-1.0), abs=1e-6)

    def test_t1_unshielded_preset(self):
        trace = co.t1_experiment(quiet_qubit(T1=1.0, T2_intr=2.0), np.array([3.0]))
        assert trace.y[0] == pytest.approx(np.exp(-3.0), abs=1e-6)

    def test_tip_angle_sin_squared(self):
        thetas = np.array([0.0, np.pi / 2, np.pi])
        trace = co.refocusing_angle_scan(quiet_qubit(), thetas)
        assert trace.y[0] == 0.0
        assert trace.y[1] == pytest.approx(0.5, abs=1e-9)
        assert trace.y[2] == pytest.approx(1.0, abs=1e-12)

    def test_tip_angle_range_check(self):
        with pytest.raises(ValueError):
            co.refocusing_angle_scan(quiet_qubit(), np.array([-0.1, 1.0]))


class TestFitDecay:
    def test_exact_exponential(self):
        t = np.linspace(0.0, 10.0, 50)
        fit = co.fit_decay((t, np.exp(-t / 2.14)), "exponential")
        assert fit.params["T"] == pytest.approx(2.14, abs=1e-6)
        assert fit.converged

    def test_exact_sin_squared(self):
        th = np.linspace(0.0, 2 * np.pi, 41)
        fit = co.fit_decay((th, np.sin(th / 2) ** 2), "sin_squared")
        assert fit.params["a"] == pytest.approx(1.0, abs=1e-9)

    def test_monte_carlo_echo_self_consistency(self):
        qubit = quiet_qubit(T2_intr=2.14)
        taus = np.linspace(0.05, 2.5, 25)
        _, fit = co.hahn_echo_experiment(qubit, taus,
                                         co.NoiseModel.quasi_static(2e3, seed=9),
                                         n_trajectories=10_000)
        assert fit.params["T"] == pytest.approx(2.14, rel=0.05)

    def test_too_few_points_rejected(self):
        with pytest.raises(ValueError):
            co.fit_decay((np.arange(3.0), np.ones(3)), "exponential")

    def test_deterministic(self):
        t = np.linspace(0.0, 5.0, 30)
        y = np.exp(-t / 1.3) + 0.01 * np.sin(t)
        f1 = co.fit_decay((t, y), "exponential")
        f2 = co.fit_decay((t, y), "exponential")
        assert f1 == f2


class TestReproducibility:
    def test_identical_seed_identical_trace(self):
        noise = co.NoiseModel(sigma_qs=1e3, alpha=1.0, S0=0.5, seed=99)
        taus = np.linspace(1e-4, 1e-2, 10)
        a = co.ramsey_experiment(quiet_qubit(), 0.0, taus, noise, n_trajectories=50)
        b = co.ramsey_experiment(quiet_qubit(), 0.0, taus, noise, n_trajectories=50)
        assert np.array_equal(a.y, b.y)
        assert np.array_equal(a.stderr, b.stderr)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 2**31), sigma=st.floats(0.0, 1e5),
           theta=st.floats(0.0, 2 * np.pi))
    def test_bloch_norm_bounded(self, seed, sigma, theta):
        noise = co.NoiseModel.quasi_static(sigma, seed=seed)
        seq = co.PulseSequence.of(co.Pulse(theta), co.Delay(1e-3), co.Pulse(theta / 2))
        mean, se = co.evolve(quiet_qubit(), seq, noise, n_trajectories=64)
        assert np.linalg.norm(mean) <= 1.0 + 3 * np.linalg.norm(se) + 1e-9

    def test_noiseless_unitary_preserves_norm(self):
        seq = co.PulseSequence.of(co.Pulse(0.7, 0.3), co.Delay(1e-3), co.Pulse(1.1, 1.9))
        mean, _ = co.evolve(quiet_qubit(), seq, n_trajectories=1, detuning=123.0)
        assert np.linalg.norm(mean) == pytest.approx(1.0, abs=1e-12)
