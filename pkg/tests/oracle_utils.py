"""Independent oracles used by the test suite.

These deliberately avoid the library's own code paths: the 4x4 spin matrix
is written out element by element, the echo decay comes from an analytic
Bessel-product average over tone phases, and the Poisson threshold scan uses
direct log-factorial sums.
"""

import math

import numpy as np
from scipy.special import j0


def spin_half_pair_hamiltonian(B, g_e=2.0057, g_n=1.07, A=1.66e9):
    """Explicit 4x4 matrix, basis (++, +-, -+, --) = |m_S, m_I>, energies in Hz."""
    mu_B = 9.2740100783e-24
    mu_N = 5.0507837461e-27
    h = 6.62607015e-34
    e = g_e * mu_B / h * B / 2.0
    nm = g_n * mu_N / h * B / 2.0
    H = np.diag([e - nm + A / 4, e + nm - A / 4, -e - nm - A / 4, -e + nm + A / 4])
    H[1, 2] = H[2, 1] = A / 2.0
    return H


def breit_rabi_s0_t0(B, g_e=2.0057, g_n=1.07, A=1.66e9):
    """Closed-form S0<->T0 frequency: A*sqrt(1 + x^2), x = (g_e mu_B + g_n mu_N) B / (h A)."""
    mu_B = 9.2740100783e-24
    mu_N = 5.0507837461e-27
    h = 6.62607015e-34
    x = (g_e * mu_B + g_n * mu_N) * B / (h * A)
    return A * math.sqrt(1.0 + x * x)


def _sequence_flip_times(total_time, n_pulses):
    """Refocusing times of an N-pulse CPMG train of total free time T."""
    gap = total_time / (2 * n_pulses)
    return [gap * (2 * k + 1) for k in range(n_pulses)]


def _toggled_fourier(omega, total_time, n_pulses):
    """integral of s(t) e^{i omega t} dt with sign s toggling at each pi pulse."""
    bounds = [0.0] + _sequence_flip_times(total_time, n_pulses) + [total_time]
    total = np.zeros_like(omega, dtype=complex)
    sign = 1.0
    for u, v in zip(bounds[:-1], bounds[1:]):
        total += sign * (np.exp(1j * omega * v) - np.exp(1j * omega * u)) / (1j * omega)
        sign = -sign
    return total


def echo_decay_oracle(noise, total_times, n_pulses):
    """Exact phase-averaged echo amplitude for the discrete-tone noise model.

    Each tone contributes a factor J0(a_k |F(omega_k)|) to <cos(phi)>, where
    F is the toggled-frame Fourier integral of the sequence.  The quasi-static
    component refocuses exactly and contributes nothing.
    """
    omega, amp = noise.tone_table()
    out = np.empty(len(total_times))
    for i, T in enumerate(total_times):
        f = np.abs(_toggled_fourier(omega, T, n_pulses))
        out[i] = float(np.prod(j0(amp * f)))
    return out


def ramsey_envelope_oracle(sigma_qs, taus):
    """Gaussian free-induction envelope of quasi-static dephasing."""
    return np.exp(-0.5 * (sigma_qs * np.asarray(taus)) ** 2)


def poisson_cdf(k, mu):
    if k < 0:
        return 0.0
    if mu == 0.0:
        return 1.0
    return sum(math.exp(-mu + j * math.log(mu) - math.lgamma(j + 1)) for j in range(k + 1))


def poisson_readout_oracle(T_on, T_off, M):
    """Exhaustive threshold scan with direct factorial sums.

    Returns (best_fidelity, best_threshold) where counts >= threshold are
    assigned to the brighter state.
    """
    mu_lo, mu_hi = sorted((M * T_on, M * T_off))
    best_err, best_k = 1.0, 0
    kmax = int(mu_hi + 10 * math.sqrt(mu_hi) + 20)
    for k in range(kmax + 1):
        p_err = 0.5 * ((1.0 - poisson_cdf(k - 1, mu_lo)) + poisson_cdf(k - 1, mu_hi))
        if p_err < best_err:
            best_err, best_k = p_err, k
    return 1.0 - best_err, best_k


def gaussian_cosine_mean(a, sigma):
    """E[cos(a Z)] for Z ~ N(0, sigma): exp(-a^2 sigma^2 / 2)."""
    return math.exp(-0.5 * a * a * sigma * sigma)
