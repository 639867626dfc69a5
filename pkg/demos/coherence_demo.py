"""Pulse-sequence coherence walkthrough: Rabi, Ramsey, Hahn echo, CPMG.

Monte-Carlo Bloch-vector simulations with a quasi-static + 1/f noise model,
each fitted to the appropriate decay law.  Trajectory counts are kept small
enough to finish in well under a minute; crank them up for smoother curves.

Run:  python demos/coherence_demo.py
"""

import numpy as np

from donorspin import coherence as co

rng_seed = 42

print("== Rabi oscillations ==")
qubit = co.QubitModel(omega_R=2 * np.pi * 1e3)
durations = np.linspace(0.0, 5e-3, 120)
trace = co.rabi_experiment(qubit, 1.0, durations, co.NoiseModel.quiet(rng_seed),
                           n_trajectories=1)
period = 2 * np.pi / qubit.omega_R
print(f"drive period {period * 1e3:.3f} ms; signal at one period: {np.interp(period, trace.x, trace.y):+.4f}")

print("\n== Ramsey fringes, T2* from quasi-static spread ==")
t2_star = 1e-3
noise = co.NoiseModel.quasi_static(np.sqrt(2.0) / t2_star, seed=rng_seed)
taus = np.linspace(2e-5, 3e-3, 80)
trace = co.ramsey_experiment(qubit, 2 * np.pi * 5e3, taus, noise, n_trajectories=800)
fit = co.fit_decay(trace, "gaussian_sinusoid")
print(f"configured T2* = {t2_star * 1e3:.2f} ms, fitted {fit.params['T'] * 1e3:.2f} ms "
      f"(fringe {fit.params['f'] / 1e3:.2f} kHz)")

print("\n== Hahn echo, intrinsic T2 ==")
qubit_t2 = co.QubitModel(T2_intr=2.14)
trace, fit = co.hahn_echo_experiment(qubit_t2, np.linspace(0.05, 2.0, 20),
                                     co.NoiseModel.quiet(rng_seed), n_trajectories=400)
print(f"configured T2 = 2.14 s, fitted {fit.params['T']:.3f} s")

print("\n== CPMG: coherence extension with pulse number ==")
noise = co.NoiseModel(alpha=1.0, S0=4.0, seed=3)
res = co.cpmg_experiment(co.QubitModel(), [1, 2, 4, 8], np.geomspace(0.02, 8.0, 18),
                         noise, n_trajectories=200)
for n, t2 in sorted(res["T2"].items()):
    print(f"N = {n}: T2 = {t2:.3f} s")
print(f"log-log scaling exponent {res['scaling_exponent']:.3f} "
      f"(sqrt(N) would be 0.5 for 1/f noise)")
