"""Optical walkthrough: absorption lines, hyperpolarization, lifetimes.

Builds a two-line singlet/triplet absorption spectrum, pumps one line to
hyperpolarize the spin population, and compares the lifetime implied by the
optical linewidth with the radiative lifetime implied by the dipole moment.

Run:  python demos/optical_pumping_demo.py
Writes absorption_demo.csv next to the script.
"""

import pathlib

import numpy as np

from donorspin import optics as op

HERE = pathlib.Path(__file__).parent

print("== absorption spectrum ==")
lines = [op.OpticalLine(center=3446.00, fwhm=0.007, ground_state="singlet"),
         op.OpticalLine(center=3446.06, fwhm=0.007, ground_state="triplet")]
pops = op.PopulationState(p_singlet=0.5, p_triplet=0.5)
nu = np.linspace(3445.9, 3446.16, 4001)
spectrum = op.absorption_spectrum(lines, pops, nu)
op.spectrum_to_csv(HERE / "absorption_demo.csv", nu, spectrum)
print(f"two lines, unpolarized populations -> wrote {HERE / 'absorption_demo.csv'}")

print("\n== hyperpolarization by resonant pumping ==")
pump = op.PumpModel.calibrated(power=4e-6, time_constant=50e-3, ref_power=4e-6)
print(f"4 uW pump: time constant {pump.time_constant * 1e3:.1f} ms")
pump8 = op.PumpModel.calibrated(power=8e-6, time_constant=50e-3, ref_power=4e-6)
print(f"8 uW pump: time constant {pump8.time_constant * 1e3:.1f} ms (linear in power)")
t = np.linspace(0.0, 0.5, 6)
_, p_s, p_t = op.hyperpolarize(pump, "triplet", t)
for ti, psi, pti in zip(t, p_s, p_t):
    print(f"t = {ti * 1e3:5.0f} ms: singlet {psi:.4f}, triplet {pti:.4f}")

print("\n== lifetime bookkeeping ==")
tau_line = op.linewidth_to_lifetime(0.007, unit="cm-1")
tau_rad = op.radiative_lifetime(1.3, 2.9e-6, 3.45)
print(f"0.007 cm^-1 linewidth -> {op.wavenumber_to_hz(0.007) / 1e6:.1f} MHz "
      f"-> {tau_line * 1e9:.2f} ns total lifetime")
print(f"1.3 Debye dipole -> {tau_rad * 1e6:.2f} us radiative lifetime")
rep = op.lifetime_discrepancy(0.007, 1.3, 2.9e-6, 3.45)
print(f"ratio {rep['ratio']:.2e}: the transition is overwhelmingly non-radiative")
