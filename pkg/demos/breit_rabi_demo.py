"""Field spectroscopy walkthrough: Breit-Rabi diagram and clock transitions.

Sweeps the hyperfine-coupled electron-nuclear system through low magnetic
fields, prints the resolved resonance triplet at Earth's field, and locates
the two field-insensitive (clock) operating points.

Run:  python demos/breit_rabi_demo.py
Writes breit_rabi_demo.csv and breit_rabi_demo.svg next to the script.
"""

import pathlib

import numpy as np

from donorspin import spincore as sc

HERE = pathlib.Path(__file__).parent
se = sc.SPIN_PRESETS["77Se"]

print("== zero field ==")
[(_, f0)] = sc.transition_frequencies(se, 0.0, [("S0", "T0")])
print(f"S0 <-> T0 splitting: {f0 / 1e9:.3f} GHz (the hyperfine constant A)")

print("\n== Earth's field, 70 uT ==")
pairs = [("S0", "T-"), ("S0", "T0"), ("S0", "T+")]
freqs = dict(sc.transition_frequencies(se, 70e-6, pairs))
center = freqs[("S0", "T0")]
for pair, f in freqs.items():
    print(f"S0 <-> {pair[1]}: {f / 1e6:.6f} MHz  ({(f - center) / 1e3:+8.3f} kHz from center)")

print("\n== sweep 0 .. 200 uT ==")
grid, table = sc.field_sweep(se, 0.0, 200e-6, 201, pairs)
csv_path = HERE / "breit_rabi_demo.csv"
sc.sweep_to_csv(csv_path, grid, table, pairs)
print(f"wrote {csv_path} ({len(grid)} rows)")

print("\n== clock transitions (df/dB = 0) ==")
for pair, b_range in [(("S0", "T0"), (0.0, 1e-3)), (("S0", "T-"), (0.5, 3.0))]:
    for cp in sc.find_clock_transition(se, pair, b_range, n_scan=65):
        print(f"{pair[0]} <-> {pair[1]}: B = {cp.B_cl:.6f} T, "
              f"f = {cp.f / 1e9:.6f} GHz, d2f/dB2 = {cp.d2:.3e} Hz/T^2")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for j, pair in enumerate(pairs):
        ax.plot(grid * 1e6, (table[:, j] - f0) / 1e6, label=f"{pair[0]}-{pair[1]}")
    ax.set_xlabel("B (uT)")
    ax.set_ylabel("shift from A (MHz)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(HERE / "breit_rabi_demo.svg")
    print(f"\nwrote {HERE / 'breit_rabi_demo.svg'}")
except ImportError:
    print("\nmatplotlib not available; skipped the figure")
