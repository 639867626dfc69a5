"""Donor spin-qubit simulation toolkit.

Numerical models of a singly-ionized chalcogen donor in silicon-28:
hyperfine spin Hamiltonian spectroscopy (`spincore`), pulsed coherence
experiments under noise (`coherence`), optical pumping and line-shape
conversions (`optics`), and donor-cavity QED readout (`cavity`).
"""

from .constants import CONST, PhysicalConstants
from .spincore import (
    ClockPoint,
    EigenSystem,
    SPIN_PRESETS,
    SpinSystem,
    build_hamiltonian,
    eigensystem,
    field_sweep,
    find_clock_transition,
    transition_frequencies,
)
from .coherence import (
    Delay,
    FitResult,
    NoiseModel,
    Pulse,
    PulseSequence,
    QubitModel,
    SignalTrace,
    cpmg_experiment,
    evolve,
    fit_decay,
    hahn_echo_experiment,
    rabi_experiment,
    ramsey_experiment,
    refocusing_angle_scan,
    t1_experiment,
)
from .optics import (
    OpticalLine,
    PopulationState,
    PumpModel,
    absorption_spectrum,
    dipole_from_lifetime,
    hyperpolarize,
    lifetime_discrepancy,
    linewidth_to_lifetime,
    lifetime_to_linewidth,
    radiative_lifetime,
    wavenumber_to_hz,
)
from .cavity import (
    CavityMode,
    CoupledSystem,
    Emitter,
    StragglePlacement,
    coupling_strength,
    coupling_variation,
    jc_ladder,
    readout_fidelity,
    strong_coupling_check,
    transmission_spectrum,
)

__version__ = "0.1.0"
