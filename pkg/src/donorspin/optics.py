"""Optical absorption lines, hyperpolarization pumping, and lifetime/dipole conversions.

Spectra are sums of area-normalized Lorentzians on a wavenumber grid, with
each line weighted by the population of its ground manifold, reproducing the
singlet/triplet-selective absorption scans of the pumping cycle.  The pump
itself is a two-pool rate model: resonant light depletes the pumped manifold
at rate R*(1 - branch_back) and the complement accumulates.

Two independent lifetime notions coexist deliberately: the lifetime implied
by a homogeneous Lorentzian linewidth (tau = 1/(2 pi dnu)) and the radiative
lifetime computed from the transition dipole.  Their large ratio for the
default parameters is a feature of the modelled system, not an error, and
`lifetime_discrepancy` reports it.
"""

from dataclasses import dataclass

import numpy as np

from .constants import CONST, HZ_PER_INVCM

__all__ = [
    "OpticalLine",
    "PumpModel",
    "PopulationState",
    "absorption_spectrum",
    "hyperpolarize",
    "linewidth_to_lifetime",
    "lifetime_to_linewidth",
    "wavenumber_to_hz",
    "radiative_lifetime",
    "dipole_from_lifetime",
    "lifetime_discrepancy",
]


@dataclass(frozen=True)
class OpticalLine:
    """One Lorentzian absorption line.

    center is in cm^-1; fwhm is the Lorentzian full width in cm^-1;
    strength is the relative integrated area at unit ground-state
    population; ground_state selects which population weights the line.
    """

    center: float
    fwhm: float
    strength: float = 1.0
    ground_state: str = "singlet"
    isotope: str = "77Se"

    def __post_init__(self):
        if self.fwhm <= 0:
            raise ValueError("fwhm must be positive")
        if self.strength < 0:
            raise ValueError("strength must be non-negative")
        if self.ground_state not in ("singlet", "triplet"):
            raise ValueError("ground_state must be 'singlet' or 'triplet'")

    @property
    def center_hz(self) -> float:
        return self.center * HZ_PER_INVCM


@dataclass(frozen=True)
class PumpModel:
    """Linear optical pumping: depletion rate R = rate_coeff * power."""

    power: float
    rate_coeff: float
    branch_back: float = 0.0

    def __post_init__(self):
        if self.rate_coeff <= 0 or self.power < 0:
            raise ValueError("power must be >= 0 and rate_coeff > 0")
        if not 0.0 <= self.branch_back < 1.0:
            raise ValueError("branch_back must lie in [0, 1)")

    @property
    def effective_rate(self) -> float:
        return self.rate_coeff * self.power * (1.0 - self.branch_back)

    @property
    def time_constant(self) -> float:
        r = self.effective_rate
        return np.inf if r == 0.0 else 1.0 / r

    @classmethod
    def calibrated(cls, power: float, time_constant: float, ref_power: float,
                   branch_back: float = 0.0) -> "PumpModel":
        """Pump whose depletion time constant equals time_constant at ref_power."""
        coeff = 1.0 / (time_constant * ref_power * (1.0 - branch_back))
        return cls(power=power, rate_coeff=coeff, branch_back=branch_back)


@dataclass(frozen=True)
class PopulationState:
    p_singlet: float
    p_triplet: float

    def __post_init__(self):
        if self.p_singlet < 0 or self.p_triplet < 0:
            raise ValueError("populations must be non-negative")
        if abs(self.p_singlet + self.p_triplet - 1.0) > 1e-12:
            raise ValueError("populations must sum to 1")

    def of(self, manifold: str) -> float:
        return self.p_singlet if manifold == "singlet" else self.p_triplet


def _lorentzian(nu, center, fwhm):
    """Area-normalized Lorentzian on the wavenumber axis."""
    hw = fwhm / 2.0
    return (hw / np.pi) / ((nu - center) ** 2 + hw**2)


def absorption_spectrum(lines, populations: PopulationState, nu_grid) -> np.ndarray:
    """Absorbance on nu_grid (cm^-1): sum of population-weighted Lorentzians."""
    nu = np.asarray(nu_grid, dtype=float)
    if len(nu) > 1 and not np.all(np.diff(nu) > 0):
        raise ValueError("wavenumber grid must be strictly increasing")
    out = np.zeros_like(nu)
    for line in lines:
        weight = line.strength * populations.of(line.ground_state)
        if weight:
            out += weight * _lorentzian(nu, line.center, line.fwhm)
    return out


def spectrum_to_csv(path, nu_grid, absorbance):
    with open(path, "w") as fh:
        fh.write("wavenumber_cm1,absorbance\n")
        for nu, a in zip(nu_grid, absorbance):
            fh.write(f"{nu:.17e},{a:.17e}\n")


def hyperpolarize(pump: PumpModel, pumped_state: str, t_grid,
                  initial: PopulationState = None):
    """Populations versus time while pumping one manifold.

    Closed-form two-pool solution: the pumped population decays as
    exp(-t * R * (1 - branch_back)), the complement takes up the difference.
    Returns (t_grid, p_singlet, p_triplet).
    """
    if pumped_state not in ("singlet", "triplet"):
        raise ValueError("pumped_state must be 'singlet' or 'triplet'")
    t = np.asarray(t_grid, dtype=float)
    if len(t) > 1 and not np.all(np.diff(t) > 0):
        raise ValueError("time grid must be strictly increasing")
    if initial is None:
        initial = PopulationState(0.5, 0.5)
    p0 = initial.of(pumped_state)
    pumped = p0 * np.exp(-pump.effective_rate * t)
    other = 1.0 - pumped
    if pumped_state == "singlet":
        return t, pumped, other
    return t, other, pumped


def wavenumber_to_hz(fwhm_cm1: float) -> float:
    return fwhm_cm1 * HZ_PER_INVCM


def linewidth_to_lifetime(fwhm: float, unit: str = "Hz") -> float:
    """Lifetime (s) implied by a homogeneous Lorentzian FWHM."""
    if fwhm <= 0:
        raise ValueError("fwhm must be positive")
    dnu = fwhm * HZ_PER_INVCM if unit == "cm-1" else fwhm
    return 1.0 / (2.0 * np.pi * dnu)


def lifetime_to_linewidth(tau: float, unit: str = "Hz") -> float:
    """Inverse of linewidth_to_lifetime."""
    if tau <= 0:
        raise ValueError("lifetime must be positive")
    dnu = 1.0 / (2.0 * np.pi * tau)
    return dnu / HZ_PER_INVCM if unit == "cm-1" else dnu


def radiative_lifetime(d_debye: float, lambda0: float, n_index: float) -> float:
    """Spontaneous-emission lifetime from the transition dipole.

    tau = 3 pi eps0 hbar c^3 / (n omega^3 d^2) with omega = 2 pi c / lambda0;
    the refractive index enters linearly (no local-field correction).
    """
    if d_debye <= 0 or lambda0 <= 0 or n_index <= 0:
        raise ValueError("dipole, wavelength and index must be positive")
    d = d_debye * CONST.debye
    omega = 2.0 * np.pi * CONST.c / lambda0
    return 3.0 * np.pi * CONST.eps0 * CONST.hbar * CONST.c**3 / (n_index * omega**3 * d**2)


def dipole_from_lifetime(tau_rad: float, lambda0: float, n_index: float) -> float:
    """Transition dipole (Debye) from a radiative lifetime; inverse of radiative_lifetime."""
    if tau_rad <= 0 or lambda0 <= 0 or n_index <= 0:
        raise ValueError("lifetime, wavelength and index must be positive")
    omega = 2.0 * np.pi * CONST.c / lambda0
    d = np.sqrt(3.0 * np.pi * CONST.eps0 * CONST.hbar * CONST.c**3 / (n_index * omega**3 * tau_rad))
    return d / CONST.debye


def lifetime_discrepancy(fwhm_cm1: float, d_debye: float, lambda0: float, n_index: float) -> dict:
    """Compare linewidth-implied and radiative lifetimes without reconciling them."""
    tau_lw = linewidth_to_lifetime(fwhm_cm1, unit="cm-1")
    tau_rad = radiative_lifetime(d_debye, lambda0, n_index)
    return {"tau_linewidth_s": tau_lw, "tau_radiative_s": tau_rad,
            "ratio": tau_rad / tau_lw}
