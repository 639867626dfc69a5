"""Physical constants (CODATA-2018) and isotope presets.

All energies in this package are expressed in Hz (spectroscopic convention),
magnetic fields in Tesla, and dipole moments in Debye unless stated otherwise.
"""

from dataclasses import dataclass
import math


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA-2018 values, SI units."""

    mu_B: float = 9.2740100783e-24    # Bohr magneton, J/T
    mu_N: float = 5.0507837461e-27    # nuclear magneton, J/T
    h: float = 6.62607015e-34         # Planck constant, J*s (exact)
    hbar: float = 6.62607015e-34 / (2.0 * math.pi)
    eps0: float = 8.8541878128e-12    # vacuum permittivity, F/m
    c: float = 299792458.0            # speed of light, m/s (exact)
    debye: float = 1e-21 / 299792458.0  # 1 Debye in C*m


CONST = PhysicalConstants()

# Handy spectroscopic ratios (Hz per Tesla).
MU_B_OVER_H = CONST.mu_B / CONST.h   # 13.996 244 9 GHz/T
MU_N_OVER_H = CONST.mu_N / CONST.h   # 7.622 593 2 MHz/T

# Wavenumber (cm^-1) to frequency (Hz): c expressed in cm/s.
HZ_PER_INVCM = CONST.c * 100.0       # 29.9792458 GHz per cm^-1
