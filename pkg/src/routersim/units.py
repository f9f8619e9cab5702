"""Physical constants and unit helpers.

All internal frequencies and energies are angular (rad/s) with hbar = 1.
Configuration files and CLI output use engineering units (GHz, MHz, fF, nH);
conversion happens at those boundaries only.
"""

import math

# CODATA 2018 exact values
E_CHARGE = 1.602176634e-19      # elementary charge, C
HBAR = 1.054571817e-34          # reduced Planck constant, J s
H_PLANCK = 6.62607015e-34       # Planck constant, J s
K_BOLTZMANN = 1.380649e-23      # Boltzmann constant, J/K

# Magnetic flux quantum h/2e and the reduced version hbar/2e.
PHI0 = H_PLANCK / (2.0 * E_CHARGE)
PHI0_REDUCED = HBAR / (2.0 * E_CHARGE)

TWO_PI = 2.0 * math.pi


def ghz_to_angular(f_ghz: float) -> float:
    """Cyclic GHz -> angular rad/s."""
    return TWO_PI * f_ghz * 1e9


def angular_to_ghz(w: float) -> float:
    """Angular rad/s -> cyclic GHz."""
    return w / (TWO_PI * 1e9)


def mhz_to_angular(f_mhz: float) -> float:
    return TWO_PI * f_mhz * 1e6


def angular_to_mhz(w: float) -> float:
    return w / (TWO_PI * 1e6)


def femtofarad(c_ff: float) -> float:
    """fF -> F."""
    return c_ff * 1e-15


def nanohenry(l_nh: float) -> float:
    """nH -> H."""
    return l_nh * 1e-9


def josephson_energy_from_inductance(l_j: float) -> float:
    """Josephson energy (rad/s) of a junction with inductance ``l_j`` (H).

    E_J = (hbar/2e)^2 / L_J, returned divided by hbar.
    """
    return PHI0_REDUCED**2 / (l_j * HBAR)


def inductance_from_josephson_energy(e_j: float) -> float:
    """Inverse of :func:`josephson_energy_from_inductance` (e_j in rad/s)."""
    return PHI0_REDUCED**2 / (e_j * HBAR)


def charging_energy_from_capacitance(c: float) -> float:
    """Charging energy E_C = e^2/2C (rad/s) of a capacitance ``c`` (F)."""
    return E_CHARGE**2 / (2.0 * c * HBAR)
