from __future__ import annotations

import math
from dataclasses import dataclass


class DegenerateStateError(ValueError):
    """Raised when the reflection coefficient is 0/0, i.e. omega = 0 together with an infinitely wide, static state."""


@dataclass(frozen=True)
class OscState:
    """
    Ermakov state of the driven oscillator at time t: the effective width xi, its velocity xi_dot and the total phase
    accumulated since the start of the drive.
    """

    t: float
    xi: float
    xi_dot: float
    phase: float

    def get_omega_complex(self) -> complex:
        """Complex Gaussian exponent Omega_t = -i xi_dot/xi + 1/(2 xi^2) of the evolved wave function."""
        return complex(1 / (2 * self.xi**2), -self.xi_dot / self.xi)

    def oscillator_energy(self, omega: float) -> float:
        """Conserved along the trajectory wherever omega is constant."""
        return self.xi_dot**2 / 2 + omega**2 * self.xi**2 / 2 + 1 / (8 * self.xi**2)

    def as_tuple(self) -> tuple[float, float, float]:
        return self.xi, self.xi_dot, self.phase


def reflection_coefficient(state: OscState, omega: float) -> float:
    """
    |R_t|^2 of the state measured against the instantaneous oscillator of frequency omega. It fully fixes the
    excitation statistics and vanishes iff the state is the instantaneous ground state.
    """
    if state.xi <= 0:
        msg = f'xi must be > 0, got {state.xi}'
        raise ValueError(msg)
    if omega < 0:
        msg = f'omega must be >= 0, got {omega}'
        raise ValueError(msg)

    # Divided in steps so that very wide states underflow instead of overflowing
    inverse_width = 0.5 / state.xi / state.xi
    velocity_ratio = state.xi_dot / state.xi
    velocity_term = velocity_ratio * velocity_ratio
    numerator = (inverse_width - omega) ** 2 + velocity_term
    denominator = (inverse_width + omega) ** 2 + velocity_term
    if denominator == 0 or not math.isfinite(denominator):
        msg = f'Reflection coefficient is undefined at {state} with omega={omega}'
        raise DegenerateStateError(msg)
    return numerator / denominator
