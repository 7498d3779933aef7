from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .floor_mode import FloorMode


class DomainError(ValueError):
    """A time or parameter lies outside the range on which the drive is defined."""


@dataclass(frozen=True)
class DriveProtocol:
    """
    Symmetric quench of the oscillator frequency across the crossing at t = 0. Units are hbar = M = 1, so all times
    and frequencies are dimensionless. The drive runs on [-tau, +tau] and the frequency follows delta * |t/tau|^eta,
    optionally held above the gap floor omega_c.
    """

    eta: float
    tau: float
    omega_c: float = 0.0
    delta: float = 1.0
    floor_mode: FloorMode = FloorMode.MAX_FLOOR

    def __post_init__(self) -> None:
        if self.eta < 0:
            msg = f'eta must be >= 0, got {self.eta}'
            raise DomainError(msg)
        if self.tau <= 0:
            msg = f'tau must be > 0, got {self.tau}'
            raise DomainError(msg)
        if self.omega_c < 0:
            msg = f'omega_c must be >= 0, got {self.omega_c}'
            raise DomainError(msg)
        if self.delta <= 0:
            msg = f'delta must be > 0, got {self.delta}'
            raise DomainError(msg)

    def omega_at(self, t: float) -> float:
        if not -self.tau <= t <= self.tau:
            msg = f't={t} is outside the drive window [-{self.tau}, {self.tau}]'
            raise DomainError(msg)
        # abs() makes the result exactly even in t
        power_law = self.delta * (abs(t) / self.tau) ** self.eta
        if self.floor_mode.is_max_floor():
            return max(self.omega_c, power_law)
        return power_law

    def omega_at_array(self, times: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        """Vectorised omega_at for solver nodes. Callers guarantee the times lie inside the drive window."""
        power_law = self.delta * (np.abs(times) / self.tau) ** self.eta
        if self.floor_mode.is_max_floor():
            return np.maximum(self.omega_c, power_law)
        return power_law

    def omega_squared_at(self, t: float) -> float:
        return self.omega_at(t) ** 2

    def get_floor_edges(self) -> tuple[float, float] | None:
        """
        Times at which the power law meets the floor, i.e. where the drive has a kink. None when there is no plateau.
        """
        if not self.floor_mode.is_max_floor() or self.omega_c <= 0:
            return None
        if self.omega_c >= self.delta or self.eta == 0:
            return None
        edge = self.tau * (self.omega_c / self.delta) ** (1 / self.eta)
        return -edge, edge

    def is_flat(self) -> bool:
        """The floor dominates the whole window, so the frequency never changes."""
        return self.floor_mode.is_max_floor() and self.omega_c >= self.delta


def rescaled_time(delta: float, eta: float, t: float) -> float:
    """Maps a drive of strength delta onto the delta = 1 solution: t -> |delta|^(-eta/(1+eta)) * t."""
    if delta <= 0:
        msg = f'delta must be > 0, got {delta}'
        raise DomainError(msg)
    return abs(delta) ** (-eta / (1 + eta)) * t


@dataclass(frozen=True)
class CriticalParams:
    eta: float
    p: float

    def zeta(self, t: float) -> float:
        return abs(t) ** (1 + self.eta) / (1 + self.eta)


def critical_params(eta: float) -> CriticalParams:
    """p = 1/(2(1+eta)) and zeta_t = |t|^(1+eta)/(1+eta), the only combinations entering the critical solution."""
    if eta < 0 or math.isnan(eta):
        msg = f'eta must be >= 0, got {eta}'
        raise DomainError(msg)
    return CriticalParams(eta=eta, p=1 / (2 * (1 + eta)))
