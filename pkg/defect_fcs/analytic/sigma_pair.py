from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, auto


class PoleError(ValueError):
    """p sits on a pole of 1/sin or 1/cos (p = 0 or p = 1/2, i.e. eta -> infinity or eta = 0)."""


class CrossingBranch(Enum):
    BEFORE_CROSSING = auto()
    AFTER_CROSSING = auto()

    def is_before_crossing(self) -> bool:
        return self is CrossingBranch.BEFORE_CROSSING

    @staticmethod
    def from_time(t: float) -> CrossingBranch:
        return CrossingBranch.BEFORE_CROSSING if t < 0 else CrossingBranch.AFTER_CROSSING


@dataclass(frozen=True)
class SigmaPair:
    sigma1: float
    sigma2: float
    branch: CrossingBranch


def sigma_coeffs(p: float, branch: CrossingBranch) -> SigmaPair:
    """
    Coefficients gluing the two Bessel solutions into the width that is adiabatic long before the crossing. After
    the crossing sin and cos trade places.
    """
    if not 0 < p < 0.5:
        msg = f'p must lie strictly inside (0, 1/2), got {p}'
        raise PoleError(msg)
    prefactor = math.sqrt(math.pi / 2)
    cos_half = math.cos(p * math.pi / 2)
    sin_half = math.sin(p * math.pi / 2)
    if branch.is_before_crossing():
        return SigmaPair(
            sigma1=prefactor / math.sqrt(p) / (2 * cos_half), sigma2=prefactor / (2 * sin_half), branch=branch
        )
    return SigmaPair(
        sigma1=prefactor / math.sqrt(p) / (2 * sin_half), sigma2=prefactor / (2 * cos_half), branch=branch
    )
