from __future__ import annotations

import math
from dataclasses import dataclass

from ..drive_protocol import DomainError
from .defect_distribution import DefectDistribution


@dataclass(frozen=True)
class MomentSet:
    """First three raw moments of the excitation number nu."""

    mean: float
    second: float
    third: float

    @property
    def variance(self) -> float:
        return self.second - self.mean**2


def moments_closed_form(r_sq: float) -> MomentSet:
    if not 0 <= r_sq < 1:
        msg = f'r_sq must lie in [0, 1), got {r_sq}'
        raise DomainError(msg)
    q = r_sq
    return MomentSet(
        mean=q / (1 - q),
        second=q * (2 + q) / (1 - q) ** 2,
        third=q * (4 + 10 * q + q**2) / (1 - q) ** 3,
    )


def moments_from_pmf(distribution: DefectDistribution) -> MomentSet:
    """Brute-force sums of m^j p(m); use a tail_eps far below the comparison tolerance."""
    weighted = [(float(m), prob) for m, prob in distribution.items()]
    return MomentSet(
        mean=math.fsum(m * prob for m, prob in weighted),
        second=math.fsum(m**2 * prob for m, prob in weighted),
        third=math.fsum(m**3 * prob for m, prob in weighted),
    )
