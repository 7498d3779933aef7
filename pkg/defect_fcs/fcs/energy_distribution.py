from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .defect_distribution import DefectDistribution

ENERGY_PMF_COLUMNS = ('delta_e', 'prob')


class MixedInitialStateError(ValueError):
    """Only a ground-state start is supported, where end-point and two-point measurements agree."""


class WorkSplit(NamedTuple):
    total: float
    w_rev: float
    w_irr: float


class EnergyAtom(NamedTuple):
    delta_e: float
    prob: float


@dataclass(frozen=True)
class EnergyDistribution:
    """Delta comb of the internal energy change, one atom per even excitation number."""

    omega_start: float
    omega_now: float
    atoms: tuple[EnergyAtom, ...]

    def get_total_probability(self) -> float:
        return math.fsum(atom.prob for atom in self.atoms)

    def to_rows(self) -> list[tuple[float, float]]:
        return [(atom.delta_e, atom.prob) for atom in self.atoms]


def internal_energy_mean(omega_start: float, omega_now: float, nu_mean: float) -> WorkSplit:
    """<Delta E> = (omega_t - omega_t0)/2 + omega_t <nu>, split into the adiabatic level shift and the rest."""
    w_rev = (omega_now - omega_start) / 2
    w_irr = omega_now * nu_mean
    return WorkSplit(total=w_rev + w_irr, w_rev=w_rev, w_irr=w_irr)


def internal_energy_variance(omega_now: float, nu_variance: float) -> float:
    return omega_now**2 * nu_variance


def internal_energy_distribution(
    omega_start: float,
    omega_now: float,
    distribution: DefectDistribution,
    initial_populations: dict[int, float] | None = None,
) -> EnergyDistribution:
    """
    Atoms at Delta E = omega_t (m + 1/2) - omega_t0 / 2 weighted by p(m). initial_populations, if given, must
    describe the ground state {0: 1}.
    """
    if initial_populations is not None and initial_populations != {0: 1.0}:
        msg = f'Only ground-state initial populations are supported, got {initial_populations}'
        raise MixedInitialStateError(msg)

    atoms = [
        EnergyAtom(delta_e=omega_now * (m + 0.5) - omega_start / 2, prob=prob) for m, prob in distribution.items()
    ]
    atoms.sort(key=lambda atom: atom.delta_e)
    return EnergyDistribution(omega_start=omega_start, omega_now=omega_now, atoms=tuple(atoms))


def internal_energy_moments(energy_distribution: EnergyDistribution) -> tuple[float, float]:
    """Mean and variance of Delta E summed directly over the atoms."""
    atoms = energy_distribution.atoms
    mean = math.fsum(atom.delta_e * atom.prob for atom in atoms)
    variance = math.fsum((atom.delta_e - mean) ** 2 * atom.prob for atom in atoms)
    return mean, variance
