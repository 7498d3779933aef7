import logging
import math

import numpy as np
import numpy.typing as npt

from ..fcs.defect_distribution import TruncationError
from .banded_hamiltonian import BandedHamiltonian
from .spectrum import Spectrum
from .spin_sector import SpinSectorState

logger = logging.getLogger(__name__)

MIN_CAPTURED_WEIGHT = 1 - 1e-8
WORK_TOLERANCE = 1e-10


class EnergyBelowGroundError(ArithmeticError):
    pass


def get_level_populations(state: SpinSectorState, spectrum: Spectrum) -> npt.NDArray[np.float64]:
    return np.abs(spectrum.vectors.T @ state.amplitudes) ** 2


def get_captured_weight(state: SpinSectorState, spectrum: Spectrum) -> float:
    return math.fsum(get_level_populations(state, spectrum))


def defect_density(state: SpinSectorState, spectrum: Spectrum) -> float:
    """Sum over levels of label * |<phi_k|psi>|^2."""
    populations = get_level_populations(state, spectrum)
    captured = math.fsum(populations)
    if captured < MIN_CAPTURED_WEIGHT:
        msg = f'The {len(spectrum)} tracked levels only capture weight {captured} of the state'
        raise TruncationError(msg, attained_mass=captured)
    return math.fsum(spectrum.labels * populations)


def irreversible_work(state: SpinSectorState, hamiltonian: BandedHamiltonian, e0: float) -> float:
    """
    <H> - E0 of the normalised state. Rounding below zero, up to WORK_TOLERANCE relative to |E0|, is clamped to 0;
    anything lower means e0 is not the ground energy or the state left the sector.
    """
    amplitudes = state.amplitudes
    work = hamiltonian.expectation(amplitudes) / float(np.vdot(amplitudes, amplitudes).real) - e0
    if work < -WORK_TOLERANCE * max(1.0, abs(e0)):
        msg = f'<H> lies {-work} below the ground energy {e0} at t={state.time}'
        raise EnergyBelowGroundError(msg)
    if work < 0:
        logger.debug('Clamping work %s to 0 at t=%s', work, state.time)
        return 0.0
    return work


def ground_overlap(state: SpinSectorState, spectrum: Spectrum) -> float:
    return float(abs(np.vdot(spectrum.get_ground_vector(), state.amplitudes)) ** 2)
