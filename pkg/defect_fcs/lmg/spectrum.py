from __future__ import annotations

import logging
from typing import NamedTuple

import numpy as np
import numpy.typing as npt
from scipy.linalg import LinAlgError, eig_banded, eigh_tridiagonal
from scipy.optimize import linear_sum_assignment

from ..drive_protocol import DomainError
from .banded_hamiltonian import BandedHamiltonian
from .spin_sector import Parity, SpinSectorState

logger = logging.getLogger(__name__)

CRITICAL_FIELD = 1.0
DEFAULT_DEGENERACY_TOLERANCE = 1e-8


class EigensolverError(ArithmeticError):
    pass


class Spectrum:
    """
    Lowest eigenpairs of a Hamiltonian, ascending in energy. vectors holds one normalised sector vector per column.
    labels is the excitation number assigned to each level.
    """

    def __init__(
        self,
        energies: npt.NDArray[np.float64],
        vectors: npt.NDArray[np.float64],
        labels: npt.NDArray[np.int64],
    ):
        self.energies = energies
        self.vectors = vectors
        self.labels = labels

    def get_ground_energy(self) -> float:
        return float(self.energies[0])

    def get_ground_vector(self) -> npt.NDArray[np.float64]:
        return self.vectors[:, 0]

    def get_gap(self) -> float:
        return float(self.energies[1] - self.energies[0])

    def reordered(self, order: npt.NDArray[np.int64]) -> Spectrum:
        """Permute vectors and energies while keeping the label of each position."""
        return Spectrum(self.energies[order], self.vectors[:, order], self.labels)

    def __len__(self) -> int:
        return len(self.energies)


class GroundState(NamedTuple):
    energy: float
    state: SpinSectorState


def fix_phase(vector: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Makes the largest-magnitude amplitude real and positive."""
    pivot = vector[np.argmax(np.abs(vector))]
    return vector * (abs(pivot) / pivot)


def ensure_level_count(k: int, available: int) -> None:
    if not 1 <= k <= available:
        msg = f'Requested {k} levels, only 1..{available} are available'
        raise DomainError(msg)


def get_block_labels(parity: Parity, h_field: float, k: int) -> npt.NDArray[np.int64]:
    """
    Oscillator quantum number of the lowest k levels in a parity block. Above the critical field the block holds
    every second oscillator level; below it every oscillator level is a parity doublet.
    """
    levels = np.arange(k, dtype=np.int64)
    if h_field >= CRITICAL_FIELD:
        return 2 * levels + parity.get_offset()
    return levels


def instantaneous_spectrum(hamiltonian: BandedHamiltonian, k: int) -> Spectrum:
    ensure_level_count(k, hamiltonian.dim)
    try:
        energies, vectors = eig_banded(
            hamiltonian.to_upper_banded(), lower=False, select='i', select_range=(0, k - 1), check_finite=True
        )
    except (LinAlgError, ValueError) as e:
        msg = f'Banded eigensolve failed for {hamiltonian}'
        raise EigensolverError(msg) from e

    vectors = np.column_stack([fix_phase(vectors[:, i]) for i in range(k)])
    logger.debug('%s: %d levels, E0=%s', hamiltonian, k, energies[0])
    return Spectrum(energies, vectors, np.arange(k, dtype=np.int64))


def parity_block_spectrum(hamiltonian: BandedHamiltonian, k: int, parity: Parity = Parity.EVEN) -> Spectrum:
    indices = hamiltonian.sector.get_block_indices(parity)
    ensure_level_count(k, len(indices))
    diag, offdiag = hamiltonian.get_block(parity)

    if len(diag) == 1:
        block_energies, block_vectors = diag.copy(), np.ones((1, 1))
    else:
        try:
            block_energies, block_vectors = eigh_tridiagonal(diag, offdiag, select='i', select_range=(0, k - 1))
        except (LinAlgError, ValueError) as e:
            msg = f'Tridiagonal eigensolve of the {parity.name} block failed for {hamiltonian}'
            raise EigensolverError(msg) from e

    vectors = np.zeros((hamiltonian.dim, k))
    for i in range(k):
        vectors[indices, i] = fix_phase(block_vectors[:, i])
    labels = get_block_labels(parity, hamiltonian.h_field, k)
    return Spectrum(block_energies, vectors, labels)


def ground_state(hamiltonian: BandedHamiltonian, parity: Parity | None = None) -> GroundState:
    """
    Lowest eigenpair, either of the whole sector or of one parity block. At h = 0 the two blocks are degenerate,
    so a quench should pick the block explicitly.
    """
    if parity is None:
        spectrum = instantaneous_spectrum(hamiltonian, 1)
    else:
        spectrum = parity_block_spectrum(hamiltonian, 1, parity)
    state = SpinSectorState(spectrum.get_ground_vector().astype(np.complex128), time=0.0)
    return GroundState(spectrum.get_ground_energy(), state)


def get_degenerate_clusters(energies: npt.NDArray[np.float64], tolerance: float) -> list[npt.NDArray[np.int64]]:
    clusters = []
    start = 0
    for i in range(1, len(energies) + 1):
        if i == len(energies) or energies[i] - energies[i - 1] > tolerance * max(1.0, abs(energies[i])):
            if i - start > 1:
                clusters.append(np.arange(start, i, dtype=np.int64))
            start = i
    return clusters


class LevelTracker:
    """
    Keeps level indexing consistent between consecutive sample times. Inside each near-degenerate cluster the
    current eigenvectors are matched to the previous ones by maximal total overlap.
    """

    def __init__(self, degeneracy_tolerance: float = DEFAULT_DEGENERACY_TOLERANCE):
        self.degeneracy_tolerance = degeneracy_tolerance
        self.previous: Spectrum | None = None
        self.number_of_swaps = 0

    def track(self, spectrum: Spectrum) -> Spectrum:
        if self.previous is None:
            self.previous = spectrum
            return spectrum

        shared = min(len(self.previous), len(spectrum))
        order = np.arange(len(spectrum), dtype=np.int64)
        for cluster in get_degenerate_clusters(spectrum.energies[:shared], self.degeneracy_tolerance):
            overlaps = np.abs(self.previous.vectors[:, cluster].T @ spectrum.vectors[:, cluster]) ** 2
            rows, cols = linear_sum_assignment(overlaps, maximize=True)
            order[cluster[rows]] = cluster[cols]

        if not np.array_equal(order, np.arange(len(spectrum))):
            self.number_of_swaps += 1
            logger.debug('Relabelled near-degenerate levels: %s', order)
        tracked = spectrum.reordered(order)
        self.previous = tracked
        return tracked
