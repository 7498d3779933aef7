from __future__ import annotations

import logging
import math
from collections.abc import Iterator

import numpy as np
import numpy.typing as npt

from ..drive_protocol import DomainError

logger = logging.getLogger(__name__)

DEFAULT_TAIL_EPS = 1e-12
MAX_EXCITATION_NUMBER = 1_000_000
# Beyond this excitation number the recurrence continues in log space
LOG_SPACE_THRESHOLD = 300

DEFECT_PMF_COLUMNS = ('m', 'prob')


class TruncationError(ArithmeticError):
    def __init__(self, message: str, attained_mass: float):
        super().__init__(message)
        self.attained_mass = attained_mass


class DefectDistribution:
    """
    Probability of finding m excitations after the drive. Only even m carry weight; the probabilities are stored
    for m = 0, 2, 4, ... and the unassigned tail mass is at most tail_eps.
    """

    def __init__(self, r_sq: float, even_probabilities: npt.NDArray[np.float64], tail_eps: float):
        self.r_sq = r_sq
        self.even_probabilities = even_probabilities
        self.tail_eps = tail_eps

    def get_prob(self, m: int) -> float:
        if m < 0 or m % 2 == 1:
            return 0.0
        pair_index = m // 2
        if pair_index >= len(self.even_probabilities):
            return 0.0
        return float(self.even_probabilities[pair_index])

    def get_excitation_numbers(self) -> npt.NDArray[np.int64]:
        return 2 * np.arange(len(self.even_probabilities), dtype=np.int64)

    def get_max_excitation_number(self) -> int:
        return 2 * (len(self.even_probabilities) - 1)

    def get_total_mass(self) -> float:
        return math.fsum(self.even_probabilities)

    def items(self) -> Iterator[tuple[int, float]]:
        for m, prob in zip(self.get_excitation_numbers(), self.even_probabilities, strict=True):
            yield int(m), float(prob)

    def to_rows(self) -> list[tuple[int, float]]:
        return list(self.items())

    def __len__(self) -> int:
        return len(self.even_probabilities)

    def __repr__(self) -> str:
        return (
            f'DefectDistribution(r_sq={self.r_sq}, max_m={self.get_max_excitation_number()}, '
            f'tail_eps={self.tail_eps})'
        )


def get_number_of_pairs_needed(r_sq: float, tail_eps: float) -> int:
    """
    Pairs guaranteeing the geometric tail bound p(m) r_sq / (1 - r_sq) < tail_eps, using p(m) <= sqrt(1 - r_sq)
    r_sq^(m/2).
    """
    log_target = math.log(tail_eps * math.sqrt(1 - r_sq))
    return max(1, math.ceil(log_target / math.log(r_sq)))


def get_even_probabilities(r_sq: float, number_of_pairs: int) -> npt.NDArray[np.float64]:
    """p(0) = sqrt(1 - r_sq), p(m + 2) = p(m) r_sq (m + 1) / (m + 2)."""
    m = 2 * np.arange(number_of_pairs - 1, dtype=np.float64)
    ratios = r_sq * (m + 1) / (m + 2)
    probabilities = np.empty(number_of_pairs)
    probabilities[0] = math.sqrt(1 - r_sq)

    direct_pairs = min(number_of_pairs - 1, LOG_SPACE_THRESHOLD // 2)
    probabilities[1 : direct_pairs + 1] = probabilities[0] * np.cumprod(ratios[:direct_pairs])
    if direct_pairs < number_of_pairs - 1:
        log_start = math.log(probabilities[direct_pairs])
        log_tail = log_start + np.cumsum(np.log(ratios[direct_pairs:]))
        probabilities[direct_pairs + 1 :] = np.exp(log_tail)
    return probabilities


def excitation_pmf(r_sq: float, tail_eps: float = DEFAULT_TAIL_EPS) -> DefectDistribution:
    if not 0 <= r_sq < 1:
        msg = f'r_sq must lie in [0, 1), got {r_sq}'
        raise DomainError(msg)
    if tail_eps <= 0:
        msg = f'tail_eps must be > 0, got {tail_eps}'
        raise DomainError(msg)
    if r_sq == 0:
        return DefectDistribution(r_sq, np.array([1.0]), tail_eps)

    max_pairs = MAX_EXCITATION_NUMBER // 2 + 1
    number_of_pairs = get_number_of_pairs_needed(r_sq, tail_eps) + 1
    if number_of_pairs > max_pairs:
        probabilities = get_even_probabilities(r_sq, max_pairs)
        attained_mass = math.fsum(probabilities)
        msg = f'Excitation cap m={MAX_EXCITATION_NUMBER} reached before the tail bound for r_sq={r_sq}'
        raise TruncationError(msg, attained_mass=attained_mass)

    probabilities = get_even_probabilities(r_sq, number_of_pairs)
    tail_bounds = probabilities * r_sq / (1 - r_sq)
    first_below = int(np.argmax(tail_bounds < tail_eps))
    probabilities = probabilities[: first_below + 1]
    logger.debug('excitation pmf r_sq=%s truncated at m=%d', r_sq, 2 * first_below)
    return DefectDistribution(r_sq, probabilities, tail_eps)
