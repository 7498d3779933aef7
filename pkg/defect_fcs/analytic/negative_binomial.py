from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from scipy.stats import nbinom

from ..drive_protocol import DomainError, critical_params

# Fractional success count of the defect-pair law
PAIR_SUCCESS_COUNT = 0.5

NB_TABLE_COLUMNS = ('eta', 'k', 'prob')
NB_MOMENT_COLUMNS = ('eta', 'fail_prob', 'pair_mean', 'pair_variance', 'nu_mean', 'nu_variance')


def asymptotic_reflection(eta: float) -> float:
    """
    Slow-drive limit of |R| when the squared gap closes as |t|^eta: cos(pi / (2 + eta)). It depends only on eta,
    not on the drive rate.
    """
    if eta < 0:
        msg = f'eta must be >= 0, got {eta}'
        raise DomainError(msg)
    return math.cos(math.pi / (2 + eta))


def drive_reflection(eta_drive: float) -> float:
    """
    Slow-drive limit of |R| for a frequency drive omega ~ |t|^eta_drive, read off the critical Bessel solution:
    cos(pi * p) with p = 1/(2(1+eta_drive)). Equals asymptotic_reflection(2 * eta_drive).
    """
    return math.cos(math.pi * critical_params(eta_drive).p)


class PairMoments(NamedTuple):
    mean: float
    variance: float


@dataclass(frozen=True)
class NegBinomial:
    """
    Number k of defect pairs, nu = 2k, as a negative binomial with r = 1/2 successes and per-trial failure
    probability |R|^2.
    """

    eta: float
    fail_prob: float
    r: float = PAIR_SUCCESS_COUNT

    def __post_init__(self) -> None:
        if not 0 <= self.fail_prob < 1:
            msg = f'fail_prob must lie in [0, 1), got {self.fail_prob}'
            raise DomainError(msg)

    @staticmethod
    def from_eta(eta: float) -> NegBinomial:
        return NegBinomial(eta=eta, fail_prob=asymptotic_reflection(eta) ** 2)

    def get_success_prob(self) -> float:
        return 1 - self.fail_prob


def nb_pmf(nb: NegBinomial, k: int) -> float:
    """P(k) = C(k - 1/2, k) (1 - q)^(1/2) q^k with q = |R|^2."""
    if k < 0:
        msg = f'k must be >= 0, got {k}'
        raise DomainError(msg)
    return float(nbinom.pmf(k, nb.r, nb.get_success_prob()))


def nb_moments(nb: NegBinomial) -> PairMoments:
    q = nb.fail_prob
    return PairMoments(mean=nb.r * q / (1 - q), variance=nb.r * q / (1 - q) ** 2)


def nb_table(etas: list[float], k_max: int) -> list[tuple[float, int, float]]:
    """Rows (eta, k, prob) of the universal defect-pair law for every eta and 0 <= k <= k_max."""
    rows = []
    for eta in etas:
        nb = NegBinomial.from_eta(eta)
        rows.extend((eta, k, nb_pmf(nb, k)) for k in range(k_max + 1))
    return rows


def nb_moment_curve(etas: list[float]) -> list[tuple[float, ...]]:
    """Mean and variance against eta, both for pairs k and for the excitation number nu = 2k."""
    rows = []
    for eta in etas:
        nb = NegBinomial.from_eta(eta)
        pair_moments = nb_moments(nb)
        rows.append(
            (
                eta,
                nb.fail_prob,
                pair_moments.mean,
                pair_moments.variance,
                2 * pair_moments.mean,
                4 * pair_moments.variance,
            )
        )
    return rows
