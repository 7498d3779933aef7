import numpy as np
import numpy.typing as npt
from scipy.stats import binom

from ..drive_protocol import DomainError


def kzm_binomial_baseline(number_of_domains: int, q: float) -> npt.NDArray[np.float64]:
    """
    Classical defect count: each of L independent domains hosts a defect with probability q, so the number of
    defects l in 0..L is binomial.
    """
    if number_of_domains < 0:
        msg = f'L must be >= 0, got {number_of_domains}'
        raise DomainError(msg)
    if not 0 <= q <= 1:
        msg = f'q must lie in [0, 1], got {q}'
        raise DomainError(msg)
    defect_counts = np.arange(number_of_domains + 1)
    return np.asarray(binom.pmf(defect_counts, number_of_domains, q), dtype=np.float64)
