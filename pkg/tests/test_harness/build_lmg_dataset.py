from collections.abc import Callable

import numpy as np

from defect_fcs.dataset import Dataset
from defect_fcs.harness.lmg_runner import LMG_COLUMNS


def build_lmg_dataset(
    curves: list[tuple[int, float]], density: Callable[[int, float, float], float], samples: int = 11
) -> Dataset:
    """
    An LMG dataset with one curve per (N, tau). density(n_sites, tau, t_over_tau) gives the defect density; the
    remaining observables are filled with zeros.
    """
    rows = []
    for n_sites, tau in curves:
        for t_over_tau in np.linspace(-1, 1, samples):
            t_over_tau = float(t_over_tau)
            rows.append(
                (
                    n_sites,
                    tau,
                    n_sites / tau,
                    t_over_tau * tau,
                    t_over_tau,
                    1 + t_over_tau,
                    density(n_sites, tau, t_over_tau),
                    0.0,
                    1.0,
                )
            )
    return Dataset(LMG_COLUMNS, rows)
