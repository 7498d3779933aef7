from __future__ import annotations

import logging
from pathlib import Path

from ..analytic.negative_binomial import (
    NB_MOMENT_COLUMNS,
    NB_TABLE_COLUMNS,
    NegBinomial,
    nb_moment_curve,
    nb_pmf,
    nb_table,
)
from ..dataset import Dataset, get_sibling_path, write_dataset
from ..fcs.kzm_baseline import kzm_binomial_baseline
from ..run_config import RunConfig
from .sweep_spec import SweepSpec

logger = logging.getLogger(__name__)

BASELINE_COLUMNS = ('eta', 'count', 'binomial_prob', 'pair_prob')


def run_analytic(sweep_spec: SweepSpec, run_config: RunConfig) -> Dataset:
    """Negative-binomial pair distribution for every eta, k = 0..k_max."""
    return Dataset(NB_TABLE_COLUMNS, [tuple(row) for row in nb_table(list(sweep_spec.etas), run_config.k_max)])


def get_moment_dataset(sweep_spec: SweepSpec) -> Dataset:
    return Dataset(NB_MOMENT_COLUMNS, nb_moment_curve(list(sweep_spec.etas)))


def get_baseline_dataset(sweep_spec: SweepSpec, number_of_domains: int) -> Dataset:
    """
    Classical binomial defect count over L domains next to the pair distribution, both built from the same
    elementary probability |R|^2.
    """
    rows = []
    for eta in sweep_spec.etas:
        nb = NegBinomial.from_eta(eta)
        binomial = kzm_binomial_baseline(number_of_domains, nb.fail_prob)
        rows.extend(
            (eta, count, float(binomial_prob), nb_pmf(nb, count)) for count, binomial_prob in enumerate(binomial)
        )
    return Dataset(BASELINE_COLUMNS, rows)


def write_analytic_outputs(sweep_spec: SweepSpec, run_config: RunConfig) -> list[Path]:
    paths = [write_dataset(sweep_spec.out, run_analytic(sweep_spec, run_config))]
    paths.append(write_dataset(get_sibling_path(sweep_spec.out, 'moments'), get_moment_dataset(sweep_spec)))
    if run_config.baseline_sites > 0:
        baseline = get_baseline_dataset(sweep_spec, run_config.baseline_sites)
        paths.append(write_dataset(get_sibling_path(sweep_spec.out, 'baseline'), baseline))
    return paths
