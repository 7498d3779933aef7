from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from ..dataset import Dataset
from ..drive_protocol import DomainError

logger = logging.getLogger(__name__)

COLLAPSE_COLUMNS = ('n_over_tau', 'number_of_curves', 'curve_deviation', 'final_spread')
# Groups are keyed by N/tau rounded to this many digits
GROUP_KEY_DIGITS = 9


class CollapseCurve(NamedTuple):
    n_sites: int
    tau: float
    rescaled_times: npt.NDArray[np.float64]
    rescaled_values: npt.NDArray[np.float64]

    def get_final_value(self) -> float:
        return float(self.rescaled_values[-1])


@dataclass(frozen=True)
class CollapseGroup:
    n_over_tau: float
    number_of_curves: int
    curve_deviation: float
    final_spread: float

    def as_row(self) -> tuple[float, ...]:
        return self.n_over_tau, self.number_of_curves, self.curve_deviation, self.final_spread


@dataclass(frozen=True)
class CollapseReport:
    time_exponent: float
    density_exponent: float
    groups: tuple[CollapseGroup, ...]
    final_values: dict[float, float]

    def get_group(self, n_over_tau: float) -> CollapseGroup:
        key = round(n_over_tau, GROUP_KEY_DIGITS)
        for group in self.groups:
            if group.n_over_tau == key:
                return group
        msg = f'No collapse group for N/tau={n_over_tau}'
        raise DomainError(msg)

    def get_between_group_spread(self, first_n_over_tau: float, second_n_over_tau: float) -> float:
        """Relative difference of the mean final values of two groups."""
        first = self.final_values[round(first_n_over_tau, GROUP_KEY_DIGITS)]
        second = self.final_values[round(second_n_over_tau, GROUP_KEY_DIGITS)]
        return get_relative_spread(np.array([first, second]))

    def get_max_curve_deviation(self) -> float:
        return max(group.curve_deviation for group in self.groups)

    def to_dataset(self) -> Dataset:
        return Dataset(COLLAPSE_COLUMNS, [group.as_row() for group in self.groups])


def get_relative_spread(values: npt.NDArray[np.float64]) -> float:
    scale = float(np.mean(np.abs(values)))
    spread = float(np.max(values) - np.min(values))
    return spread / scale if scale > 0 else spread


def get_curves(
    dataset: Dataset, time_exponent: float, density_exponent: float
) -> dict[float, list[CollapseCurve]]:
    """
    LMG curves grouped by N/tau. The rescaled axes are x = (t/tau) N^time_exponent and
    y = defect_density N^density_exponent.
    """
    grouped: dict[float, list[CollapseCurve]] = {}
    for (n_sites, tau), curve_data in dataset.group_by(('n_sites', 'tau')).items():
        times = np.array(curve_data.get_column('t_over_tau')) * n_sites**time_exponent
        values = np.array(curve_data.get_column('defect_density')) * n_sites**density_exponent
        order = np.argsort(times, kind='stable')
        curve = CollapseCurve(int(n_sites), tau, times[order], values[order])
        grouped.setdefault(round(n_sites / tau, GROUP_KEY_DIGITS), []).append(curve)
    return grouped


def get_group(n_over_tau: float, curves: list[CollapseCurve], grid_points: int) -> CollapseGroup:
    if len(curves) < 2:
        msg = f'N/tau={n_over_tau} has {len(curves)} curve, at least 2 are needed'
        raise DomainError(msg)
    window_start = max(float(curve.rescaled_times[0]) for curve in curves)
    window_end = min(float(curve.rescaled_times[-1]) for curve in curves)
    if window_start >= window_end:
        msg = f'Curves of N/tau={n_over_tau} do not overlap in rescaled time'
        raise DomainError(msg)

    grid = np.linspace(window_start, window_end, grid_points)
    interpolated = np.array([np.interp(grid, curve.rescaled_times, curve.rescaled_values) for curve in curves])
    scale = float(np.max(np.abs(interpolated)))
    sup_deviation = float(np.max(np.max(interpolated, axis=0) - np.min(interpolated, axis=0)))
    curve_deviation = sup_deviation / scale if scale > 0 else sup_deviation
    final_spread = get_relative_spread(np.array([curve.get_final_value() for curve in curves]))
    return CollapseGroup(n_over_tau, len(curves), curve_deviation, final_spread)


def collapse(
    datasets: list[Dataset], time_exponent: float = 0.0, density_exponent: float = 0.0, grid_points: int = 201
) -> CollapseReport:
    combined = Dataset(datasets[0].columns, [])
    for dataset in datasets:
        combined.extend(dataset)

    grouped = get_curves(combined, time_exponent, density_exponent)
    groups = tuple(get_group(n_over_tau, curves, grid_points) for n_over_tau, curves in grouped.items())
    final_values = {
        n_over_tau: float(np.mean([curve.get_final_value() for curve in curves]))
        for n_over_tau, curves in grouped.items()
    }
    for group in groups:
        logger.info(
            'N/tau=%s: %d curves, sup deviation %s, final spread %s',
            group.n_over_tau,
            group.number_of_curves,
            group.curve_deviation,
            group.final_spread,
        )
    return CollapseReport(time_exponent, density_exponent, groups, final_values)
