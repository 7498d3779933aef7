from __future__ import annotations

import functools
import logging
import math

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize_scalar

from ..dataset import Dataset
from ..drive_protocol import DomainError, DriveProtocol
from ..ermakov.solver_config import SolverConfig
from ..lmg.quench import QUENCH_COLUMNS, QuenchRecord, propagate
from ..run_config import RunConfig
from .effective_runner import get_effective_samples
from .point_executor import map_points
from .sweep_spec import LmgPoint, SweepSpec

logger = logging.getLogger(__name__)

LMG_COLUMNS = ('n_sites', 'tau', 'n_over_tau', *QUENCH_COLUMNS)
MAX_LMG_SITES = 4096

# Near h = 1 the LMG gap is 2 sqrt|h - 1|, i.e. omega^2 is linear in t/tau
LMG_FREQUENCY_EXPONENT = 0.5
LMG_FREQUENCY_SCALE = 2.0
OMEGA_C_SIZE_EXPONENT = -1 / 3
CALIBRATION_BOUNDS = (1e-3, 10.0)
# t/tau range after the crossing where both defect counts have frozen out
COMPARISON_WINDOW = (0.25, 1.0)


def effective_lmg_protocol(n_sites: int, tau: float, omega_c_coeff: float) -> DriveProtocol:
    """Oscillator drive standing in for the LMG quench, with the gap floor omega_c = coeff * N^(-1/3)."""
    return DriveProtocol(
        eta=LMG_FREQUENCY_EXPONENT,
        tau=tau,
        omega_c=omega_c_coeff * n_sites**OMEGA_C_SIZE_EXPONENT,
        delta=LMG_FREQUENCY_SCALE,
    )


def run_lmg_point(point: LmgPoint, run_config: RunConfig) -> QuenchRecord:
    if point.n_sites > MAX_LMG_SITES:
        msg = f'N={point.n_sites} exceeds the supported maximum of {MAX_LMG_SITES}'
        raise DomainError(msg)
    return propagate(
        point.n_sites, point.tau, run_config.solver_config, run_config.samples, n_levels=run_config.n_levels
    )


def record_to_rows(record: QuenchRecord) -> list[tuple[float, ...]]:
    return [(record.n_sites, record.tau, record.n_over_tau, *row) for row in record.to_rows()]


def run_lmg_records(sweep_spec: SweepSpec, run_config: RunConfig) -> list[QuenchRecord]:
    points = sweep_spec.get_lmg_points()
    logger.info('LMG sweep over %d points', len(points))
    return map_points(functools.partial(run_lmg_point, run_config=run_config), points, sweep_spec.jobs)


def run_lmg(sweep_spec: SweepSpec, run_config: RunConfig) -> Dataset:
    records = run_lmg_records(sweep_spec, run_config)
    return Dataset(LMG_COLUMNS, [row for record in records for row in record_to_rows(record)])


def calibrate_omega_c_coeff(record: QuenchRecord, solver_config: SolverConfig) -> float:
    """
    Coefficient c for which the effective model with omega_c = c * N^(-1/3) best reproduces the shape of the given
    LMG defect-density curve, in the sense of get_effective_curve_deviation.
    """

    def get_mismatch(omega_c_coeff: float) -> float:
        return get_effective_curve_deviation(record, omega_c_coeff, solver_config)

    result = minimize_scalar(get_mismatch, bounds=CALIBRATION_BOUNDS, method='bounded')
    logger.info(
        'Calibrated omega_c_coeff=%s on N=%d tau=%s (sup deviation %s)',
        result.x,
        record.n_sites,
        record.tau,
        result.fun,
    )
    return float(result.x)


def get_window_mask(t_over_tau: npt.NDArray[np.float64], lower: float, upper: float) -> npt.NDArray[np.bool_]:
    return (t_over_tau >= max(lower, COMPARISON_WINDOW[0])) & (t_over_tau <= min(upper, COMPARISON_WINDOW[1]))


def get_effective_curve_deviation(
    record: QuenchRecord, omega_c_coeff: float, solver_config: SolverConfig
) -> float:
    """
    Sup-norm distance between the effective and the exact defect density on COMPARISON_WINDOW, with each curve divided
    by its mean over the window. The oscillator counts quanta of a single soft mode while the LMG count grows with
    N/tau, so only the rescaled curves are comparable.
    """
    protocol = effective_lmg_protocol(record.n_sites, record.tau, omega_c_coeff)
    samples = get_effective_samples(protocol, solver_config)
    effective_times = np.array([sample.t for sample in samples]) / record.tau
    effective_densities = np.array([sample.nu_mean for sample in samples])

    exact_times = record.get_times() / record.tau
    in_window = get_window_mask(exact_times, effective_times[0], effective_times[-1])
    if not np.any(in_window):
        msg = f'No LMG sample of N={record.n_sites}, tau={record.tau} lies in the t/tau window {COMPARISON_WINDOW}'
        raise DomainError(msg)

    exact = record.get_defect_densities()[in_window]
    effective = np.interp(exact_times[in_window], effective_times, effective_densities)
    exact_scale = float(np.mean(exact))
    effective_scale = float(np.mean(effective))
    if exact_scale <= 0:
        msg = f'No LMG defects on the t/tau window {COMPARISON_WINDOW} for N={record.n_sites}, tau={record.tau}'
        raise DomainError(msg)
    if effective_scale <= 0:
        # An oscillator that is never excited cannot take the shape of any curve
        return math.inf
    logger.debug(
        'N=%d tau=%s: exact/effective density ratio %s', record.n_sites, record.tau, exact_scale / effective_scale
    )
    return float(np.max(np.abs(effective / effective_scale - exact / exact_scale)))
