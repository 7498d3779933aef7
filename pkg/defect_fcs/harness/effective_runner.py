from __future__ import annotations

import functools
import logging
import math
from pathlib import Path
from typing import NamedTuple

from ..dataset import Dataset, get_sibling_path, write_dataset
from ..drive_protocol import DriveProtocol
from ..ermakov.ermakov_integrator import integrate
from ..ermakov.osc_state import OscState
from ..ermakov.osc_trajectory import TRAJECTORY_COLUMNS, OscTrajectory
from ..ermakov.solver_config import SolverConfig
from ..fcs.defect_distribution import DEFECT_PMF_COLUMNS, DefectDistribution, excitation_pmf
from ..fcs.energy_distribution import (
    ENERGY_PMF_COLUMNS,
    EnergyDistribution,
    internal_energy_distribution,
    internal_energy_mean,
)
from ..run_config import RunConfig
from .point_executor import map_points
from .sweep_spec import EffectivePoint, SweepSpec

logger = logging.getLogger(__name__)

EFFECTIVE_COLUMNS = (
    'eta',
    'tau',
    'omega_c',
    't',
    't_over_tau',
    'omega',
    'R_sq',
    'nu_mean',
    'nu_var',
    'w_rev',
    'w_irr',
    'var_delta_e',
)
POINT_COLUMNS = ('eta', 'tau', 'omega_c', 'delta')
EFFECTIVE_TRAJECTORY_COLUMNS = (*POINT_COLUMNS, *TRAJECTORY_COLUMNS)
EFFECTIVE_DEFECT_PMF_COLUMNS = (*POINT_COLUMNS, *DEFECT_PMF_COLUMNS)
EFFECTIVE_ENERGY_PMF_COLUMNS = (*POINT_COLUMNS, *ENERGY_PMF_COLUMNS)


class EffectiveSample(NamedTuple):
    t: float
    omega: float
    r_sq: float
    nu_mean: float
    nu_var: float
    w_rev: float
    w_irr: float
    var_delta_e: float


class EffectivePointResult(NamedTuple):
    sample_rows: list[tuple[float, ...]]
    trajectory_rows: list[tuple[float, ...]]
    defect_pmf_rows: list[tuple[float, ...]]
    energy_pmf_rows: list[tuple[float, ...]]


class EffectiveOutputs(NamedTuple):
    samples: Dataset
    trajectories: Dataset
    defect_pmfs: Dataset
    energy_pmfs: Dataset


def get_effective_sample(state: OscState, omega: float, omega_start: float) -> EffectiveSample:
    """
    Counting statistics of one oscillator state. With a = 1/(2 xi^2) and b = (xi_dot/xi)^2 the reflection
    coefficient is num/den with num = (a - omega)^2 + b and den = (a + omega)^2 + b, so 1 - |R|^2 = 4 a omega / den.
    The work and energy variance are written in a form that stays finite at omega = 0, where <nu> diverges.
    """
    a = 0.5 / state.xi / state.xi
    velocity_ratio = state.xi_dot / state.xi
    b = velocity_ratio * velocity_ratio
    numerator = (a - omega) ** 2 + b
    denominator = (a + omega) ** 2 + b
    r_sq = numerator / denominator

    w_irr = numerator / (4 * a)
    var_delta_e = numerator * denominator / (8 * a**2)
    if omega > 0:
        nu_mean = numerator / (4 * a * omega)
        nu_var = var_delta_e / omega**2
    else:
        nu_mean = math.inf
        nu_var = math.inf

    work_split = internal_energy_mean(omega_start, omega, 0.0)
    return EffectiveSample(
        t=state.t,
        omega=omega,
        r_sq=r_sq,
        nu_mean=nu_mean,
        nu_var=nu_var,
        w_rev=work_split.w_rev,
        w_irr=w_irr,
        var_delta_e=var_delta_e,
    )


def get_trajectory_samples(trajectory: OscTrajectory, number_of_points: int) -> list[EffectiveSample]:
    protocol = trajectory.protocol
    omega_start = protocol.omega_at(-protocol.tau)
    grid = trajectory.get_uniform_grid(number_of_points)
    return [
        get_effective_sample(state, protocol.omega_at(state.t), omega_start) for state in trajectory.get_states(grid)
    ]


def get_effective_samples(protocol: DriveProtocol, solver_config: SolverConfig) -> list[EffectiveSample]:
    return get_trajectory_samples(integrate(protocol, solver_config), solver_config.output_stride)


def get_final_effective_sample(protocol: DriveProtocol, solver_config: SolverConfig) -> EffectiveSample:
    trajectory = integrate(protocol, solver_config)
    return get_effective_sample(
        trajectory.get_final_state(), protocol.omega_at(protocol.tau), protocol.omega_at(-protocol.tau)
    )


def get_final_distributions(trajectory: OscTrajectory) -> tuple[DefectDistribution, EnergyDistribution]:
    """Excitation and internal-energy distributions at the end of the drive."""
    protocol = trajectory.protocol
    distribution = excitation_pmf(trajectory.get_final_r_sq())
    energy_distribution = internal_energy_distribution(
        protocol.omega_at(-protocol.tau), protocol.omega_at(protocol.tau), distribution
    )
    return distribution, energy_distribution


def run_effective_point(point: EffectivePoint, run_config: RunConfig) -> EffectivePointResult:
    protocol = DriveProtocol(
        eta=point.eta, tau=point.tau, omega_c=point.omega_c, delta=point.delta, floor_mode=run_config.floor_mode
    )
    number_of_points = run_config.solver_config.output_stride
    trajectory = integrate(protocol, run_config.solver_config)
    distribution, energy_distribution = get_final_distributions(trajectory)
    return EffectivePointResult(
        sample_rows=[
            (point.eta, point.tau, point.omega_c, sample.t, sample.t / point.tau, *sample[1:])
            for sample in get_trajectory_samples(trajectory, number_of_points)
        ],
        trajectory_rows=[(*point, *row) for row in trajectory.to_rows(number_of_points)],
        defect_pmf_rows=[(*point, *row) for row in distribution.to_rows()],
        energy_pmf_rows=[(*point, *row) for row in energy_distribution.to_rows()],
    )


def concatenate_rows(results: list[EffectivePointResult], field_name: str) -> list[tuple[float, ...]]:
    return [row for result in results for row in getattr(result, field_name)]


def run_effective_outputs(sweep_spec: SweepSpec, run_config: RunConfig) -> EffectiveOutputs:
    points = sweep_spec.get_effective_points()
    logger.info('Effective sweep over %d points', len(points))
    results = map_points(functools.partial(run_effective_point, run_config=run_config), points, sweep_spec.jobs)
    return EffectiveOutputs(
        samples=Dataset(EFFECTIVE_COLUMNS, concatenate_rows(results, 'sample_rows')),
        trajectories=Dataset(EFFECTIVE_TRAJECTORY_COLUMNS, concatenate_rows(results, 'trajectory_rows')),
        defect_pmfs=Dataset(EFFECTIVE_DEFECT_PMF_COLUMNS, concatenate_rows(results, 'defect_pmf_rows')),
        energy_pmfs=Dataset(EFFECTIVE_ENERGY_PMF_COLUMNS, concatenate_rows(results, 'energy_pmf_rows')),
    )


def run_effective(sweep_spec: SweepSpec, run_config: RunConfig) -> Dataset:
    return run_effective_outputs(sweep_spec, run_config).samples


def write_effective_outputs(sweep_spec: SweepSpec, run_config: RunConfig) -> list[Path]:
    """The sample table at the output path, with the dense trajectories and the final pmfs next to it."""
    outputs = run_effective_outputs(sweep_spec, run_config)
    return [
        write_dataset(sweep_spec.out, outputs.samples),
        write_dataset(get_sibling_path(sweep_spec.out, 'trajectory'), outputs.trajectories),
        write_dataset(get_sibling_path(sweep_spec.out, 'defect_pmf'), outputs.defect_pmfs),
        write_dataset(get_sibling_path(sweep_spec.out, 'energy_pmf'), outputs.energy_pmfs),
    ]
