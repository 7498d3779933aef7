"""
Brute-force check of the sector restriction: the LMG Hamiltonian built from single-site spin-1/2 operators on the
full 2^N Hilbert space, propagated with the same integrator settings and projected back onto the Dicke states.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.integrate import solve_ivp

from ..drive_protocol import DomainError
from ..ermakov.ermakov_integrator import IntegrationFailureError
from ..ermakov.solver_config import SolverConfig
from .field_schedule import FieldSchedule, LinearFieldSchedule
from .spin_sector import SpinSector, SpinSectorState

MAX_ORACLE_SITES = 3

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])


def get_site_operator(single_site: npt.NDArray[np.float64], site: int, n_sites: int) -> npt.NDArray[np.float64]:
    return functools.reduce(np.kron, [single_site if i == site else np.eye(2) for i in range(n_sites)])


def get_collective_operator(single_site: npt.NDArray[np.float64], n_sites: int) -> npt.NDArray[np.float64]:
    """Sum over sites of single_site / 2."""
    return sum(get_site_operator(single_site / 2, site, n_sites) for site in range(n_sites))


def get_dicke_basis(n_sites: int) -> npt.NDArray[np.float64]:
    """
    Columns are the symmetric states |J, m_z> ordered m_z = +J..-J, as uniform superpositions of the product states
    with J - m_z flipped spins. Site state 0 is spin up.
    """
    dim_full = 2**n_sites
    basis = np.zeros((dim_full, n_sites + 1))
    for index in range(dim_full):
        flipped = bin(index).count('1')
        basis[index, flipped] = 1.0
    return basis / np.sqrt([math.comb(n_sites, flipped) for flipped in range(n_sites + 1)])


@dataclass
class OracleTrajectory:
    times: npt.NDArray[np.float64]
    full_states: list[npt.NDArray[np.complex128]]
    sector_states: list[SpinSectorState]
    leakage: list[float]
    energies: list[float]

    def get_max_leakage(self) -> float:
        return max(self.leakage)


class FullSpaceLmg:
    def __init__(self, n_sites: int):
        if not 2 <= n_sites <= MAX_ORACLE_SITES:
            msg = f'The full-space oracle supports 2..{MAX_ORACLE_SITES} sites, got {n_sites}'
            raise DomainError(msg)
        self.n_sites = n_sites
        jx = get_collective_operator(SIGMA_X, n_sites)
        self.coupling = -(2 / n_sites) * jx @ jx
        self.jz = get_collective_operator(SIGMA_Z, n_sites)
        self.dicke_basis = get_dicke_basis(n_sites)

    def get_hamiltonian(self, h_field: float) -> npt.NDArray[np.float64]:
        return self.coupling - 2 * h_field * self.jz

    def embed(self, state: SpinSectorState) -> npt.NDArray[np.complex128]:
        return self.dicke_basis @ state.amplitudes

    def project(self, full_state: npt.NDArray[np.complex128], t: float) -> SpinSectorState:
        return SpinSectorState(self.dicke_basis.T @ full_state, t)


def small_n_oracle(
    n_sites: int,
    tau: float,
    solver_config: SolverConfig,
    initial_state: SpinSectorState,
    times: npt.NDArray[np.float64],
    schedule: FieldSchedule | None = None,
) -> OracleTrajectory:
    """Propagates the embedded sector state through every time in times, starting at initial_state.time."""
    if SpinSector(n_sites).dim != len(initial_state):
        msg = f'Initial state of dimension {len(initial_state)} does not belong to N={n_sites}'
        raise DomainError(msg)
    if schedule is None:
        schedule = LinearFieldSchedule(tau)
    model = FullSpaceLmg(n_sites)

    def get_right_hand_side(t: float, psi: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
        return -1j * (model.get_hamiltonian(schedule.field_at(t)) @ psi)

    full_state = model.embed(initial_state)
    current_time = initial_state.time
    trajectory = OracleTrajectory(times, [], [], [], [])
    for t in times:
        if t != current_time:
            solution = solve_ivp(
                get_right_hand_side,
                (current_time, float(t)),
                full_state,
                method='RK45',
                t_eval=[float(t)],
                rtol=solver_config.rel_tol,
                atol=solver_config.abs_tol,
                max_step=solver_config.max_step,
            )
            if solution.status != 0:
                msg = f'Full-space integration failed after t={current_time}: {solution.message}'
                raise IntegrationFailureError(msg, t=current_time)
            full_state = solution.y[:, -1]
            current_time = float(t)

        sector_state = model.project(full_state, current_time)
        full_weight = float(np.vdot(full_state, full_state).real)
        trajectory.full_states.append(full_state)
        trajectory.sector_states.append(sector_state)
        trajectory.leakage.append(full_weight - sector_state.get_norm() ** 2)
        trajectory.energies.append(
            float(np.vdot(full_state, model.get_hamiltonian(schedule.field_at(current_time)) @ full_state).real)
        )
    return trajectory
