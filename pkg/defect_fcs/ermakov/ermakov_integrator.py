from __future__ import annotations

import logging
import time

import numpy as np
import numpy.typing as npt
from scipy.integrate import solve_ivp

from ..drive_protocol import DomainError, DriveProtocol
from .osc_state import OscState
from .osc_trajectory import OscTrajectory
from .solver_config import SolverConfig

logger = logging.getLogger(__name__)


class DegenerateStartError(ValueError):
    """The drive starts at zero frequency, so there is no ground state to start from."""


class IntegrationFailureError(ArithmeticError):
    def __init__(self, message: str, t: float):
        super().__init__(message)
        self.t = t


class InternalConsistencyError(ArithmeticError):
    """The width xi left the physical region xi > 0. This indicates a bug, not a bad input."""


def initial_condition(protocol: DriveProtocol) -> OscState:
    """Instantaneous ground state at t = -tau: xi^-2 / 2 = omega, xi_dot = 0, no accumulated phase."""
    omega_start = protocol.omega_at(-protocol.tau)
    if omega_start <= 0:
        msg = f'omega(-tau) = {omega_start}; the drive has no ground state to start from'
        raise DegenerateStartError(msg)
    return OscState(t=-protocol.tau, xi=(2 * omega_start) ** -0.5, xi_dot=0.0, phase=0.0)


def adiabatic_initial_condition(protocol: DriveProtocol, t_start: float) -> OscState:
    """
    Ground state at t_start dressed with the first-order adiabatic velocity xi_dot = -xi * omega_dot / (2 omega).
    Starting from it removes the start-up ringing when comparing against the critical Bessel solution.
    """
    omega = protocol.omega_at(t_start)
    if omega <= 0:
        msg = f'omega({t_start}) = {omega}; the drive has no ground state to start from'
        raise DegenerateStartError(msg)
    step = 1e-6 * max(1.0, abs(t_start))
    omega_dot = (protocol.omega_at(t_start + step) - omega) / step
    xi = (2 * omega) ** -0.5
    return OscState(t=t_start, xi=xi, xi_dot=-xi * omega_dot / (2 * omega), phase=0.0)


class ErmakovIntegrator:
    """
    Solves xi'' + omega(t)^2 xi = 1/(4 xi^3) together with lambda' = 1/(2 xi^2) over the drive window using the
    embedded Runge-Kutta 4(5) pair. The window is split at t = 0 and at the floor edges so the solver never steps
    across a kink of the drive.
    """

    def __init__(self, protocol: DriveProtocol, solver_config: SolverConfig):
        self.protocol = protocol
        self.solver_config = solver_config

    def get_right_hand_side(self, t: float, y: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        xi, xi_dot, _ = y
        omega_squared = self.protocol.omega_squared_at(t)
        return np.array([xi_dot, 1 / (4 * xi**3) - omega_squared * xi, 1 / (2 * xi**2)])

    def get_mesh_points(self, start_time: float) -> list[float]:
        mesh_points = [start_time, 0.0, self.protocol.tau]
        floor_edges = self.protocol.get_floor_edges()
        if floor_edges is not None:
            mesh_points.extend(floor_edges)
        return sorted({point for point in mesh_points if start_time <= point <= self.protocol.tau})

    def integrate(self, initial_state: OscState | None = None) -> OscTrajectory:
        if initial_state is None:
            initial_state = initial_condition(self.protocol)
        if not -self.protocol.tau <= initial_state.t < self.protocol.tau:
            msg = f'Initial time {initial_state.t} is outside the drive window'
            raise DomainError(msg)

        wall_clock_start = time.perf_counter()
        mesh_points = self.get_mesh_points(initial_state.t)
        time_segments = []
        value_segments = []
        y_start = np.array(initial_state.as_tuple())
        for segment_start, segment_end in zip(mesh_points[:-1], mesh_points[1:], strict=True):
            segment_times, segment_values = self.integrate_segment(segment_start, segment_end, y_start)
            # The first node of every later segment repeats the last node of the previous one
            skip = 0 if len(time_segments) == 0 else 1
            time_segments.append(segment_times[skip:])
            value_segments.append(segment_values[skip:])
            y_start = segment_values[-1]

        times = np.concatenate(time_segments)
        values = np.concatenate(value_segments)
        derivatives = np.array([self.get_right_hand_side(t, y) for t, y in zip(times, values, strict=True)])
        logger.info(
            'Ermakov run eta=%s tau=%s omega_c=%s: %d nodes in %.3fs',
            self.protocol.eta,
            self.protocol.tau,
            self.protocol.omega_c,
            len(times),
            time.perf_counter() - wall_clock_start,
        )
        return OscTrajectory(self.protocol, times, values, derivatives)

    def integrate_segment(
        self, segment_start: float, segment_end: float, y_start: npt.NDArray[np.float64]
    ) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
        logger.debug('Integrating segment [%s, %s]', segment_start, segment_end)
        solution = solve_ivp(
            self.get_right_hand_side,
            (segment_start, segment_end),
            y_start,
            method='RK45',
            rtol=self.solver_config.rel_tol,
            atol=self.solver_config.abs_tol,
            max_step=self.solver_config.max_step,
        )
        if solution.status != 0:
            failing_time = float(solution.t[-1])
            msg = f'Ermakov integration failed at t={failing_time}: {solution.message}'
            raise IntegrationFailureError(msg, t=failing_time)
        if np.any(solution.y[0] <= 0):
            msg = f'xi became non-positive inside [{segment_start}, {segment_end}]'
            raise InternalConsistencyError(msg)
        return solution.t, solution.y.T


def integrate(
    protocol: DriveProtocol, solver_config: SolverConfig, initial_state: OscState | None = None
) -> OscTrajectory:
    return ErmakovIntegrator(protocol, solver_config).integrate(initial_state)
