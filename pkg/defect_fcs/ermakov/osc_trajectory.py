from __future__ import annotations

from collections.abc import Iterator
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt
from scipy.interpolate import BPoly, CubicHermiteSpline

from ..drive_protocol import DomainError
from .osc_state import OscState, reflection_coefficient

if TYPE_CHECKING:
    from ..drive_protocol import DriveProtocol

TRAJECTORY_COLUMNS = ('t', 'omega', 'xi', 'xi_dot', 'phase', 'R_sq')


class OscTrajectory:
    """
    Accepted solver steps of one Ermakov run with Hermite interpolation in between. The width is a quintic matching
    xi, xi_dot and the exact xi_ddot at every node, so it is C2. The phase is a cubic matching its value and rate.
    """

    def __init__(
        self,
        protocol: DriveProtocol,
        times: npt.NDArray[np.float64],
        values: npt.NDArray[np.float64],
        derivatives: npt.NDArray[np.float64],
    ):
        """values and derivatives have shape (len(times), 3) with columns xi, xi_dot, phase."""
        if np.any(np.diff(times) <= 0):
            msg = 'Trajectory sample times must be strictly increasing'
            raise ValueError(msg)
        self.protocol = protocol
        self.times = times
        self.values = values
        node_jets = np.column_stack([values[:, 0], values[:, 1], derivatives[:, 1]])
        self.width_spline = BPoly.from_derivatives(times, node_jets, extrapolate=False)
        self.velocity_spline = self.width_spline.derivative()
        self.acceleration_spline = self.width_spline.derivative(2)
        self.phase_spline = CubicHermiteSpline(times, values[:, 2], derivatives[:, 2], extrapolate=False)

    @property
    def start_time(self) -> float:
        return float(self.times[0])

    @property
    def end_time(self) -> float:
        return float(self.times[-1])

    def __len__(self) -> int:
        return len(self.times)

    def __iter__(self) -> Iterator[OscState]:
        for t, (xi, xi_dot, phase) in zip(self.times, self.values, strict=True):
            yield OscState(t=float(t), xi=float(xi), xi_dot=float(xi_dot), phase=float(phase))

    def ensure_contains_times(self, times: npt.NDArray[np.float64]) -> None:
        if np.any(times < self.start_time) or np.any(times > self.end_time):
            msg = f'Requested times fall outside the trajectory [{self.start_time}, {self.end_time}]'
            raise DomainError(msg)

    def get_state(self, t: float) -> OscState:
        return self.get_states(np.array([t]))[0]

    def get_final_state(self) -> OscState:
        xi, xi_dot, phase = self.values[-1]
        return OscState(t=self.end_time, xi=float(xi), xi_dot=float(xi_dot), phase=float(phase))

    def get_r_sq(self, t: float) -> float:
        return reflection_coefficient(self.get_state(t), self.protocol.omega_at(t))

    def get_final_r_sq(self) -> float:
        return reflection_coefficient(self.get_final_state(), self.protocol.omega_at(self.end_time))

    def get_states(self, times: npt.NDArray[np.float64]) -> list[OscState]:
        self.ensure_contains_times(times)
        widths = self.width_spline(times)
        velocities = self.velocity_spline(times)
        phases = self.phase_spline(times)
        return [
            OscState(t=float(t), xi=float(xi), xi_dot=float(xi_dot), phase=float(phase))
            for t, xi, xi_dot, phase in zip(times, widths, velocities, phases, strict=True)
        ]

    def get_uniform_grid(self, number_of_points: int) -> npt.NDArray[np.float64]:
        return np.linspace(self.start_time, self.end_time, number_of_points)

    def residual(self, grid: npt.NDArray[np.float64]) -> float:
        """Largest |xi'' + omega^2 xi - 1/(4 xi^3)| over the grid, with xi'' taken from the width interpolant."""
        grid = np.asarray(grid, dtype=np.float64)
        self.ensure_contains_times(grid)
        xi = self.width_spline(grid)
        xi_dot_dot = self.acceleration_spline(grid)
        omega = self.protocol.omega_at_array(grid)
        residuals = np.abs(xi_dot_dot + omega**2 * xi - 1 / (4 * xi**3))
        return float(np.max(residuals))

    def to_rows(self, number_of_points: int | None = None) -> list[tuple[float, ...]]:
        """Rows for CSV export, one per dense-output sample, in TRAJECTORY_COLUMNS order."""
        times = self.times if number_of_points is None else self.get_uniform_grid(number_of_points)
        rows = []
        for state in self.get_states(times):
            omega = self.protocol.omega_at(state.t)
            rows.append(
                (state.t, omega, state.xi, state.xi_dot, state.phase, reflection_coefficient(state, omega))
            )
        return rows
