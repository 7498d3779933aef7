from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ..analytic.critical_width import xi_critical
from ..drive_protocol import DriveProtocol
from ..ermakov.ermakov_integrator import adiabatic_initial_condition, integrate
from ..ermakov.solver_config import SolverConfig

# The drive starts where omega' / omega^2 = eta / START_SCALE, deep in the adiabatic regime
START_SCALE = 900.0
COMPARISON_HALF_WIDTH = 5.0
COMPARISON_GAP = 0.05
COMPARISON_POINTS = 200


class WidthComparison(NamedTuple):
    before_crossing: float
    after_crossing: float


def get_critical_protocol(eta: float) -> DriveProtocol:
    """omega = |t|^eta on a window long enough for the adiabatic start to reproduce the t -> -inf ground state."""
    start_time = START_SCALE ** (1 / (1 + eta))
    return DriveProtocol(eta=eta, tau=start_time, delta=start_time**eta)


def compare_with_critical_width(eta: float, solver_config: SolverConfig) -> WidthComparison:
    """Largest relative deviation of the integrated xi^2 from the closed-form one, on each side of the crossing."""
    protocol = get_critical_protocol(eta)
    trajectory = integrate(protocol, solver_config, adiabatic_initial_condition(protocol, -protocol.tau))

    deviations = []
    for sign in (-1, 1):
        grid = sign * np.linspace(COMPARISON_GAP, COMPARISON_HALF_WIDTH, COMPARISON_POINTS)
        relative_errors = [
            abs(state.xi**2 - xi_critical(eta, state.t)) / xi_critical(eta, state.t)
            for state in trajectory.get_states(np.sort(grid))
        ]
        deviations.append(max(relative_errors))
    return WidthComparison(before_crossing=deviations[0], after_crossing=deviations[1])
