import numpy as np

from ...drive_protocol import DriveProtocol
from ...ermakov.ermakov_integrator import integrate
from ..effective_runner import get_effective_sample
from .abstract_acceptance_criterion import AcceptanceCriterion

TAU = 25.0
OMEGA_CS = (0.0, 0.05, 0.5)
T_OVER_TAUS = (0.5, 1.0)


class VarianceOrdering(AcceptanceCriterion):
    number = 9
    name = 'variance_ordering'
    required = 'Var(Delta E) decreases with omega_c in {0, 0.05, 0.5} at t/tau in {0.5, 1} (eta=1, tau=25)'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        variances: dict[float, list[float]] = {t_over_tau: [] for t_over_tau in T_OVER_TAUS}
        for omega_c in OMEGA_CS:
            protocol = DriveProtocol(eta=1.0, tau=TAU, omega_c=omega_c, floor_mode=self.run_config.floor_mode)
            trajectory = integrate(protocol, self.run_config.solver_config)
            omega_start = protocol.omega_at(-TAU)
            states = trajectory.get_states(np.array(T_OVER_TAUS) * TAU)
            for t_over_tau, state in zip(T_OVER_TAUS, states, strict=True):
                sample = get_effective_sample(state, protocol.omega_at(state.t), omega_start)
                variances[t_over_tau].append(sample.var_delta_e)

        measured: dict[str, float | bool | str] = {}
        passed = True
        for t_over_tau, values in variances.items():
            for omega_c, value in zip(OMEGA_CS, values, strict=True):
                measured[f'var_delta_e t/tau={t_over_tau:g} omega_c={omega_c:g}'] = value
            passed = passed and self.is_strictly_decreasing(values)
        return passed, measured
