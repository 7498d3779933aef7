import numpy as np

from ...ermakov.solver_config import SolverConfig
from ...lmg.field_schedule import LinearFieldSchedule
from ...lmg.quench import SchrodingerPropagator
from ...lmg.small_n_oracle import small_n_oracle
from .abstract_acceptance_criterion import AcceptanceCriterion

N_SITES = 2
TAU = 10.0
SAMPLES = 21
AMPLITUDE_TOLERANCE = 1e-10
ORACLE_SOLVER_CONFIG = SolverConfig(rel_tol=1e-13, abs_tol=1e-15)


class SmallNOracleMatch(AcceptanceCriterion):
    number = 10
    name = 'small_n_oracle'
    required = 'N=2 sector amplitudes match full two-qubit propagation to 1e-10 over a full quench at tau=10'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        times = np.linspace(-TAU, TAU, SAMPLES)
        propagator = SchrodingerPropagator(N_SITES, LinearFieldSchedule(TAU), ORACLE_SOLVER_CONFIG)
        sector_states = propagator.propagate_states(times)
        oracle = small_n_oracle(N_SITES, TAU, ORACLE_SOLVER_CONFIG, sector_states[0], times)

        max_difference = max(
            float(np.max(np.abs(sector.amplitudes - projected.amplitudes)))
            for sector, projected in zip(sector_states, oracle.sector_states, strict=True)
        )
        max_leakage = oracle.get_max_leakage()
        measured: dict[str, float | bool | str] = {
            'max_amplitude_difference': max_difference,
            'max_leakage': max_leakage,
        }
        return max_difference <= AMPLITUDE_TOLERANCE, measured
