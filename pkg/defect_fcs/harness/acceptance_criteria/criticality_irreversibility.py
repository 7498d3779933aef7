from ...drive_protocol import DriveProtocol
from ..effective_runner import get_final_effective_sample
from .abstract_acceptance_criterion import AcceptanceCriterion

# Linear gap closing, omega = |t/tau|
ETA = 1.0
TAUS = (25.0, 50.0, 100.0)
SPREAD_TOLERANCE = 0.05


class CriticalityIrreversibility(AcceptanceCriterion):
    number = 5
    name = 'criticality_irreversibility'
    required = 'final <W>_irr / omega varies by < 5% across tau in {25, 50, 100} at eta=1, omega_c=0'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        ratios = []
        for tau in TAUS:
            sample = get_final_effective_sample(DriveProtocol(eta=ETA, tau=tau), self.run_config.solver_config)
            ratios.append(sample.w_irr / sample.omega)
        spread = self.get_relative_spread(ratios)
        measured: dict[str, float | bool | str] = {
            f'w_irr/omega tau={tau:g}': ratio for tau, ratio in zip(TAUS, ratios, strict=True)
        }
        measured['spread'] = spread
        return spread < SPREAD_TOLERANCE, measured
