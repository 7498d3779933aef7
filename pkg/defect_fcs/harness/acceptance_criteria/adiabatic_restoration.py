from ...drive_protocol import DriveProtocol
from ..effective_runner import get_final_effective_sample
from .abstract_acceptance_criterion import AcceptanceCriterion

TAUS = (10.0, 25.0, 50.0, 100.0)
OMEGA_C = 0.1


class AdiabaticRestoration(AcceptanceCriterion):
    number = 4
    name = 'adiabatic_restoration'
    required = 'final <W>_irr strictly decreases across tau in {10, 25, 50, 100} at eta=1, omega_c=0.1'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        works = [
            get_final_effective_sample(
                DriveProtocol(eta=1.0, tau=tau, omega_c=OMEGA_C, floor_mode=self.run_config.floor_mode),
                self.run_config.solver_config,
            ).w_irr
            for tau in TAUS
        ]
        measured: dict[str, float | bool | str] = {
            f'w_irr tau={tau:g}': work for tau, work in zip(TAUS, works, strict=True)
        }
        return self.is_strictly_decreasing(works), measured
