from ...analytic.negative_binomial import drive_reflection
from ...drive_protocol import DriveProtocol
from ...fcs.moment_set import moments_closed_form
from ..effective_runner import get_final_effective_sample
from .abstract_acceptance_criterion import AcceptanceCriterion

# Frequency exponent whose squared gap is linear in t
PLATEAU_ETA = 0.5
TAUS = (25.0, 50.0, 100.0)
SPREAD_TOLERANCE = 0.02
PLATEAU_TOLERANCE = 0.05


class UniversalPlateau(AcceptanceCriterion):
    number = 3
    name = 'universal_plateau'
    required = 'final <nu> agrees across tau in {25, 50, 100} within 2% and with 1/3 within 5%'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        expected = moments_closed_form(drive_reflection(PLATEAU_ETA) ** 2).mean
        nu_means = [
            get_final_effective_sample(DriveProtocol(eta=PLATEAU_ETA, tau=tau), self.run_config.solver_config).nu_mean
            for tau in TAUS
        ]
        spread = self.get_relative_spread(nu_means)
        worst_deviation = max(abs(nu_mean - expected) / expected for nu_mean in nu_means)
        measured: dict[str, float | bool | str] = {
            f'nu_mean tau={tau:g}': nu for tau, nu in zip(TAUS, nu_means, strict=True)
        }
        measured.update({'expected': expected, 'spread': spread, 'max_deviation': worst_deviation})
        return spread <= SPREAD_TOLERANCE and worst_deviation <= PLATEAU_TOLERANCE, measured
