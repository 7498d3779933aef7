from ...fcs.defect_distribution import excitation_pmf
from ...fcs.moment_set import moments_closed_form, moments_from_pmf
from .abstract_acceptance_criterion import AcceptanceCriterion
from .normalization import R_SQ_GRID

MOMENT_TOLERANCE = 1e-10
ORACLE_TAIL_EPS = 1e-20


class MomentIdentities(AcceptanceCriterion):
    number = 7
    name = 'moment_identities'
    required = 'closed-form <nu>, <nu^2>, <nu^3> match pmf sums to 1e-10 relative on the normalization grid'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        worst = 0.0
        for r_sq in R_SQ_GRID:
            closed_form = moments_closed_form(r_sq)
            brute_force = moments_from_pmf(excitation_pmf(r_sq, tail_eps=ORACLE_TAIL_EPS))
            for exact, summed in (
                (closed_form.mean, brute_force.mean),
                (closed_form.second, brute_force.second),
                (closed_form.third, brute_force.third),
            ):
                worst = max(worst, abs(summed - exact) / max(1.0, abs(exact)))
        return worst <= MOMENT_TOLERANCE, {'max_relative_error': worst}
