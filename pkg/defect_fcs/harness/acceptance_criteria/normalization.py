from ...fcs.defect_distribution import excitation_pmf
from .abstract_acceptance_criterion import AcceptanceCriterion

R_SQ_GRID = (*(round(0.1 * i, 1) for i in range(10)), 0.95)
MASS_TOLERANCE = 1e-12
# Allowance for rounding in the summed mass above 1
ROUNDING_ALLOWANCE = 1e-15


class Normalization(AcceptanceCriterion):
    number = 1
    name = 'normalization'
    required = 'sum of p(m) in [1 - 1e-12, 1] for |R|^2 in {0, 0.1, ..., 0.9, 0.95}'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        masses = [excitation_pmf(r_sq).get_total_mass() for r_sq in R_SQ_GRID]
        smallest, largest = min(masses), max(masses)
        passed = smallest >= 1 - MASS_TOLERANCE and largest <= 1 + ROUNDING_ALLOWANCE
        return passed, {'min_mass': smallest, 'max_mass': largest}
