from ...analytic.negative_binomial import NegBinomial, nb_moments, nb_pmf
from ...fcs.defect_distribution import excitation_pmf
from ...fcs.moment_set import moments_closed_form
from .abstract_acceptance_criterion import AcceptanceCriterion

ETAS = (0.5, 1.0, 2.0, 5.0)
MAX_PAIRS = 50
TOLERANCE = 1e-12
ORACLE_TAIL_EPS = 1e-20


class NegativeBinomialEquivalence(AcceptanceCriterion):
    number = 8
    name = 'negative_binomial_equivalence'
    required = 'nb_pmf(k) = p(2k) to 1e-12 for k <= 50 and 2 * NB mean = <nu> to 1e-12, eta in {0.5, 1, 2, 5}'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        worst_pmf = 0.0
        worst_mean = 0.0
        for eta in ETAS:
            nb = NegBinomial.from_eta(eta)
            distribution = excitation_pmf(nb.fail_prob, tail_eps=ORACLE_TAIL_EPS)
            for k in range(MAX_PAIRS + 1):
                worst_pmf = max(worst_pmf, abs(nb_pmf(nb, k) - distribution.get_prob(2 * k)))
            worst_mean = max(worst_mean, abs(2 * nb_moments(nb).mean - moments_closed_form(nb.fail_prob).mean))
        passed = worst_pmf <= TOLERANCE and worst_mean <= TOLERANCE
        return passed, {'max_pmf_difference': worst_pmf, 'max_mean_difference': worst_mean}
