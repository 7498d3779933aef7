from ..critical_width_check import compare_with_critical_width
from .abstract_acceptance_criterion import AcceptanceCriterion

ETAS = (1.0, 2.0)
BEFORE_CROSSING_TOLERANCE = 1e-4
AFTER_CROSSING_TOLERANCE = 1e-3


class ErmakovBessel(AcceptanceCriterion):
    number = 2
    name = 'ermakov_vs_bessel'
    required = 'xi^2 within 1e-4 relative of the Bessel form before the crossing, 1e-3 after, for eta in {1, 2}'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        measured: dict[str, float | bool | str] = {}
        passed = True
        for eta in ETAS:
            comparison = compare_with_critical_width(eta, self.run_config.solver_config)
            measured[f'eta={eta:g} before'] = comparison.before_crossing
            measured[f'eta={eta:g} after'] = comparison.after_crossing
            passed = passed and comparison.before_crossing <= BEFORE_CROSSING_TOLERANCE
            passed = passed and comparison.after_crossing <= AFTER_CROSSING_TOLERANCE
        return passed, measured
