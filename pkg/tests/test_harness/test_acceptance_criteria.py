import math
from unittest import TestCase
from unittest.mock import patch

from defect_fcs.ermakov.solver_config import SolverConfig
from defect_fcs.harness.acceptance_criteria import effective_vs_exact
from defect_fcs.harness.acceptance_criteria.abstract_acceptance_criterion import AcceptanceCriterion
from defect_fcs.harness.acceptance_criteria.adiabatic_restoration import AdiabaticRestoration
from defect_fcs.harness.acceptance_criteria.criticality_irreversibility import CriticalityIrreversibility
from defect_fcs.harness.acceptance_criteria.effective_vs_exact import EffectiveVsExact
from defect_fcs.harness.acceptance_criteria.ermakov_bessel import ErmakovBessel
from defect_fcs.harness.acceptance_criteria.holstein_primakoff_gap import HolsteinPrimakoffGap
from defect_fcs.harness.acceptance_criteria.moment_identities import MomentIdentities
from defect_fcs.harness.acceptance_criteria.negative_binomial_equivalence import NegativeBinomialEquivalence
from defect_fcs.harness.acceptance_criteria.normalization import Normalization
from defect_fcs.harness.acceptance_criteria.small_n_oracle_match import SmallNOracleMatch
from defect_fcs.harness.acceptance_criteria.universal_plateau import UniversalPlateau
from defect_fcs.harness.acceptance_criteria.variance_ordering import VarianceOrdering
from defect_fcs.run_config import RunConfig


class FailingCriterion(AcceptanceCriterion):
    number = 99
    name = 'failing'
    required = 'nothing'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        msg = 'no ground state'
        raise ArithmeticError(msg)


class TestAcceptanceCriteria(TestCase):
    run_config = RunConfig()

    def test_cheap_criteria_pass(self) -> None:
        """The closed-form and oracle criteria hold."""
        for criterion_class in (
            Normalization,
            MomentIdentities,
            NegativeBinomialEquivalence,
            SmallNOracleMatch,
            HolsteinPrimakoffGap,
        ):
            result = criterion_class(self.run_config).evaluate()
            self.assertTrue(result.passed, msg=f'{result.name}: {result.measured} {result.error}')
            self.assertIsNone(result.error)

    def test_effective_model_criteria_pass(self) -> None:
        """The Ermakov-based criteria hold at their full size."""
        for criterion_class in (
            ErmakovBessel,
            UniversalPlateau,
            AdiabaticRestoration,
            CriticalityIrreversibility,
            VarianceOrdering,
        ):
            result = criterion_class(self.run_config).evaluate()
            self.assertTrue(result.passed, msg=f'{result.name}: {result.measured} {result.error}')

    def test_effective_vs_exact_on_small_systems(self) -> None:
        """The calibration and comparison run end to end on small LMG systems."""
        run_config = RunConfig(solver_config=SolverConfig(rel_tol=1e-8, abs_tol=1e-10, output_stride=81), samples=21)
        with (
            patch.object(effective_vs_exact, 'CALIBRATION_SITES', 16),
            patch.object(effective_vs_exact, 'CALIBRATION_N_OVER_TAU', 4.0),
            patch.object(effective_vs_exact, 'COMPARISON_SITES', 32),
            patch.object(effective_vs_exact, 'COMPARISON_N_OVER_TAUS', (4.0,)),
        ):
            result = EffectiveVsExact(run_config).evaluate()
        self.assertIsNone(result.error)
        self.assertEqual(set(result.measured), {'omega_c_coeff', 'sup_deviation N/tau=4'})
        self.assertIsInstance(result.measured['sup_deviation N/tau=4'], float)
        deviation = float(result.measured['sup_deviation N/tau=4'])
        self.assertTrue(math.isfinite(deviation))
        self.assertEqual(result.passed, deviation <= effective_vs_exact.SUP_NORM_TOLERANCE)

    def test_failure_becomes_result(self) -> None:
        """A numerical failure is reported, not raised."""
        result = FailingCriterion(self.run_config).evaluate()
        self.assertFalse(result.passed)
        self.assertEqual(result.error, 'ArithmeticError: no ground state')
        self.assertEqual(result.to_json_record()['number'], 99)

    def test_helpers(self) -> None:
        self.assertTrue(AcceptanceCriterion.is_strictly_decreasing([3.0, 2.0, 1.0]))
        self.assertFalse(AcceptanceCriterion.is_strictly_decreasing([3.0, 3.0, 1.0]))
        self.assertAlmostEqual(AcceptanceCriterion.get_relative_spread([1.0, 3.0]), 1.0)
