from __future__ import annotations

import json
import logging
from pathlib import Path

from ..dataset import write_json_lines
from ..run_config import RunConfig
from .acceptance_criteria.abstract_acceptance_criterion import AcceptanceCriterion, CriterionResult
from .acceptance_criteria.adiabatic_restoration import AdiabaticRestoration
from .acceptance_criteria.criticality_irreversibility import CriticalityIrreversibility
from .acceptance_criteria.effective_vs_exact import EffectiveVsExact
from .acceptance_criteria.ermakov_bessel import ErmakovBessel
from .acceptance_criteria.holstein_primakoff_gap import HolsteinPrimakoffGap
from .acceptance_criteria.moment_identities import MomentIdentities
from .acceptance_criteria.negative_binomial_equivalence import NegativeBinomialEquivalence
from .acceptance_criteria.normalization import Normalization
from .acceptance_criteria.small_n_oracle_match import SmallNOracleMatch
from .acceptance_criteria.universal_plateau import UniversalPlateau
from .acceptance_criteria.variance_ordering import VarianceOrdering

logger = logging.getLogger(__name__)


class Validator:
    def __init__(self, run_config: RunConfig, selected_numbers: set[int] | None = None):
        self.run_config = run_config

        # Acceptance criteria, in report order
        self.criteria: list[AcceptanceCriterion] = [
            Normalization(run_config),
            ErmakovBessel(run_config),
            UniversalPlateau(run_config),
            AdiabaticRestoration(run_config),
            CriticalityIrreversibility(run_config),
            EffectiveVsExact(run_config),
            MomentIdentities(run_config),
            NegativeBinomialEquivalence(run_config),
            VarianceOrdering(run_config),
            SmallNOracleMatch(run_config),
            HolsteinPrimakoffGap(run_config),
        ]
        if selected_numbers is not None:
            self.criteria = [criterion for criterion in self.criteria if criterion.number in selected_numbers]

    def run_validation(self) -> list[CriterionResult]:
        results = []
        for criterion in self.criteria:
            result = criterion.evaluate()
            logger.info(format_result(result))
            print(json.dumps(result.to_json_record(), sort_keys=True))  # noqa: T201
            results.append(result)
        number_passed = sum(result.passed for result in results)
        logger.info('%d of %d acceptance criteria passed', number_passed, len(results))
        return results

    def write_report(self, results: list[CriterionResult], path: Path) -> Path:
        return write_json_lines(path, [result.to_json_record() for result in results])


def format_result(result: CriterionResult) -> str:
    status = 'PASS' if result.passed else 'FAIL'
    measured = ', '.join(f'{key}={value}' for key, value in result.measured.items())
    if result.error is not None:
        measured = result.error
    return f'[{status}] {result.number:2d} {result.name}: {measured} (required: {result.required})'
