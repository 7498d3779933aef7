from __future__ import annotations

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from ...run_config import RunConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    required: str
    measured: dict[str, float | bool | str] = field(default_factory=dict)
    runtime_seconds: float = 0.0
    error: str | None = None

    def to_json_record(self) -> dict[str, object]:
        return {
            'number': self.number,
            'name': self.name,
            'passed': self.passed,
            'required': self.required,
            'measured': self.measured,
            'runtime_seconds': self.runtime_seconds,
            'error': self.error,
        }


class AcceptanceCriterion(ABC):
    number: int
    name: str
    required: str

    def __init__(self, run_config: RunConfig):
        self.run_config = run_config

    @abstractmethod
    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        """Returns whether the criterion holds together with the measured values."""
        raise NotImplementedError

    def evaluate(self) -> CriterionResult:
        """Runs measure(). A numerical or input failure becomes a failed entry instead of aborting the suite."""
        wall_clock_start = time.perf_counter()
        try:
            passed, measured = self.measure()
            error = None
        except (ArithmeticError, ValueError) as e:
            logger.exception('Criterion %d (%s) raised', self.number, self.name)
            passed, measured, error = False, {}, f'{type(e).__name__}: {e}'
        runtime_seconds = time.perf_counter() - wall_clock_start
        status = 'PASS' if passed else 'FAIL'
        logger.info('Criterion %d %s: %s in %.2fs', self.number, self.name, status, runtime_seconds)
        return CriterionResult(
            number=self.number,
            name=self.name,
            passed=passed,
            required=self.required,
            measured=measured,
            runtime_seconds=runtime_seconds,
            error=error,
        )

    @staticmethod
    def is_strictly_decreasing(values: list[float]) -> bool:
        return all(later < earlier for earlier, later in zip(values[:-1], values[1:], strict=True))

    @staticmethod
    def get_relative_spread(values: list[float]) -> float:
        mean = sum(values) / len(values)
        return (max(values) - min(values)) / abs(mean)
