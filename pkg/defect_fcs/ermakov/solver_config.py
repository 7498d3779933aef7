from __future__ import annotations

import math
from dataclasses import dataclass


class BadSolverConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances shared by the Ermakov and Schrodinger integrations."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = math.inf
    output_stride: int = 201

    def __post_init__(self) -> None:
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            msg = f'Tolerances must be > 0, got rel_tol={self.rel_tol}, abs_tol={self.abs_tol}'
            raise BadSolverConfigError(msg)
        if self.max_step <= 0:
            msg = f'max_step must be > 0, got {self.max_step}'
            raise BadSolverConfigError(msg)
        if self.output_stride < 2:
            msg = f'output_stride must be at least 2, got {self.output_stride}'
            raise BadSolverConfigError(msg)
