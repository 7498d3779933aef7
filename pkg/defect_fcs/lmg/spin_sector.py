from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto

import numpy as np
import numpy.typing as npt

from ..drive_protocol import DomainError

NORM_TOLERANCE = 1e-9


class Parity(Enum):
    """J_z parity of a basis index n = J - m_z."""

    EVEN = auto()
    ODD = auto()

    def is_even(self) -> bool:
        return self == Parity.EVEN

    def get_offset(self) -> int:
        return 0 if self.is_even() else 1


@dataclass(frozen=True)
class SpinSector:
    """Maximal-spin sector J = N/2 of N spins, basis ordered m_z = +J, J-1, ..., -J."""

    n_sites: int

    def __post_init__(self) -> None:
        if self.n_sites < 2:
            msg = f'The LMG model needs N >= 2 sites, got {self.n_sites}'
            raise DomainError(msg)

    @property
    def dim(self) -> int:
        return self.n_sites + 1

    @property
    def total_spin(self) -> float:
        return self.n_sites / 2

    def get_magnetizations(self) -> npt.NDArray[np.float64]:
        return self.total_spin - np.arange(self.dim, dtype=np.float64)

    def get_block_indices(self, parity: Parity) -> npt.NDArray[np.int64]:
        return np.arange(parity.get_offset(), self.dim, 2, dtype=np.int64)


class SpinSectorState:
    def __init__(self, amplitudes: npt.NDArray[np.complex128], time: float):
        self.amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        self.time = time

    def get_norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def get_norm_drift(self) -> float:
        return abs(self.get_norm() - 1)

    def is_normalised(self, tolerance: float = NORM_TOLERANCE) -> bool:
        return self.get_norm_drift() <= tolerance

    def normalised(self) -> SpinSectorState:
        return SpinSectorState(self.amplitudes / self.get_norm(), self.time)

    def get_parity_weight(self, sector: SpinSector, parity: Parity) -> float:
        block = self.amplitudes[sector.get_block_indices(parity)]
        return float(np.vdot(block, block).real)

    def __len__(self) -> int:
        return len(self.amplitudes)

    def __repr__(self) -> str:
        return f'SpinSectorState(dim={len(self)}, time={self.time})'
