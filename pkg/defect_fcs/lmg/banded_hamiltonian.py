from __future__ import annotations

import numpy as np
import numpy.typing as npt

from .spin_sector import Parity, SpinSector

# Number of off-diagonals above the main diagonal, including the empty one-step band
UPPER_BANDWIDTH = 2


class BandedHamiltonian:
    """
    H = -(2/N) J_x^2 - 2 h J_z in the J_z eigenbasis of the spin-N/2 sector.

    J_x^2 only connects m_z to m_z and m_z +- 2, so the matrix is real symmetric with an empty one-step band and splits
    into two tridiagonal J_z-parity blocks. offdiag2[n] couples basis indices n and n + 2.
    """

    def __init__(
        self,
        sector: SpinSector,
        h_field: float,
        diag: npt.NDArray[np.float64],
        offdiag2: npt.NDArray[np.float64],
    ):
        self.sector = sector
        self.h_field = h_field
        self.diag = diag
        self.offdiag2 = offdiag2

    @property
    def dim(self) -> int:
        return self.sector.dim

    def matvec(self, vector: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
        result = self.diag * vector
        result[:-2] += self.offdiag2 * vector[2:]
        result[2:] += self.offdiag2 * vector[:-2]
        return result

    def expectation(self, vector: npt.NDArray[np.complex128]) -> float:
        return float(np.vdot(vector, self.matvec(vector)).real)

    def to_dense(self) -> npt.NDArray[np.float64]:
        return np.diag(self.diag) + np.diag(self.offdiag2, 2) + np.diag(self.offdiag2, -2)

    def to_upper_banded(self) -> npt.NDArray[np.float64]:
        """Upper banded storage as expected by scipy.linalg.eig_banded."""
        banded = np.zeros((UPPER_BANDWIDTH + 1, self.dim))
        banded[0, 2:] = self.offdiag2
        banded[UPPER_BANDWIDTH] = self.diag
        return banded

    def get_block(self, parity: Parity) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
        """Diagonal and off-diagonal of the tridiagonal parity block."""
        indices = self.sector.get_block_indices(parity)
        return self.diag[indices], self.offdiag2[indices[:-1]]

    def __repr__(self) -> str:
        return f'BandedHamiltonian(n_sites={self.sector.n_sites}, h_field={self.h_field})'


def get_coupling_bands(sector: SpinSector) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Diagonal and two-step bands of -(2/N) J_x^2."""
    spin = sector.total_spin
    casimir = spin * (spin + 1)
    m = sector.get_magnetizations()
    jx_sq_diag = (casimir - m**2) / 2

    upper = m[:-2]
    jx_sq_offdiag2 = np.sqrt(casimir - upper * (upper - 1)) * np.sqrt(casimir - (upper - 1) * (upper - 2)) / 4

    scale = -2 / sector.n_sites
    return scale * jx_sq_diag, scale * jx_sq_offdiag2


def build_hamiltonian(n_sites: int, h_field: float) -> BandedHamiltonian:
    sector = SpinSector(n_sites)
    coupling_diag, offdiag2 = get_coupling_bands(sector)
    diag = coupling_diag - 2 * h_field * sector.get_magnetizations()
    return BandedHamiltonian(sector, h_field, diag, offdiag2)
