import math
from unittest import TestCase

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from defect_fcs.drive_protocol import DomainError
from defect_fcs.lmg.banded_hamiltonian import build_hamiltonian
from defect_fcs.lmg.spin_sector import Parity, SpinSector, SpinSectorState


class TestSpinSector(TestCase):
    def test_dimension(self) -> None:
        """The spin-N/2 sector holds N + 1 states ordered from m_z = +N/2 down."""
        sector = SpinSector(6)
        self.assertEqual(sector.dim, 7)
        self.assertEqual(sector.total_spin, 3)
        np.testing.assert_array_equal(sector.get_magnetizations(), [3, 2, 1, 0, -1, -2, -3])

    def test_parity_blocks(self) -> None:
        sector = SpinSector(4)
        np.testing.assert_array_equal(sector.get_block_indices(Parity.EVEN), [0, 2, 4])
        np.testing.assert_array_equal(sector.get_block_indices(Parity.ODD), [1, 3])

    def test_too_small(self) -> None:
        """A single spin has no collective coupling."""
        with self.assertRaises(DomainError):
            SpinSector(1)

    def test_state_norm(self) -> None:
        state = SpinSectorState(np.array([3.0, 0.0, 4.0j]), time=1.5)
        self.assertAlmostEqual(state.get_norm(), 5.0, places=15)
        self.assertFalse(state.is_normalised())
        normalised = state.normalised()
        self.assertTrue(normalised.is_normalised())
        self.assertEqual(normalised.time, 1.5)
        self.assertAlmostEqual(normalised.get_parity_weight(SpinSector(2), Parity.EVEN), 1.0, places=15)


class TestBuildHamiltonian(TestCase):
    def test_two_sites_without_field(self) -> None:
        """-J_x^2 for J = 1 has eigenvalues {-1, -1, 0}."""
        np.testing.assert_allclose(np.linalg.eigvalsh(build_hamiltonian(2, 0.0).to_dense()), [-1, -1, 0], atol=1e-14)

    def test_two_sites_at_critical_field(self) -> None:
        """The ground energy at h = 1 is -1/2 - sqrt(4.25)."""
        energies = np.linalg.eigvalsh(build_hamiltonian(2, 1.0).to_dense())
        self.assertAlmostEqual(energies[0], -0.5 - math.sqrt(4.25), places=13)
        self.assertAlmostEqual(energies[0], -2.56155, places=5)

    @given(st.integers(min_value=2, max_value=40), st.floats(min_value=0, max_value=5))
    def test_structure(self, n_sites: int, h_field: float) -> None:
        """Real symmetric, with no coupling between neighbouring magnetizations."""
        dense = build_hamiltonian(n_sites, h_field).to_dense()
        np.testing.assert_array_equal(dense, dense.T)
        np.testing.assert_array_equal(np.diag(dense, 1), np.zeros(n_sites))

    def test_matvec(self) -> None:
        """The banded product matches the dense one."""
        hamiltonian = build_hamiltonian(9, 0.7)
        vector = np.exp(1j * np.arange(10)) / np.sqrt(10)
        np.testing.assert_allclose(hamiltonian.matvec(vector), hamiltonian.to_dense() @ vector, atol=1e-13)
        self.assertAlmostEqual(
            hamiltonian.expectation(vector), float(np.vdot(vector, hamiltonian.to_dense() @ vector).real), places=12
        )

    def test_parity_block(self) -> None:
        """The even block is the tridiagonal restriction to even basis indices."""
        hamiltonian = build_hamiltonian(6, 1.5)
        diag, offdiag = hamiltonian.get_block(Parity.EVEN)
        dense = hamiltonian.to_dense()[np.ix_([0, 2, 4, 6], [0, 2, 4, 6])]
        np.testing.assert_array_equal(diag, np.diag(dense))
        np.testing.assert_array_equal(offdiag, np.diag(dense, 1))
