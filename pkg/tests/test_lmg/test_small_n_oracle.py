from unittest import TestCase

import numpy as np

from defect_fcs.drive_protocol import DomainError
from defect_fcs.ermakov.solver_config import SolverConfig
from defect_fcs.lmg.banded_hamiltonian import build_hamiltonian
from defect_fcs.lmg.field_schedule import LinearFieldSchedule
from defect_fcs.lmg.quench import SchrodingerPropagator
from defect_fcs.lmg.small_n_oracle import FullSpaceLmg, get_dicke_basis, small_n_oracle

TIGHT_SOLVER_CONFIG = SolverConfig(rel_tol=1e-13, abs_tol=1e-15)
TAU = 2.0


class TestFullSpaceLmg(TestCase):
    def test_dicke_basis_orthonormal(self) -> None:
        basis = get_dicke_basis(3)
        np.testing.assert_allclose(basis.T @ basis, np.eye(4), atol=1e-15)

    def test_sector_restriction(self) -> None:
        """Restricted to the Dicke states the full Hamiltonian is the sector one."""
        for n_sites in (2, 3):
            model = FullSpaceLmg(n_sites)
            restricted = model.dicke_basis.T @ model.get_hamiltonian(0.8) @ model.dicke_basis
            np.testing.assert_allclose(restricted, build_hamiltonian(n_sites, 0.8).to_dense(), atol=1e-14)

    def test_site_cap(self) -> None:
        with self.assertRaises(DomainError):
            FullSpaceLmg(4)


class TestSmallNOracle(TestCase):
    def test_matches_sector_propagation(self) -> None:
        """Full-space and sector propagation agree in amplitudes and energy."""
        for n_sites in (2, 3):
            propagator = SchrodingerPropagator(n_sites, LinearFieldSchedule(TAU), TIGHT_SOLVER_CONFIG)
            times = np.linspace(-TAU, TAU, 5)
            sector_states = propagator.propagate_states(times)
            oracle = small_n_oracle(n_sites, TAU, TIGHT_SOLVER_CONFIG, sector_states[0], times)

            self.assertLess(abs(oracle.get_max_leakage()), 1e-12)
            for sector_state, oracle_state, energy in zip(
                sector_states, oracle.sector_states, oracle.energies, strict=True
            ):
                np.testing.assert_allclose(oracle_state.amplitudes, sector_state.amplitudes, rtol=0, atol=1e-10)
                hamiltonian = propagator.get_hamiltonian(sector_state.time)
                self.assertAlmostEqual(energy, hamiltonian.expectation(sector_state.amplitudes), delta=1e-10)

    def test_wrong_dimension(self) -> None:
        propagator = SchrodingerPropagator(3, LinearFieldSchedule(TAU), TIGHT_SOLVER_CONFIG)
        with self.assertRaises(DomainError):
            small_n_oracle(2, TAU, TIGHT_SOLVER_CONFIG, propagator.get_initial_state(-TAU), np.array([-TAU, 0.0]))
