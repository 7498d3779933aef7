from unittest import TestCase

import numpy as np

from defect_fcs.fcs.defect_distribution import TruncationError
from defect_fcs.lmg.banded_hamiltonian import build_hamiltonian
from defect_fcs.lmg.observables import EnergyBelowGroundError, defect_density, ground_overlap, irreversible_work
from defect_fcs.lmg.spectrum import Spectrum, instantaneous_spectrum
from defect_fcs.lmg.spin_sector import SpinSectorState


class TestObservables(TestCase):
    def setUp(self) -> None:
        self.hamiltonian = build_hamiltonian(8, 2.0)
        self.spectrum = instantaneous_spectrum(self.hamiltonian, 5)

    def build_state(self, weights: dict[int, float]) -> SpinSectorState:
        amplitudes = sum(np.sqrt(weight) * self.spectrum.vectors[:, level] for level, weight in weights.items())
        return SpinSectorState(np.asarray(amplitudes, dtype=np.complex128), time=0.0)

    def test_defect_density(self) -> None:
        """<nu> is the population-weighted level index."""
        self.assertAlmostEqual(defect_density(self.build_state({0: 1.0}), self.spectrum), 0.0, places=12)
        self.assertAlmostEqual(defect_density(self.build_state({2: 1.0}), self.spectrum), 2.0, places=12)
        self.assertAlmostEqual(defect_density(self.build_state({0: 0.5, 2: 0.5}), self.spectrum), 1.0, places=12)

    def test_uncaptured_weight(self) -> None:
        """Levels that miss the state's weight are a truncation error."""
        truncated = Spectrum(self.spectrum.energies[:2], self.spectrum.vectors[:, :2], self.spectrum.labels[:2])
        with self.assertRaises(TruncationError):
            defect_density(self.build_state({4: 1.0}), truncated)

    def test_irreversible_work(self) -> None:
        """The ground state does no irreversible work; an excited level does E_k - E_0."""
        e0 = self.spectrum.get_ground_energy()
        self.assertEqual(irreversible_work(self.build_state({0: 1.0}), self.hamiltonian, e0 + 1e-12), 0.0)
        self.assertAlmostEqual(irreversible_work(self.build_state({0: 1.0}), self.hamiltonian, e0), 0.0, delta=1e-10)
        self.assertAlmostEqual(
            irreversible_work(self.build_state({2: 1.0}), self.hamiltonian, e0),
            self.spectrum.energies[2] - e0,
            places=10,
        )

    def test_energy_below_ground(self) -> None:
        """A reference energy above the true ground energy is an error, not zero work."""
        e0 = self.spectrum.get_ground_energy()
        with self.assertRaises(EnergyBelowGroundError):
            irreversible_work(self.build_state({0: 1.0}), self.hamiltonian, e0 + 1e-3)

    def test_unnormalised_state(self) -> None:
        """The work is measured on the normalised state."""
        e0 = self.spectrum.get_ground_energy()
        state = self.build_state({2: 1.0})
        scaled = SpinSectorState(state.amplitudes * (1 + 1e-9), time=0.0)
        self.assertAlmostEqual(
            irreversible_work(scaled, self.hamiltonian, e0), self.spectrum.energies[2] - e0, places=10
        )

    def test_ground_overlap(self) -> None:
        self.assertAlmostEqual(ground_overlap(self.build_state({0: 1.0}), self.spectrum), 1.0, places=12)
        self.assertAlmostEqual(ground_overlap(self.build_state({0: 0.25, 1: 0.75}), self.spectrum), 0.25, places=12)
