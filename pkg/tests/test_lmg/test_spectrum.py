import math
from unittest import TestCase

import numpy as np

from defect_fcs.drive_protocol import DomainError
from defect_fcs.lmg.banded_hamiltonian import build_hamiltonian
from defect_fcs.lmg.spectrum import (
    LevelTracker,
    Spectrum,
    get_degenerate_clusters,
    ground_state,
    instantaneous_spectrum,
    parity_block_spectrum,
)
from defect_fcs.lmg.spin_sector import Parity


class TestInstantaneousSpectrum(TestCase):
    def test_two_sites(self) -> None:
        spectrum = instantaneous_spectrum(build_hamiltonian(2, 0.0), 3)
        np.testing.assert_allclose(spectrum.energies, [-1, -1, 0], atol=1e-14)

    def test_orthonormal(self) -> None:
        """The returned vectors are orthonormal."""
        spectrum = instantaneous_spectrum(build_hamiltonian(40, 0.6), 10)
        np.testing.assert_allclose(spectrum.vectors.T @ spectrum.vectors, np.eye(10), atol=1e-10)

    def test_ascending(self) -> None:
        spectrum = instantaneous_spectrum(build_hamiltonian(30, 1.7), 8)
        self.assertTrue(np.all(np.diff(spectrum.energies) >= 0))

    def test_level_count(self) -> None:
        """Between one level and the sector dimension."""
        hamiltonian = build_hamiltonian(4, 1.0)
        with self.assertRaises(DomainError):
            instantaneous_spectrum(hamiltonian, 0)
        with self.assertRaises(DomainError):
            instantaneous_spectrum(hamiltonian, 6)

    def test_gap_approaches_oscillator_frequency(self) -> None:
        """At h = 2 the finite-size gap closes in on 2 sqrt(2) as N grows."""
        deviations = [
            abs(instantaneous_spectrum(build_hamiltonian(n_sites, 2.0), 2).get_gap() - 2 * math.sqrt(2))
            for n_sites in (64, 256, 1024)
        ]
        self.assertTrue(deviations[0] > deviations[1] > deviations[2])
        self.assertLess(deviations[2] / (2 * math.sqrt(2)), 0.01)


class TestParityBlockSpectrum(TestCase):
    def test_blocks_make_up_the_spectrum(self) -> None:
        """Together the two parity blocks hold every eigenvalue."""
        hamiltonian = build_hamiltonian(7, 0.4)
        even = parity_block_spectrum(hamiltonian, 4, Parity.EVEN)
        odd = parity_block_spectrum(hamiltonian, 4, Parity.ODD)
        np.testing.assert_allclose(
            np.sort(np.concatenate([even.energies, odd.energies])),
            np.linalg.eigvalsh(hamiltonian.to_dense()),
            atol=1e-12,
        )

    def test_single_state_block(self) -> None:
        """N = 2 has a one-dimensional odd block."""
        spectrum = parity_block_spectrum(build_hamiltonian(2, 0.0), 1, Parity.ODD)
        self.assertAlmostEqual(spectrum.get_ground_energy(), -1.0, places=15)
        np.testing.assert_array_equal(spectrum.get_ground_vector(), [0.0, 1.0, 0.0])

    def test_labels(self) -> None:
        """Above the critical field the even block holds the even oscillator levels."""
        hamiltonian = build_hamiltonian(20, 2.0)
        np.testing.assert_array_equal(parity_block_spectrum(hamiltonian, 3, Parity.EVEN).labels, [0, 2, 4])
        np.testing.assert_array_equal(parity_block_spectrum(hamiltonian, 3, Parity.ODD).labels, [1, 3, 5])
        np.testing.assert_array_equal(
            parity_block_spectrum(build_hamiltonian(20, 0.5), 3, Parity.EVEN).labels, [0, 1, 2]
        )


class TestGroundState(TestCase):
    def test_two_sites(self) -> None:
        self.assertAlmostEqual(ground_state(build_hamiltonian(2, 1.0)).energy, -0.5 - math.sqrt(4.25), places=13)

    def test_paramagnetic_limit(self) -> None:
        """A strong field polarises every spin along z."""
        ground = ground_state(build_hamiltonian(64, 50.0))
        self.assertGreaterEqual(abs(ground.state.amplitudes[0]) ** 2, 0.999)

    def test_eigenpair_residual(self) -> None:
        hamiltonian = build_hamiltonian(12, 1.3)
        ground = ground_state(hamiltonian)
        residual = hamiltonian.matvec(ground.state.amplitudes) - ground.energy * ground.state.amplitudes
        self.assertLessEqual(float(np.linalg.norm(residual)), 1e-10)

    def test_phase_convention(self) -> None:
        """The largest amplitude is real and positive."""
        amplitudes = ground_state(build_hamiltonian(10, 0.3), Parity.EVEN).state.amplitudes
        pivot = amplitudes[np.argmax(np.abs(amplitudes))]
        self.assertGreater(pivot.real, 0)
        self.assertEqual(pivot.imag, 0)


class TestLevelTracker(TestCase):
    def test_swapped_degenerate_levels(self) -> None:
        """Degenerate levels keep their identity when the eigensolver swaps them."""
        labels = np.arange(3)
        energies = np.array([0.0, 1.0, 1.0])
        tracker = LevelTracker()
        tracker.track(Spectrum(energies, np.eye(3), labels))
        tracked = tracker.track(Spectrum(energies, np.eye(3)[:, [0, 2, 1]], labels))
        np.testing.assert_array_equal(tracked.vectors, np.eye(3))
        self.assertEqual(tracker.number_of_swaps, 1)

    def test_non_degenerate_levels_untouched(self) -> None:
        labels = np.arange(3)
        tracker = LevelTracker()
        tracker.track(Spectrum(np.array([0.0, 1.0, 2.0]), np.eye(3), labels))
        swapped = np.eye(3)[:, [0, 2, 1]]
        tracked = tracker.track(Spectrum(np.array([0.0, 1.0, 2.0]), swapped, labels))
        np.testing.assert_array_equal(tracked.vectors, swapped)
        self.assertEqual(tracker.number_of_swaps, 0)

    def test_clusters(self) -> None:
        clusters = get_degenerate_clusters(np.array([0.0, 1.0, 1.0 + 1e-12, 2.0, 3.0, 3.0]), 1e-8)
        self.assertEqual([cluster.tolist() for cluster in clusters], [[1, 2], [4, 5]])
