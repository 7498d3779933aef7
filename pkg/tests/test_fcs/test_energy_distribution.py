from unittest import TestCase

from defect_fcs.fcs.defect_distribution import excitation_pmf
from defect_fcs.fcs.energy_distribution import (
    MixedInitialStateError,
    internal_energy_distribution,
    internal_energy_mean,
    internal_energy_moments,
    internal_energy_variance,
)
from defect_fcs.fcs.moment_set import moments_closed_form


class TestInternalEnergy(TestCase):
    def test_mean_without_change(self) -> None:
        """A frozen ground state does no work."""
        self.assertEqual(internal_energy_mean(1.0, 1.0, 0.0).total, 0.0)

    def test_work_split(self) -> None:
        """w_rev = (2 - 1)/2 and w_irr = 2 * (1/3)."""
        work_split = internal_energy_mean(1.0, 2.0, 1 / 3)
        self.assertAlmostEqual(work_split.w_rev, 0.5, places=15)
        self.assertAlmostEqual(work_split.w_irr, 2 / 3, places=15)
        self.assertAlmostEqual(work_split.total, 7 / 6, places=15)
        self.assertEqual(work_split.total, work_split.w_rev + work_split.w_irr)

    def test_adiabatic_work_is_reversible(self) -> None:
        self.assertEqual(internal_energy_mean(1.0, 0.3, 0.0).w_irr, 0.0)

    def test_variance(self) -> None:
        self.assertEqual(internal_energy_variance(2.0, 0.0), 0.0)
        self.assertEqual(internal_energy_variance(2.0, 1.0), 4.0)

    def test_single_atom(self) -> None:
        """The ground state at unchanged frequency is one atom at zero energy."""
        energy_distribution = internal_energy_distribution(1.0, 1.0, excitation_pmf(0.0))
        self.assertEqual(energy_distribution.to_rows(), [(0.0, 1.0)])

    def test_atom_positions(self) -> None:
        """Atoms sit at omega_t (m + 1/2) - omega_t0 / 2."""
        atoms = internal_energy_distribution(1.0, 2.0, excitation_pmf(0.25)).atoms
        self.assertAlmostEqual(atoms[0].delta_e, 0.5, places=15)
        self.assertAlmostEqual(atoms[0].prob, 0.86603, places=5)
        self.assertAlmostEqual(atoms[1].delta_e, 4.5, places=15)
        self.assertAlmostEqual(atoms[1].prob, 0.10825, places=5)

    def test_atom_moments(self) -> None:
        """Mean and variance of the atoms match the closed forms."""
        for omega_start, omega_now, r_sq in ((1.0, 2.0, 0.25), (2.0, 0.7, 0.6), (1.0, 1.0, 0.05)):
            distribution = excitation_pmf(r_sq, tail_eps=1e-16)
            energy_distribution = internal_energy_distribution(omega_start, omega_now, distribution)
            mean, variance = internal_energy_moments(energy_distribution)
            closed_form = moments_closed_form(r_sq)
            expected_mean = internal_energy_mean(omega_start, omega_now, closed_form.mean).total
            self.assertAlmostEqual(mean, expected_mean, delta=1e-10)
            self.assertAlmostEqual(variance, internal_energy_variance(omega_now, closed_form.variance), delta=1e-10)
            self.assertGreaterEqual(energy_distribution.get_total_probability(), 1 - 1e-12)

    def test_mixed_initial_state(self) -> None:
        """Only the ground state can start the drive."""
        internal_energy_distribution(1.0, 1.0, excitation_pmf(0.1), initial_populations={0: 1.0})
        with self.assertRaises(MixedInitialStateError):
            internal_energy_distribution(1.0, 1.0, excitation_pmf(0.1), initial_populations={0: 0.5, 2: 0.5})
