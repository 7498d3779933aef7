import math
from unittest import TestCase

from defect_fcs.drive_protocol import DomainError
from defect_fcs.lmg.holstein_primakoff import CriticalPointError, hp_reference


class TestHpReference(TestCase):
    def test_paramagnetic_side(self) -> None:
        """h = 2: omega = 2 sqrt(h (h - 1)) and mass 1/(2h)."""
        reference = hp_reference(2.0)
        self.assertAlmostEqual(reference.omega, 2 * math.sqrt(2), places=14)
        self.assertEqual(reference.mass, 0.25)
        self.assertEqual(reference.e0, 2.0)

    def test_ferromagnetic_side(self) -> None:
        """h = 1/2: e0 = (1 + h^2)/2 and omega = 2 sqrt(1 - h^2)."""
        reference = hp_reference(0.5)
        self.assertEqual(reference.e0, 0.625)
        self.assertEqual(reference.mass, 0.5)
        self.assertAlmostEqual(reference.omega, math.sqrt(3), places=14)

    def test_gap_closes_at_criticality(self) -> None:
        """omega vanishes as h approaches 1 from either side."""
        self.assertLess(hp_reference(1 + 1e-8).omega, 1e-3)
        self.assertLess(hp_reference(1 - 1e-8).omega, 1e-3)
        with self.assertRaises(CriticalPointError):
            hp_reference(1.0)

    def test_negative_field(self) -> None:
        with self.assertRaises(DomainError):
            hp_reference(-0.1)

    def test_energy_correction(self) -> None:
        for h_field in (0.3, 1.5, 4.0):
            reference = hp_reference(h_field)
            self.assertAlmostEqual(reference.delta_e_corr, reference.omega / 2 - reference.e2_shift, places=15)
