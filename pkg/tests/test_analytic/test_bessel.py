import math
from unittest import TestCase

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from defect_fcs.analytic.bessel import BesselDomainError, bessel_j, bessel_j_array


class TestBessel(TestCase):
    def test_half_integer_order(self) -> None:
        """J_{1/2}(x) = sqrt(2/(pi x)) sin(x), so J_{1/2}(pi/2) = 2/pi."""
        self.assertAlmostEqual(bessel_j(0.5, math.pi / 2), 2 / math.pi, places=12)

    def test_vanishes_at_origin(self) -> None:
        """J_p(0) = 0 for positive orders."""
        for order in (0.1, 0.25, 0.5):
            self.assertEqual(bessel_j(order, 0.0), 0.0)

    def test_power_series(self) -> None:
        """J_{1/4}(2) against its ascending series summed to convergence."""
        order = 0.25
        x = 2.0
        series = math.fsum(
            (-1) ** k * (x / 2) ** (2 * k + order) / (math.factorial(k) * math.gamma(k + order + 1))
            for k in range(40)
        )
        self.assertAlmostEqual(bessel_j(order, x), series, delta=1e-10 * abs(series))

    def test_array_matches_scalar(self) -> None:
        xs = np.array([0.5, 3.0, 17.0, 450.0])
        for x, value in zip(xs, bessel_j_array(-0.25, xs), strict=True):
            self.assertEqual(value, bessel_j(-0.25, float(x)))

    @given(st.floats(min_value=0.05, max_value=0.45), st.floats(min_value=0.1, max_value=50))
    def test_recurrence(self, order: float, x: float) -> None:
        """J_{p-1}(x) + J_{p+1}(x) = (2p/x) J_p(x)."""
        left = bessel_j(order - 1, x) + bessel_j(order + 1, x)
        right = 2 * order / x * bessel_j(order, x)
        scale = max(abs(bessel_j(order - 1, x)), abs(bessel_j(order + 1, x)), abs(right))
        self.assertLessEqual(abs(left - right), 1e-8 * scale)

    def test_unsupported_input(self) -> None:
        """Negative arguments, negative integer orders and infinite orders are rejected."""
        with self.assertRaises(BesselDomainError):
            bessel_j(0.25, -1.0)
        with self.assertRaises(BesselDomainError):
            bessel_j(-1.0, 1.0)
        with self.assertRaises(BesselDomainError):
            bessel_j(math.inf, 1.0)
