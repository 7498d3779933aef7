from unittest import TestCase

from defect_fcs.harness.point_executor import map_points


class TestMapPoints(TestCase):
    def test_serial(self) -> None:
        self.assertEqual(map_points(abs, [-3, 1, -2], jobs=1), [3, 1, 2])

    def test_parallel_keeps_order(self) -> None:
        """Results come back in the order of the points, whatever process ran them."""
        points = list(range(-20, 0))
        self.assertEqual(map_points(abs, points, jobs=2), [abs(point) for point in points])

    def test_no_points(self) -> None:
        self.assertEqual(map_points(abs, [], jobs=4), [])
