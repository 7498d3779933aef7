from unittest import TestCase

from defect_fcs.floor_mode import FloorMode


class TestFloorMode(TestCase):
    def test_from_config_value(self) -> None:
        """Config spellings are case and separator insensitive."""
        for config_value in ('MaxFloor', 'max_floor', 'MAX_FLOOR', ' max-floor '):
            self.assertEqual(FloorMode.from_config_value(config_value), FloorMode.MAX_FLOOR)
        self.assertEqual(FloorMode.from_config_value('NoFloor'), FloorMode.NO_FLOOR)

    def test_unknown_value(self) -> None:
        """Anything else is an input error."""
        with self.assertRaises(ValueError):
            FloorMode.from_config_value('SmoothFloor')

    def test_predicates(self) -> None:
        self.assertTrue(FloorMode.MAX_FLOOR.is_max_floor())
        self.assertFalse(FloorMode.MAX_FLOOR.is_no_floor())
        self.assertTrue(FloorMode.NO_FLOOR.is_no_floor())
