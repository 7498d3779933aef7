from __future__ import annotations

from enum import Enum, auto


class FloorMode(Enum):
    MAX_FLOOR = auto()
    NO_FLOOR = auto()

    def is_max_floor(self) -> bool:
        return self is FloorMode.MAX_FLOOR

    def is_no_floor(self) -> bool:
        return self is FloorMode.NO_FLOOR

    @staticmethod
    def from_config_value(config_value: str) -> FloorMode:
        """Accepts the names used in config files, e.g. 'MaxFloor', 'max_floor' or 'NO_FLOOR'."""
        normalized = config_value.strip().replace('_', '').replace('-', '').lower()
        for floor_mode in FloorMode:
            if floor_mode.name.replace('_', '').lower() == normalized:
                return floor_mode
        msg = f'Unknown floor mode: {config_value}'
        raise ValueError(msg)
