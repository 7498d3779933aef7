from __future__ import annotations

import configparser
import dataclasses
import math
from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from .drive_protocol import DriveProtocol
from .ermakov.solver_config import BadSolverConfigError, SolverConfig
from .floor_mode import FloorMode


class BadRunConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a run needs. The sweep axes are tuples; every combination of the axes relevant to a run kind is one
    sweep point.
    """

    floor_mode: FloorMode = FloorMode.MAX_FLOOR
    solver_config: SolverConfig = SolverConfig()

    etas: tuple[float, ...] = (1.0,)
    taus: tuple[float, ...] = (25.0,)
    omega_cs: tuple[float, ...] = (0.0,)
    deltas: tuple[float, ...] = (1.0,)
    n_sites: tuple[int, ...] = (512,)
    n_over_taus: tuple[float, ...] = (30.0,)

    samples: int = 51
    n_levels: int = 32
    omega_c_coeff: float = 1.0

    time_exponent: float = 0.0
    density_exponent: float = 0.0
    grid_points: int = 201

    analytic_etas: tuple[float, ...] = (1.0, 10.0, 100.0)
    k_max: int = 50
    baseline_sites: int = 0

    jobs: int = 1
    out: Path = Path('results.csv')

    def __post_init__(self) -> None:
        minimum_values = {
            'samples': 2,
            'n_levels': 1,
            'grid_points': 2,
            'k_max': 0,
            'baseline_sites': 0,
            'jobs': 1,
        }
        for field_name, minimum in minimum_values.items():
            if getattr(self, field_name) < minimum:
                msg = f'{field_name} must be >= {minimum}, got {getattr(self, field_name)}'
                raise BadRunConfigError(msg)

    def with_overrides(self, **overrides: object) -> RunConfig:
        """Returns a copy with every override that is not None applied."""
        applied = {name: value for name, value in overrides.items() if value is not None}
        return dataclasses.replace(self, **applied)  # type: ignore[arg-type]

    def get_protocol(self) -> DriveProtocol:
        """The drive of a config whose protocol axes hold one value each."""
        axes = {'eta': self.etas, 'tau': self.taus, 'omega_c': self.omega_cs, 'delta': self.deltas}
        for key, axis in axes.items():
            if len(axis) != 1:
                msg = f'A single protocol needs exactly one {key}, got {axis}'
                raise BadRunConfigError(msg)
        return DriveProtocol(
            eta=self.etas[0],
            tau=self.taus[0],
            omega_c=self.omega_cs[0],
            delta=self.deltas[0],
            floor_mode=self.floor_mode,
        )

    def with_protocol(self, protocol: DriveProtocol) -> RunConfig:
        return dataclasses.replace(
            self,
            floor_mode=protocol.floor_mode,
            etas=(protocol.eta,),
            taus=(protocol.tau,),
            omega_cs=(protocol.omega_c,),
            deltas=(protocol.delta,),
        )


def parse_float(value: str) -> float:
    return float(value)


def parse_int(value: str) -> int:
    return int(value)


def parse_float_list(value: str) -> tuple[float, ...]:
    return tuple(float(item) for item in value.split(',') if item.strip() != '')


def parse_int_list(value: str) -> tuple[int, ...]:
    return tuple(int(item) for item in value.split(',') if item.strip() != '')


# Accepted under [protocol] and [sweep], but not in both
PROTOCOL_AXIS_KEYS: dict[str, tuple[str, Callable[[str], object]]] = {
    'eta': ('etas', parse_float_list),
    'tau': ('taus', parse_float_list),
    'omega_c': ('omega_cs', parse_float_list),
    'delta': ('deltas', parse_float_list),
}

# section -> key -> (RunConfig field, parser)
CONFIG_KEYS: dict[str, dict[str, tuple[str, Callable[[str], object]]]] = {
    'protocol': {
        'floor_mode': ('floor_mode', FloorMode.from_config_value),
        **PROTOCOL_AXIS_KEYS,
    },
    'solver': {
        'rel_tol': ('rel_tol', parse_float),
        'abs_tol': ('abs_tol', parse_float),
        'max_step': ('max_step', parse_float),
        'output_stride': ('output_stride', parse_int),
    },
    'sweep': {
        **PROTOCOL_AXIS_KEYS,
        'n_sites': ('n_sites', parse_int_list),
        'n_over_tau': ('n_over_taus', parse_float_list),
        'jobs': ('jobs', parse_int),
        'out': ('out', Path),
    },
    'lmg': {
        'samples': ('samples', parse_int),
        'n_levels': ('n_levels', parse_int),
        'omega_c_coeff': ('omega_c_coeff', parse_float),
    },
    'collapse': {
        'time_exponent': ('time_exponent', parse_float),
        'density_exponent': ('density_exponent', parse_float),
        'grid_points': ('grid_points', parse_int),
    },
    'analytic': {
        'eta': ('analytic_etas', parse_float_list),
        'k_max': ('k_max', parse_int),
        'baseline_sites': ('baseline_sites', parse_int),
    },
}
SOLVER_FIELDS = ('rel_tol', 'abs_tol', 'max_step', 'output_stride')
AXIS_FIELDS = ('etas', 'taus', 'omega_cs', 'deltas', 'n_sites', 'n_over_taus', 'analytic_etas')


class RunConfigBuilder(ABC):
    @abstractmethod
    def build_run_config(self) -> RunConfig:
        raise NotImplementedError

    def parse_config(self, parser: configparser.ConfigParser) -> RunConfig:
        run_config_values: dict[str, object] = {}
        solver_values: dict[str, object] = {}
        field_sections: dict[str, str] = {}
        for section in parser.sections():
            if section not in CONFIG_KEYS:
                msg = f'Unknown config section: [{section}]'
                raise BadRunConfigError(msg)
            for key, value in parser.items(section):
                if key not in CONFIG_KEYS[section]:
                    msg = f'Unknown key in [{section}]: {key}'
                    raise BadRunConfigError(msg)
                field_name, parse_value = CONFIG_KEYS[section][key]
                if field_name in field_sections:
                    msg = f'{key} is set in both [{field_sections[field_name]}] and [{section}]'
                    raise BadRunConfigError(msg)
                field_sections[field_name] = section
                target = solver_values if field_name in SOLVER_FIELDS else run_config_values
                target[field_name] = self.parse_value(parse_value, value, section, key)

        for field_name in AXIS_FIELDS:
            if field_name in run_config_values and len(run_config_values[field_name]) == 0:  # type: ignore[arg-type]
                msg = f'Sweep axis {field_name} must not be empty'
                raise BadRunConfigError(msg)

        try:
            solver_config = dataclasses.replace(SolverConfig(), **solver_values)  # type: ignore[arg-type]
        except BadSolverConfigError as e:
            raise BadRunConfigError(str(e)) from e
        return RunConfig(solver_config=solver_config, **run_config_values)  # type: ignore[arg-type]

    @staticmethod
    def parse_value(parse_value: Callable[[str], object], value: str, section: str, key: str) -> object:
        try:
            parsed = parse_value(value)
        except ValueError as e:
            msg = f'Cannot parse [{section}] {key} = {value}'
            raise BadRunConfigError(msg) from e
        if isinstance(parsed, float) and math.isnan(parsed):
            msg = f'[{section}] {key} must not be NaN'
            raise BadRunConfigError(msg)
        return parsed


class RunConfigBuilderFromFile(RunConfigBuilder):
    def __init__(self, config_path: Path):
        self.config_path = config_path

    def build_run_config(self) -> RunConfig:
        if not self.config_path.is_file():
            msg = f'Config file not found: {self.config_path}'
            raise BadRunConfigError(msg)
        parser = configparser.ConfigParser()
        try:
            with self.config_path.open(mode='r') as config_file:
                parser.read_file(config_file)
        except configparser.Error as e:
            msg = f'Malformed config file {self.config_path}'
            raise BadRunConfigError(msg) from e
        return self.parse_config(parser)


class RunConfigBuilderFromStringList(RunConfigBuilder):
    def __init__(self, config_lines: list[str]):
        self.config_lines = config_lines

    def build_run_config(self) -> RunConfig:
        parser = configparser.ConfigParser()
        try:
            parser.read_string('\n'.join(self.config_lines))
        except configparser.Error as e:
            msg = 'Malformed config lines'
            raise BadRunConfigError(msg) from e
        return self.parse_config(parser)


def format_config_value(value: object) -> str:
    if isinstance(value, FloorMode):
        return value.name.lower()
    if isinstance(value, tuple):
        return ', '.join(format_config_value(item) for item in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_config_lines(run_config: RunConfig) -> list[str]:
    """
    INI lines that RunConfigBuilderFromStringList turns back into an equal RunConfig. The protocol axes are written
    under [protocol].
    """
    config_lines = []
    for section, keys in CONFIG_KEYS.items():
        config_lines.append(f'[{section}]')
        for key, (field_name, _) in keys.items():
            if section == 'sweep' and key in PROTOCOL_AXIS_KEYS:
                continue
            source = run_config.solver_config if field_name in SOLVER_FIELDS else run_config
            config_lines.append(f'{key} = {format_config_value(getattr(source, field_name))}')
        config_lines.append('')
    return config_lines


def write_run_config(config_path: Path, run_config: RunConfig) -> Path:
    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text('\n'.join(to_config_lines(run_config)))
    return config_path
