from __future__ import annotations

import csv
import json
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

logger = logging.getLogger(__name__)


class BadDatasetError(ValueError):
    pass


class Dataset:
    """A CSV table with a fixed column order. Values are kept as floats."""

    def __init__(self, columns: Sequence[str], rows: list[tuple[float, ...]]):
        self.columns = tuple(columns)
        self.rows = rows
        self.ensure_consistent_row_lengths()

    def ensure_consistent_row_lengths(self) -> None:
        for row in self.rows:
            if len(row) != len(self.columns):
                msg = f'Row {row} does not match columns {self.columns}'
                raise BadDatasetError(msg)

    def get_column(self, column: str) -> list[float]:
        index = self.get_column_index(column)
        return [row[index] for row in self.rows]

    def get_column_index(self, column: str) -> int:
        if column not in self.columns:
            msg = f'Unknown column {column}, expected one of {self.columns}'
            raise BadDatasetError(msg)
        return self.columns.index(column)

    def group_by(self, columns: Sequence[str]) -> dict[tuple[float, ...], Dataset]:
        """Splits the rows by the values of the given columns, keeping first-seen group order."""
        indices = [self.get_column_index(column) for column in columns]
        groups: dict[tuple[float, ...], list[tuple[float, ...]]] = {}
        for row in self.rows:
            groups.setdefault(tuple(row[index] for index in indices), []).append(row)
        return {key: Dataset(self.columns, rows) for key, rows in groups.items()}

    def extend(self, other: Dataset) -> None:
        if other.columns != self.columns:
            msg = f'Cannot combine columns {self.columns} with {other.columns}'
            raise BadDatasetError(msg)
        self.rows.extend(other.rows)

    def __len__(self) -> int:
        return len(self.rows)


def write_csv(path: Path, columns: Sequence[str], rows: Iterable[Sequence[object]]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open(mode='w', newline='') as csv_file:
        csv_writer = csv.writer(csv_file)
        csv_writer.writerow(columns)
        number_of_rows = 0
        for row in rows:
            csv_writer.writerow(row)
            number_of_rows += 1
    logger.info('Wrote %d rows to %s', number_of_rows, path)
    return path


def get_sibling_path(path: Path, suffix: str) -> Path:
    return path.with_name(f'{path.stem}_{suffix}{path.suffix}')


def write_dataset(path: Path, dataset: Dataset) -> Path:
    return write_csv(path, dataset.columns, dataset.rows)


def read_dataset(path: Path) -> Dataset:
    if not path.is_file():
        msg = f'Dataset not found: {path}'
        raise BadDatasetError(msg)
    with path.open(mode='r', newline='') as csv_file:
        csv_reader = csv.reader(csv_file)
        try:
            columns = next(csv_reader)
        except StopIteration as e:
            msg = f'Empty dataset: {path}'
            raise BadDatasetError(msg) from e
        try:
            rows = [tuple(float(value) for value in row) for row in csv_reader if len(row) > 0]
        except ValueError as e:
            msg = f'Non-numeric value in {path}'
            raise BadDatasetError(msg) from e
    return Dataset(columns, rows)


def write_json_lines(path: Path, records: Iterable[dict[str, object]]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [json.dumps(record, sort_keys=True) for record in records]
    path.write_text(''.join(f'{line}\n' for line in lines))
    return path
