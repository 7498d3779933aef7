from pathlib import Path

from ..dataset import read_dataset

PLOT_STYLE = 'with lines'


def format_group_value(value: float) -> str:
    return str(int(value)) if value.is_integer() else repr(value)


def write_gnuplot_script(
    csv_path: Path, x_column: str, y_column: str, group_column: str | None = None, script_path: Path | None = None
) -> Path:
    """Writes a gnuplot script plotting y against x from the CSV, one line per value of group_column."""
    dataset = read_dataset(csv_path)
    dataset.get_column_index(x_column)
    dataset.get_column_index(y_column)
    if script_path is None:
        script_path = csv_path.with_suffix('.gp')

    lines = [
        "set datafile separator ','",
        f"set xlabel '{x_column}'",
        f"set ylabel '{y_column}'",
        'set key outside',
    ]
    if group_column is None:
        lines.append(f"plot '{csv_path.name}' using '{x_column}':'{y_column}' {PLOT_STYLE} notitle")
    else:
        group_values = list(dict.fromkeys(dataset.get_column(group_column)))
        plot_commands = [
            f"'{csv_path.name}' using '{x_column}':(column('{group_column}') == {format_group_value(value)} ? "
            f"column('{y_column}') : 1/0) {PLOT_STYLE} title '{group_column}={format_group_value(value)}'"
            for value in group_values
        ]
        lines.append('plot ' + ', \\\n     '.join(plot_commands))

    script_path.write_text('\n'.join(lines) + '\n')
    return script_path
