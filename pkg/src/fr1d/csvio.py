"""CSV emission and parsing for run results.

Values are written in scientific notation with 17 significant digits so
that parsing an emitted file reproduces the in-memory doubles bit for
bit.
"""
from __future__ import annotations

from .driver import DiffSeries, ErrorSeries
from .errors import DataError

ERROR_HEADER = "time,l2_error,linf_error"
DIFF_HEADER = "time,linf_diff"

_FMT = "{:.17e}"


def write_error_csv(path, series: ErrorSeries) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(ERROR_HEADER + "\n")
        for t, l2, linf in zip(series.times, series.l2, series.linf):
            f.write(",".join(_FMT.format(v) for v in (t, l2, linf)) + "\n")


def write_diff_csv(path, series: DiffSeries) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(DIFF_HEADER + "\n")
        for t, d in zip(series.times, series.linf_diff):
            f.write(",".join(_FMT.format(v) for v in (t, d)) + "\n")


def _read_rows(path, header: str, n_cols: int):
    with open(path, "r", encoding="ascii") as f:
        first = f.readline().rstrip("\n")
        if first != header:
            raise DataError(f"{path}: expected header {header!r}, got {first!r}")
        rows = []
        for line_no, line in enumerate(f, start=2):
            parts = line.rstrip("\n").split(",")
            if len(parts) != n_cols:
                raise DataError(f"{path}:{line_no}: expected {n_cols} columns")
            try:
                rows.append([float(p) for p in parts])
            except ValueError:
                raise DataError(f"{path}:{line_no}: non-numeric value") from None
    return rows


def read_error_csv(path) -> ErrorSeries:
    series = ErrorSeries()
    for t, l2, linf in _read_rows(path, ERROR_HEADER, 3):
        series.append(t, l2, linf)
    return series


def read_diff_csv(path) -> DiffSeries:
    series = DiffSeries()
    for t, d in _read_rows(path, DIFF_HEADER, 2):
        series.append(t, d)
    return series
