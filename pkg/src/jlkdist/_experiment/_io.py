"""Reading point clouds from text files."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal

import numpy as np

from jlkdist._errors import PointCloudParseError
from jlkdist._geometry import PointCloud

_logger = logging.getLogger(__name__)


def load_points(
    path: Path | str,
    format: Literal["auto", "csv", "whitespace"] = "auto",  # noqa: A002
) -> PointCloud:
    """Read one point per row from a numeric text file.

    Parameters
    ----------
    path : Path | str
        The file to read.
    format : ``'auto'`` | ``'csv'`` | ``'whitespace'``
        Field separator. ``'auto'`` splits a row on commas if it has one, on
        whitespace otherwise.

    Returns
    -------
    cloud : PointCloud
        The points, in file order. Blank lines and ``#`` comments are skipped.

    Raises
    ------
    PointCloudParseError
        If the file can not be read, a field is not a finite number, rows have
        different lengths, or no point is found. The error names the line.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise PointCloudParseError(f"can not read the file ({exc})", path)
    rows: list[list[float]] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = _split(line, format)
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise PointCloudParseError(
                f"expected {width} columns, got {len(fields)}", path, lineno
            )
        rows.append([_parse_field(field, path, lineno) for field in fields])
    if not rows:
        raise PointCloudParseError("no points found, the cloud is empty", path)
    _logger.debug("Read %i points of dimension %i from %s.", len(rows), width, path)
    return PointCloud(np.array(rows, dtype=np.float64))


def _split(line: str, format: str) -> list[str]:  # noqa: A002
    if format == "csv" or (format == "auto" and "," in line):
        return [field.strip() for field in line.split(",")]
    return line.split()


def _parse_field(field: str, path: Path, lineno: int) -> float:
    try:
        value = float(field)
    except ValueError:
        raise PointCloudParseError(f"non-numeric field {field!r}", path, lineno)
    if not np.isfinite(value):
        raise PointCloudParseError(f"non-finite field {field!r}", path, lineno)
    return value
