"""Pytest configuration and fixtures for jlkdist tests."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest

from jlkdist import PointCloud, WeightedCloud


def pytest_configure(config: pytest.Config) -> None:
    """Configure pytest options."""
    config.addinivalue_line(
        "markers", "slow: end-to-end checks reproducing the quantitative guarantees."
    )


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded random generator, independent of the test order."""
    return np.random.default_rng(20240611)


@pytest.fixture
def square() -> PointCloud:
    """The four corners of the unit square."""
    return PointCloud(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))


@pytest.fixture
def unweighted_square(square: PointCloud) -> WeightedCloud:
    """The unit square with zero weights."""
    return WeightedCloud(square.coords, np.zeros(4))


@pytest.fixture
def write_points(tmp_path: Path) -> Callable[..., Path]:
    """Write points to a text file.

    Returns
    -------
    Callable[..., Path]
        ``write(points, name="points.csv", delimiter=",")`` returning the path.
    """

    def _write(
        points: np.ndarray, name: str = "points.csv", delimiter: str = ","
    ) -> Path:
        path = tmp_path / name
        rows = [delimiter.join(repr(float(x)) for x in row) for row in points]
        path.write_text("\n".join(rows) + "\n", encoding="utf-8")
        return path

    return _write
