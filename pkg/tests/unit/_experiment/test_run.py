"""Unit tests for the projection experiment."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np
import pytest

from jlkdist import (
    BudgetExceededError,
    ConfigError,
    ExperimentReport,
    WeightedCloud,
    run,
)
from jlkdist._experiment import make_config, rad_sq_of_subsets

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path

    from jlkdist import ExperimentConfig


@pytest.fixture
def points_file(
    write_points: Callable[..., Path], rng: np.random.Generator
) -> Path:
    """Seven Gaussian points in R^6."""
    return write_points(rng.standard_normal((7, 6)))


def _config(path: Path, **values: object) -> ExperimentConfig:
    defaults = {"alpha_max": 3.0, "probes": 50, "radius_checks": 30}
    return make_config(input_path=path, **(defaults | values))


class TestRun:
    def test_identity(self, points_file: Path) -> None:
        """Test that the identity map passes every check with no distortion."""
        result = run(_config(points_file, projector_kind="identity"))
        report = result.report

        assert report.n_points == 7
        assert report.projector_kind == "identity"
        assert report.dimension.rule == "identity"
        assert report.dimension.target_dim == 6
        assert not report.dimension.clamped
        assert report.distortion.max_expansion == pytest.approx(1.0)
        assert report.distortion.max_contraction == pytest.approx(1.0)
        assert report.distortion.preserves_squared_distances
        for check in (
            report.pointwise_kdist,
            report.radius_checks,
            report.approximation_sandwich,
        ):
            assert check.passes
        assert report.pointwise_kdist.count == 7
        assert report.pointwise_kdist.min_ratio == pytest.approx(1.0)
        assert report.radius_checks.cloud == "barycentric"
        assert report.radius_checks.max_ratio == pytest.approx(1.0)
        assert report.approximation_sandwich.probes == 50
        assert report.complex_before == report.complex_after
        assert report.complex_before.n_vertices == 21
        assert result.diagrams_before == result.diagrams_after
        assert report.diagrams_before == report.diagrams_after
        assert report.interleaving.passes
        assert report.interleaving.log_bottleneck == 0.0
        assert report.implications.premise
        assert report.implications.consistent
        assert set(report.timings) >= {"load", "filtration", "persistence"}

    def test_explicit_dimension(self, points_file: Path) -> None:
        """Test a random projection to an explicit dimension."""
        report = run(_config(points_file, target_dim=4, seed=3)).report

        assert report.dimension.rule == "explicit"
        assert report.dimension.target_dim == 4
        assert report.projector_kind == "gaussian"
        assert report.distortion.n_pairs == 21
        assert report.implications.consistent
        assert list(report.diagrams_after) == ["0", "1"]

    def test_invalid_dimension(self, points_file: Path) -> None:
        """Test the target dimensions that do not fit the input."""
        with pytest.raises(ConfigError, match="exceeds the ambient dimension"):
            run(_config(points_file, target_dim=7))
        with pytest.raises(ConfigError, match="target_dim=6"):
            run(_config(points_file, target_dim=3, projector_kind="identity"))

    def test_auto_jl_clamped(
        self, points_file: Path, caplog: pytest.LogCaptureFixture
    ) -> None:
        """Test that a dimension rule above the ambient dimension is clamped."""
        with caplog.at_level(logging.WARNING):
            report = run(_config(points_file, target_dim="auto-jl")).report

        assert report.dimension.rule == "auto-jl"
        assert report.dimension.clamped
        assert report.dimension.target_dim == 6
        assert report.dimension.requested_dim > 6
        assert "exceeds the ambient dimension" in caplog.text

    def test_auto_gw(self, points_file: Path) -> None:
        """Test that the Gaussian width rule reports its estimate."""
        report = run(
            _config(points_file, target_dim="auto-gw", width_samples=500)
        ).report

        assert report.dimension.rule == "auto-gw"
        assert report.dimension.gaussian_width > 0
        assert report.dimension.gaussian_width_std_error >= 0
        assert 1 <= report.dimension.target_dim <= 6

    @pytest.mark.parametrize("filtration", ["approx-cech", "rips"])
    def test_approximate_filtrations(self, points_file: Path, filtration: str) -> None:
        """Test that the approximate filtrations have one vertex per point."""
        report = run(_config(points_file, filtration=filtration, seed=1)).report

        assert report.filtration == filtration
        assert report.radius_checks.cloud == "approx"
        assert report.complex_before.n_vertices == 7

    def test_deterministic(self, points_file: Path) -> None:
        """Test that everything but the timings only depends on the config."""
        config = _config(points_file, target_dim=5, seed=11)
        first = run(config).report.model_dump(exclude={"timings"})

        assert first == run(config).report.model_dump(exclude={"timings"})

    def test_budget(self, points_file: Path) -> None:
        """Test that the barycentric cloud respects the budget."""
        with pytest.raises(BudgetExceededError, match=r"C\(7, 2\) = 21"):
            run(_config(points_file, budget=10))

    def test_report_json(self, points_file: Path) -> None:
        """Test that the report survives a JSON round trip."""
        report = run(_config(points_file, target_dim=3)).report
        payload = report.model_dump_json()

        assert ExperimentReport.model_validate_json(payload) == report
        assert report.schema_version == 1


def test_rad_sq_of_subsets(unweighted_square: WeightedCloud) -> None:
    """Test squared radii of subsets of mixed cardinalities."""
    subsets = [(0, 1), (0, 1, 2), (0, 2), (0, 1, 2, 3)]

    rad_sq = rad_sq_of_subsets(unweighted_square, subsets)
    assert rad_sq == pytest.approx([0.25, 0.5, 0.5, 0.5])
