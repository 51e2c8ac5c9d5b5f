"""Unit tests for the Monte-Carlo Gaussian width."""

from __future__ import annotations

import math

import numpy as np
import pytest

from jlkdist import ContractViolationError, PointCloud, estimate_gaussian_width
from jlkdist._projection import difference_set


class TestDifferenceSet:
    """Tests for difference_set."""

    def test_two_points(self) -> None:
        """Test that two points give two opposite unit vectors."""
        differences = difference_set(PointCloud([[0.0, 0.0], [3.0, 4.0]]))

        np.testing.assert_allclose(differences.coords, [[-0.6, -0.8], [0.6, 0.8]])

    def test_size_and_norms(self, square: PointCloud) -> None:
        """Test that every ordered pair gives a unit vector."""
        differences = difference_set(square)

        assert len(differences) == 12
        np.testing.assert_allclose(np.linalg.norm(differences.coords, axis=1), 1.0)

    def test_coincident_points(self) -> None:
        """Test that coincident pairs are skipped."""
        differences = difference_set(PointCloud([[0.0], [0.0], [1.0]]))

        assert len(differences) == 4
        with pytest.raises(ContractViolationError, match="coincide"):
            difference_set(PointCloud([[1.0], [1.0]]))

    def test_needs_two_points(self) -> None:
        """Test that a single point has no differences."""
        with pytest.raises(ContractViolationError, match=">= 2 points"):
            difference_set(PointCloud([[1.0]]))


class TestEstimateGaussianWidth:
    """Tests for estimate_gaussian_width."""

    def test_opposite_unit_vectors(self) -> None:
        """Test the width of {e1, -e1}, which is E|g| = sqrt(2/pi)."""
        width = estimate_gaussian_width(
            PointCloud([[1.0, 0.0], [-1.0, 0.0]]), 100_000, seed=5
        )

        assert abs(width.estimate - math.sqrt(2 / math.pi)) <= 3 * width.std_error
        assert width.std_error < 0.01

    def test_single_unit_vector(self) -> None:
        """Test that the width of {e1} is E[g1] = 0."""
        width = estimate_gaussian_width(PointCloud([[1.0, 0.0, 0.0]]), 100_000, seed=5)

        assert abs(width.estimate) <= 3 * width.std_error

    def test_difference_set_of_ten_points(self, rng: np.random.Generator) -> None:
        """Test the width of 90 unit vectors against independent Gaussians."""
        differences = difference_set(PointCloud(rng.normal(size=(10, 3))))
        width = estimate_gaussian_width(differences, 20_000, seed=3)
        # the width of 90 unit vectors is at most E[max of 90 standard normals]
        independent = rng.standard_normal((20_000, 90)).max(axis=1)

        assert len(differences) == 90
        assert width.estimate <= math.sqrt(2 * math.log(90)) + 1
        assert width.estimate <= independent.mean() + 3 * width.std_error

    def test_seed_reproducible(self, square: PointCloud) -> None:
        """Test that the seed fixes the estimate."""
        differences = difference_set(square)

        assert estimate_gaussian_width(
            differences, 500, seed=1
        ) == estimate_gaussian_width(differences, 500, seed=1)

    def test_needs_samples(self, square: PointCloud) -> None:
        """Test that at least 100 samples are drawn."""
        with pytest.raises(ContractViolationError, match="samples"):
            estimate_gaussian_width(square, 99, seed=0)
