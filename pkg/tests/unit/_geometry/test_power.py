"""Unit tests for power distances and barycenters."""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from jlkdist import (
    ContractViolationError,
    WeightedCloud,
    WeightedPoint,
    barycenter,
    power_distance,
    weighted_pair_distance,
)
from jlkdist._geometry import (
    barycenters,
    convex_spread,
    pairwise_spread,
    power_distance_matrix,
    simplex_power_matrices,
    squared_distance,
)


class TestPowerDistance:
    """Tests for power_distance and weighted_pair_distance."""

    def test_power_distance(self) -> None:
        """Test that the weight is subtracted from the squared distance."""
        assert power_distance([0.0, 0.0], WeightedPoint([3.0, 4.0], 5.0)) == 20.0

    def test_power_distance_can_be_negative(self) -> None:
        """Test that points inside the ball have a negative power."""
        assert power_distance([0.0], WeightedPoint([1.0], 4.0)) == -3.0

    def test_pair_distance(self) -> None:
        """Test the power distance between two weighted points."""
        p = WeightedPoint([0.0, 0.0], -1.0)
        q = WeightedPoint([1.0, 0.0], -2.0)

        assert weighted_pair_distance(p, q) == 4.0
        assert weighted_pair_distance(p, p) == 2.0

    def test_dimension_mismatch(self) -> None:
        """Test that points of different dimensions are rejected."""
        with pytest.raises(ContractViolationError):
            power_distance([0.0], WeightedPoint([0.0, 0.0]))
        with pytest.raises(ContractViolationError):
            squared_distance([0.0, 1.0], [0.0])


class TestBarycenter:
    """Tests for barycenter and barycenters."""

    def test_pair(self) -> None:
        """Test the weighted barycenter of two points."""
        point = barycenter([[0.0, 0.0], [2.0, 0.0]])

        np.testing.assert_allclose(point.point, [1.0, 0.0])
        assert point.weight == pytest.approx(-1.0)

    def test_singleton_has_zero_weight(self) -> None:
        """Test that a single point is its own barycenter with weight 0."""
        point = barycenter([[3.0, -1.0]])

        np.testing.assert_array_equal(point.point, [3.0, -1.0])
        assert point.weight == 0.0

    def test_collinear_pairs(self) -> None:
        """Test the barycenters of all pairs of three collinear points."""
        centers, weights = barycenters([[0.0], [1.0], [2.0]], [[0, 1], [0, 2], [1, 2]])

        np.testing.assert_allclose(centers.ravel(), [0.5, 1.0, 1.5])
        np.testing.assert_allclose(weights, [-0.25, -1.0, -0.25])

    def test_pair_identity(self, rng: np.random.Generator) -> None:
        """Test that barycenter power distances average squared distances."""
        for _ in range(10):
            points = rng.normal(size=(6, 3))
            k = 3
            for s1, s2 in combinations(combinations(range(6), k), 2):
                b1, b2 = barycenter(points[list(s1)]), barycenter(points[list(s2)])
                expected = sum(
                    squared_distance(points[i], points[j]) for i in s1 for j in s2
                ) / k**2

                assert weighted_pair_distance(b1, b2) == pytest.approx(
                    expected, rel=1e-9
                )

    def test_right_triangle(self) -> None:
        """Test the barycenter of three points against mean squared distances."""
        points = np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]])
        point = barycenter(points)

        np.testing.assert_allclose(point.point, [2.0 / 3.0, 2.0 / 3.0])
        assert point.weight == pytest.approx(-16.0 / 9.0)
        for x in ([0.0, 0.0], [1.0, -3.0], [5.0, 2.0]):
            expected = ((np.asarray(x) - points) ** 2).sum(axis=1).mean()
            assert power_distance(x, point) == pytest.approx(expected, rel=1e-12)

    def test_power_is_mean_squared_distance(self, rng: np.random.Generator) -> None:
        """Test that the power of x to a barycenter averages its squared distances."""
        for _ in range(500):
            dim, size = int(rng.integers(1, 21)), int(rng.integers(1, 11))
            points = rng.normal(size=(size, dim))
            x = rng.normal(scale=3.0, size=dim)
            expected = ((x - points) ** 2).sum(axis=1).mean()

            assert power_distance(x, barycenter(points)) == pytest.approx(
                expected, rel=1e-9
            )

    def test_rejects_empty_subset(self) -> None:
        """Test that a barycenter needs a point."""
        with pytest.raises(ContractViolationError):
            barycenters([[0.0]], np.empty((1, 0), dtype=int))


class TestSpread:
    """Tests for convex_spread and pairwise_spread."""

    def test_spreads_agree(self, rng: np.random.Generator) -> None:
        """Test the two sides of the squared radius identity."""
        for size in rng.integers(1, 11, size=300):
            points = rng.normal(size=(int(size), int(rng.integers(1, 21))))
            lambdas = rng.dirichlet(np.ones(size))

            assert convex_spread(points, lambdas) == pytest.approx(
                pairwise_spread(points, lambdas), rel=1e-9, abs=1e-12
            )

    def test_variance_identity(self, rng: np.random.Generator) -> None:
        """Test that weighted squared distances to x split at the combination."""
        for _ in range(1000):
            dim, size = int(rng.integers(1, 21)), int(rng.integers(1, 11))
            points = rng.normal(size=(size, dim))
            lambdas = rng.dirichlet(np.ones(size))
            x = rng.normal(scale=3.0, size=dim)
            total = lambdas @ ((x - points) ** 2).sum(axis=1)
            split = squared_distance(x, lambdas @ points) + convex_spread(
                points, lambdas
            )

            assert total == pytest.approx(split, rel=1e-9, abs=1e-12)

    def test_rejects_non_convex_weights(self) -> None:
        """Test that weights must be non-negative and sum to 1."""
        with pytest.raises(ContractViolationError, match="sum to 1"):
            convex_spread([[0.0], [1.0]], [0.7, 0.7])
        with pytest.raises(ContractViolationError):
            pairwise_spread([[0.0], [1.0]], [1.5, -0.5])


class TestPowerMatrices:
    """Tests for power_distance_matrix and simplex_power_matrices."""

    def test_matrix_entries(self) -> None:
        """Test pairwise power distances and the diagonal."""
        cloud = WeightedCloud([[0.0, 0.0], [1.0, 0.0]], [-1.0, -2.0])
        matrix = power_distance_matrix(cloud)

        np.testing.assert_allclose(matrix, [[2.0, 4.0], [4.0, 4.0]])

    def test_simplex_matrices_are_submatrices(self, rng: np.random.Generator) -> None:
        """Test that simplex matrices are blocks of the full matrix."""
        cloud = WeightedCloud(rng.normal(size=(7, 3)), rng.uniform(-2, 0, size=7))
        full = power_distance_matrix(cloud)
        simplices = np.array([[0, 2, 5], [1, 3, 6]])
        blocks = simplex_power_matrices(cloud, simplices)

        assert blocks.shape == (2, 3, 3)
        for block, simplex in zip(blocks, simplices, strict=True):
            np.testing.assert_allclose(block, full[np.ix_(simplex, simplex)])
