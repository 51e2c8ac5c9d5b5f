"""Unit tests for the enumerating and batched exact solvers."""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from jlkdist import (
    ContractViolationError,
    WeightedCloud,
    radius_from_support,
    weighted_meb,
    weighted_meb_batch,
    weighted_meb_exact,
)
from tests.assets.clouds import random_weighted_cloud

_TRIANGLE = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 1.5]])
# circumradius of the acute triangle above, centered at (1, 5/12)
_TRIANGLE_RAD_SQ = 1.0 + (5.0 / 12.0) ** 2


class TestWeightedMebExact:
    """Tests for weighted_meb_exact."""

    def test_square(self, unweighted_square: WeightedCloud) -> None:
        """Test the ball of the unit square."""
        result = weighted_meb_exact(unweighted_square)

        assert result.rad_sq == pytest.approx(0.5)
        np.testing.assert_allclose(result.center, [0.5, 0.5], atol=1e-12)
        assert result.iterations == 15

    def test_dominating_point(self) -> None:
        """Test a ball supported by a single heavy point."""
        cloud = WeightedCloud([[0.0, 0.0], [4.0, 0.0]], [0.0, -100.0])
        result = weighted_meb_exact(cloud)

        assert result.rad_sq == pytest.approx(100.0)
        assert result.support_indices == (1,)

    def test_dual_value(self, rng: np.random.Generator) -> None:
        """Test that the optimal weights attain the squared radius in the dual."""
        cloud = random_weighted_cloud(rng, 6, 2)
        result = weighted_meb_exact(cloud)
        lambdas = np.zeros(len(cloud))
        lambdas[list(result.support_indices)] = result.lambdas

        assert radius_from_support(lambdas, cloud) == pytest.approx(
            result.rad_sq, rel=1e-9, abs=1e-9
        )

    def test_cap(self, rng: np.random.Generator) -> None:
        """Test that large clouds are rejected."""
        with pytest.raises(ContractViolationError, match="at most 12"):
            weighted_meb_exact(random_weighted_cloud(rng, 13, 2))


class TestWeightedMebBatch:
    """Tests for weighted_meb_batch."""

    @pytest.mark.parametrize("card", [1, 2, 3, 4, 6])
    def test_matches_single_solver(
        self, rng: np.random.Generator, card: int
    ) -> None:
        """Test batched radii against the enumerating solver."""
        cloud = random_weighted_cloud(rng, 8, 3, low=-2.0)
        simplices = np.array(list(combinations(range(8), card))[:20])
        radii = weighted_meb_batch(cloud, simplices)

        assert radii.shape == (len(simplices),)
        for simplex, rad_sq in zip(simplices, radii, strict=True):
            sub = WeightedCloud(cloud.coords[simplex], cloud.weights[simplex])
            assert rad_sq == pytest.approx(
                weighted_meb_exact(sub).rad_sq, rel=1e-9, abs=1e-9
            )

    def test_affinely_dependent_points(self) -> None:
        """Test collinear and repeated points."""
        cloud = WeightedCloud(
            [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [2.0, 0.0]], np.zeros(4)
        )
        radii = weighted_meb_batch(cloud, [[0, 1, 2], [1, 2, 3], [0, 2, 3]])

        np.testing.assert_allclose(radii, [1.0, 0.25, 1.0])

    def test_matches_iterative_solver(
        self, rng: np.random.Generator
    ) -> None:
        """Test that batched radii agree with the iterative solver."""
        cloud = random_weighted_cloud(rng, 30, 5, low=-1.0)
        simplices = rng.permuted(np.tile(np.arange(30), (40, 1)), axis=1)[:, :5]
        simplices.sort(axis=1)
        radii = weighted_meb_batch(cloud, simplices)
        for simplex, rad_sq in zip(simplices, radii, strict=True):
            sub = WeightedCloud(cloud.coords[simplex], cloud.weights[simplex])
            assert rad_sq == pytest.approx(
                weighted_meb(sub).rad_sq, rel=1e-6, abs=1e-7
            )

    def test_invalid_simplices(self, unweighted_square: WeightedCloud) -> None:
        """Test the shape and range checks."""
        with pytest.raises(ContractViolationError, match="at most 6"):
            weighted_meb_batch(unweighted_square, np.zeros((1, 7), dtype=int))
        with pytest.raises(ContractViolationError, match="out of range"):
            weighted_meb_batch(unweighted_square, [[0, 4]])
        with pytest.raises(ContractViolationError, match="2-D"):
            weighted_meb_batch(unweighted_square, [0, 1])


class TestRadiusFromSupport:
    """Tests for radius_from_support."""

    def test_lower_bound_for_any_weights(
        self, rng: np.random.Generator
    ) -> None:
        """Test that every convex combination bounds the squared radius below."""
        cloud = random_weighted_cloud(rng, 6, 3)
        rad_sq = weighted_meb_exact(cloud).rad_sq
        for lambdas in rng.dirichlet(np.ones(6), size=50):
            assert radius_from_support(lambdas, cloud) <= rad_sq + 1e-9

    def test_invalid_weights(self, unweighted_square: WeightedCloud) -> None:
        """Test that weights must be convex and sized like the cloud."""
        with pytest.raises(ContractViolationError, match="sum to 1"):
            radius_from_support([0.5, 0.5, 0.5, 0.0], unweighted_square)
        with pytest.raises(ContractViolationError, match="convex weights"):
            radius_from_support([1.0], unweighted_square)


class TestScaleInvariance:
    """Tests that squared radii follow the square of the scale of the cloud."""

    @pytest.mark.parametrize("scale", [1e-5, 1e-3, 1.0, 1e3, 1e4, 1e5])
    def test_acute_triangle(self, scale: float) -> None:
        """Test that all solvers find the circumradius at every scale."""
        cloud = WeightedCloud(_TRIANGLE * scale, np.zeros(3))

        assert weighted_meb_exact(cloud).rad_sq / scale**2 == pytest.approx(
            _TRIANGLE_RAD_SQ, rel=1e-9
        )
        assert weighted_meb_batch(cloud, [[0, 1, 2]])[0] / scale**2 == pytest.approx(
            _TRIANGLE_RAD_SQ, rel=1e-9
        )
        assert weighted_meb(cloud).rad_sq / scale**2 == pytest.approx(
            _TRIANGLE_RAD_SQ, rel=1e-6
        )

    @pytest.mark.parametrize("scale", [1e-3, 1e3, 1e5])
    def test_random_cloud(self, rng: np.random.Generator, scale: float) -> None:
        """Test that scaling points by s and weights by s**2 scales radii by s**2."""
        cloud = random_weighted_cloud(rng, 6, 3, low=-2.0)
        scaled = WeightedCloud(cloud.coords * scale, cloud.weights * scale**2)
        simplices = np.array(list(combinations(range(6), 4)))

        np.testing.assert_allclose(
            weighted_meb_batch(scaled, simplices) / scale**2,
            weighted_meb_batch(cloud, simplices),
            rtol=1e-7,
        )
        assert weighted_meb_exact(scaled).rad_sq / scale**2 == pytest.approx(
            weighted_meb_exact(cloud).rad_sq, rel=1e-7
        )
        assert weighted_meb(scaled).rad_sq / scale**2 == pytest.approx(
            weighted_meb(cloud).rad_sq, rel=1e-6
        )
