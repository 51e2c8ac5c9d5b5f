"""Unit tests for the boundary matrix reduction and the Betti oracle."""

from __future__ import annotations

import math

import numpy as np
import pytest

from jlkdist import (
    ContractViolationError,
    FilteredComplex,
    Simplex,
    WeightedCloud,
    betti_oracle,
    compute_persistence,
    weighted_cech,
)
from tests.assets.clouds import random_complex


@pytest.fixture
def hollow_square() -> FilteredComplex:
    """A square whose cycle is born at 1 and filled at 2."""
    simplices = [
        *(Simplex((v,), 0.0) for v in range(4)),
        *(Simplex(e, 1.0) for e in [(0, 1), (0, 3), (1, 2), (2, 3)]),
        Simplex((0, 2), 2.0),
        Simplex((0, 1, 2), 2.0),
        Simplex((0, 2, 3), 2.0),
    ]
    return FilteredComplex(4, tuple(simplices), 2, 2.0)


class TestComputePersistence:
    """Tests for compute_persistence."""

    def test_two_points(self) -> None:
        """Test that two points at distance 2 merge at radius 1."""
        cloud = WeightedCloud([[0.0, 0.0], [2.0, 0.0]], [0.0, 0.0])
        (h0,) = compute_persistence(weighted_cech(cloud, 1, 5.0), 0)

        assert h0.to_list() == [[0.0, 1.0], [0.0, "inf"]]

    def test_hollow_square(self, hollow_square: FilteredComplex) -> None:
        """Test the pairs of a hand-built filtration."""
        h0, h1 = compute_persistence(hollow_square, 1)

        assert h0.to_list() == [[0.0, 1.0], [0.0, 1.0], [0.0, 1.0], [0.0, "inf"]]
        assert h1.to_list() == [[1.0, 2.0]]
        assert h1.n_zero_length == 1

    def test_top_degree_is_essential(self) -> None:
        """Test that cycles of the top dimension never die."""
        simplices = [
            *(Simplex((v,), 0.0) for v in range(3)),
            *(Simplex(e, 1.0) for e in [(0, 1), (0, 2), (1, 2)]),
        ]
        complex_ = FilteredComplex(3, tuple(simplices), 1, 1.0)
        _, h1 = compute_persistence(complex_, 1)

        assert h1.to_list() == [[1.0, "inf"]]

    def test_unit_square(self, unweighted_square: WeightedCloud) -> None:
        """Test the square cycle of the Čech filtration of the unit square."""
        _, h1 = compute_persistence(weighted_cech(unweighted_square, 2, 1.0), 1)

        assert h1.to_list() == [[0.5, math.sqrt(0.5)]]
        assert h1.n_zero_length == 2

    def test_matches_oracle(self, rng: np.random.Generator) -> None:
        """Test that alive classes match Betti numbers on random filtrations."""
        for _ in range(5):
            complex_ = random_complex(rng, 9, 3, 0.7)
            diagrams = compute_persistence(complex_, 3)
            values = np.unique(complex_.values)
            alphas = np.concatenate([values, (values[1:] + values[:-1]) / 2])
            for alpha in alphas:
                for diagram in diagrams:
                    assert diagram.alive_at(alpha) == betti_oracle(
                        complex_, alpha, diagram.dimension
                    )

    def test_ties_in_another_order(self, rng: np.random.Generator) -> None:
        """Test that relabelling vertices, which reorders ties, keeps the diagrams."""
        reordered = 0
        for _ in range(10):
            complex_ = random_complex(rng, 8, 3, 0.7)
            relabel = rng.permutation(8)
            simplices = sorted(
                (
                    Simplex(tuple(sorted(int(relabel[v]) for v in s.vertices)), s.value)
                    for s in complex_
                ),
                key=lambda s: s.sort_key,
            )
            moved = FilteredComplex(
                8, tuple(simplices), complex_.max_dim, complex_.alpha_max
            )
            inverse = np.argsort(relabel)
            original_order = [
                tuple(sorted(int(inverse[v]) for v in s.vertices)) for s in moved
            ]
            reordered += original_order != [s.vertices for s in complex_]

            expected = compute_persistence(complex_, 3)
            diagrams = compute_persistence(moved, 3)
            assert diagrams == expected
            assert [d.n_zero_length for d in diagrams] == [
                d.n_zero_length for d in expected
            ]
        assert reordered > 0

    def test_unsorted_complex(self) -> None:
        """Test that an unsorted complex is rejected."""
        complex_ = FilteredComplex(
            2, (Simplex((0,), 1.0), Simplex((1,), 0.0)), 1, 1.0
        )

        with pytest.raises(ContractViolationError):
            compute_persistence(complex_, 0)

    def test_negative_degree(self, hollow_square: FilteredComplex) -> None:
        """Test that the degree is non-negative."""
        with pytest.raises(ContractViolationError):
            compute_persistence(hollow_square, -1)


class TestBettiOracle:
    """Tests for betti_oracle."""

    def test_hollow_square(self, hollow_square: FilteredComplex) -> None:
        """Test Betti numbers along the square filtration."""
        assert betti_oracle(hollow_square, 0.5, 0) == 4
        assert betti_oracle(hollow_square, 1.0, 0) == 1
        assert betti_oracle(hollow_square, 1.0, 1) == 1
        assert betti_oracle(hollow_square, 2.0, 1) == 0
        assert betti_oracle(hollow_square, 2.0, 2) == 0

    def test_cap(self) -> None:
        """Test that large complexes are rejected."""
        complex_ = FilteredComplex(
            2001, tuple(Simplex((v,), 0.0) for v in range(2001)), 1, 0.0
        )

        with pytest.raises(ContractViolationError, match="2000"):
            betti_oracle(complex_, 0.0, 0)
