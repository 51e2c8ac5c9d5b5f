"""Random simplices for the squared radius audit."""

from __future__ import annotations

import logging
from itertools import chain, combinations
from math import comb
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from jlkdist._errors import ContractViolationError

if TYPE_CHECKING:
    from jlkdist._geometry import WeightedCloud

_logger = logging.getLogger(__name__)


class SimplexSample(NamedTuple):
    """Vertex subsets drawn by :func:`sample_simplices_for_radius_check`."""

    subsets: list[tuple[int, ...]]
    #: True when every subset was returned instead of a random sample.
    exhaustive: bool


def sample_simplices_for_radius_check(
    B: WeightedCloud, count: int, max_card: int, seed: int
) -> SimplexSample:
    """Draw vertex subsets of a weighted cloud.

    Each subset has a cardinality drawn uniformly in ``[2, max_card]``, then
    distinct vertices drawn uniformly.

    Parameters
    ----------
    B : WeightedCloud
        The cloud the subsets index into.
    count : int
        Number of subsets.
    max_card : int
        Largest cardinality, at least 2.
    seed : int
        Seed of :func:`numpy.random.default_rng`.

    Returns
    -------
    sample : SimplexSample
        Sorted vertex tuples. If ``count`` is at least the number of subsets with
        2 to ``max_card`` vertices, all of them are returned in order of
        cardinality then lexicographically, and the sample is flagged
        exhaustive.
    """
    if max_card < 2:
        raise ContractViolationError(f"max_card must be at least 2, got {max_card!r}.")
    if count < 0:
        raise ContractViolationError(f"count must be non-negative, got {count!r}.")
    size = len(B)
    top = min(max_card, size)
    available = sum(comb(size, card) for card in range(2, top + 1))
    if count >= available:
        if count > available:
            _logger.warning(
                "Requested %i simplices but only %i exist, using all of them.",
                count,
                available,
            )
        subsets = list(
            chain.from_iterable(
                combinations(range(size), card) for card in range(2, top + 1)
            )
        )
        return SimplexSample(subsets, exhaustive=True)
    rng = np.random.default_rng(seed)
    cards = rng.integers(2, top + 1, size=count)
    subsets = [
        tuple(sorted(int(v) for v in rng.choice(size, size=int(card), replace=False)))
        for card in cards
    ]
    return SimplexSample(subsets, exhaustive=False)
