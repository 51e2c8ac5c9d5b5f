"""Bottleneck distance between persistence diagrams."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Literal

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from jlkdist._errors import ContractViolationError

if TYPE_CHECKING:
    from collections.abc import Iterator

    from numpy.typing import NDArray

    from jlkdist._persistence._diagram import PersistenceDiagram

_logger = logging.getLogger(__name__)

Scale = Literal["linear", "log"]
#: Matched indices into ``A.pairs`` and ``B.pairs``, None for the diagonal.
Matching = list[tuple[int | None, int | None]]


def bottleneck(
    A: PersistenceDiagram, B: PersistenceDiagram, scale: Scale = "linear"
) -> float:
    """Bottleneck distance between two diagrams of the same degree.

    Parameters
    ----------
    A, B : PersistenceDiagram
        The diagrams.
    scale : ``'linear'`` | ``'log'``
        With ``'log'``, coordinates are replaced by their logarithm first. A
        class born at 0 can then only be matched to another class born at 0.

    Returns
    -------
    distance : float
        The bottleneck distance, ``inf`` when no matching has a finite cost:
        different numbers of essential classes, or unmatched classes born at 0
        in logarithmic scale.
    """
    return bottleneck_matching(A, B, scale)[0]


def bottleneck_matching(
    A: PersistenceDiagram, B: PersistenceDiagram, scale: Scale = "linear"
) -> tuple[float, Matching]:
    """Bottleneck distance together with an optimal matching.

    Essential classes are matched to essential classes by sorted births. Finite
    classes are matched by the smallest threshold admitting a perfect matching
    of the diagrams augmented with their diagonal projections, found by binary
    search over the candidate costs.

    Returns
    -------
    distance : float
        See :func:`bottleneck`.
    matching : list of (int | None, int | None)
        Pairs of indices into ``A.pairs`` and ``B.pairs``; ``None`` stands for
        the diagonal. Empty when the distance is infinite.
    """
    if A.dimension != B.dimension:
        raise ContractViolationError(
            f"Can not compare diagrams of degrees {A.dimension} and {B.dimension}."
        )
    if scale not in ("linear", "log"):
        raise ContractViolationError(f"Unknown scale {scale!r}.")
    a_births, a_deaths = _coordinates(A, scale)
    b_births, b_deaths = _coordinates(B, scale)
    a_essential = np.flatnonzero(np.isnan(a_deaths))
    b_essential = np.flatnonzero(np.isnan(b_deaths))
    distance = 0.0
    matching: Matching = []
    # classes born at 0 have birth -inf in log scale; they form their own class
    for a_group, b_group, key in _groups(a_births, a_deaths, b_births, b_deaths):
        if a_group.size != b_group.size:
            _logger.debug("Unmatchable group: %i vs %i.", a_group.size, b_group.size)
            return np.inf, []
        a_sorted = a_group[np.argsort(key[0][a_group], kind="stable")]
        b_sorted = b_group[np.argsort(key[1][b_group], kind="stable")]
        if a_sorted.size:
            distance = max(
                distance,
                float(np.max(np.abs(key[0][a_sorted] - key[1][b_sorted]))),
            )
        matching.extend(
            zip(a_sorted.tolist(), b_sorted.tolist(), strict=True)
        )
    a_free = _regular(a_births, a_deaths)
    b_free = _regular(b_births, b_deaths)
    cost, free_matching = _finite_bottleneck(
        a_births[a_free], a_deaths[a_free], b_births[b_free], b_deaths[b_free]
    )
    distance = max(distance, cost)
    for i, j in free_matching:
        matching.append(
            (
                None if i is None else int(a_free[i]),
                None if j is None else int(b_free[j]),
            )
        )
    _logger.debug(
        "Bottleneck %.6g over %i essential and %i finite classes.",
        distance,
        a_essential.size + b_essential.size,
        a_free.size + b_free.size,
    )
    return distance, matching


def _coordinates(
    diagram: PersistenceDiagram, scale: Scale
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Births and deaths in the requested scale, NaN marking essential deaths."""
    births = np.array([p.birth for p in diagram.pairs], dtype=np.float64)
    deaths = np.array(
        [np.nan if p.death is None else p.death for p in diagram.pairs],
        dtype=np.float64,
    )
    if scale == "linear":
        return births, deaths
    if np.any(births < 0):
        raise ContractViolationError("Logarithmic scale needs non-negative births.")
    with np.errstate(divide="ignore"):
        return np.log(births), np.log(deaths)


def _groups(
    a_births: NDArray, a_deaths: NDArray, b_births: NDArray, b_deaths: NDArray
) -> Iterator[tuple[NDArray, NDArray, tuple[NDArray, NDArray]]]:
    """Groups matched one-dimensionally: the value compared is the key."""
    a_ess, b_ess = np.isnan(a_deaths), np.isnan(b_deaths)
    a_zero, b_zero = np.isneginf(a_births), np.isneginf(b_births)
    # essential classes compare by birth, born at 0 they all coincide
    yield (
        np.flatnonzero(a_ess & ~a_zero),
        np.flatnonzero(b_ess & ~b_zero),
        (a_births, b_births),
    )
    yield (
        np.flatnonzero(a_ess & a_zero),
        np.flatnonzero(b_ess & b_zero),
        (np.zeros_like(a_births), np.zeros_like(b_births)),
    )
    # finite classes born at 0 compare by death
    yield (
        np.flatnonzero(~a_ess & a_zero),
        np.flatnonzero(~b_ess & b_zero),
        (a_deaths, b_deaths),
    )


def _regular(births: NDArray, deaths: NDArray) -> NDArray[np.intp]:
    return np.flatnonzero(~np.isnan(deaths) & ~np.isneginf(births))


def _finite_bottleneck(
    a_births: NDArray, a_deaths: NDArray, b_births: NDArray, b_deaths: NDArray
) -> tuple[float, Matching]:
    m, n = a_births.size, b_births.size
    if m == 0 and n == 0:
        return 0.0, []
    pair_cost = np.maximum(
        np.abs(a_births[:, None] - b_births[None, :]),
        np.abs(a_deaths[:, None] - b_deaths[None, :]),
    )
    a_diag = (a_deaths - a_births) / 2.0
    b_diag = (b_deaths - b_births) / 2.0
    candidates = np.unique(np.concatenate([pair_cost.ravel(), a_diag, b_diag]))
    lo, hi = 0, candidates.size - 1
    best = _match(pair_cost, a_diag, b_diag, candidates[hi])
    while lo < hi:
        mid = (lo + hi) // 2
        found = _match(pair_cost, a_diag, b_diag, candidates[mid])
        if found is None:
            lo = mid + 1
        else:
            hi = mid
            best = found
    return float(candidates[lo]), best


def _match(
    pair_cost: NDArray, a_diag: NDArray, b_diag: NDArray, threshold: float
) -> Matching | None:
    """Perfect matching of the augmented diagrams below ``threshold``, if any.

    Rows are the ``m`` points of A then ``n`` diagonal slots for B, columns the
    ``n`` points of B then ``m`` diagonal slots for A. Two diagonal slots always
    match at cost 0.
    """
    m, n = pair_cost.shape
    adjacency = np.zeros((m + n, n + m), dtype=bool)
    adjacency[:m, :n] = pair_cost <= threshold
    adjacency[np.arange(m), n + np.arange(m)] = a_diag <= threshold
    adjacency[m + np.arange(n), np.arange(n)] = b_diag <= threshold
    adjacency[m:, n:] = True
    assignment = maximum_bipartite_matching(
        csr_matrix(adjacency.astype(np.int8)), perm_type="column"
    )
    if np.any(assignment < 0):
        return None
    matching: Matching = []
    for row, col in enumerate(assignment.tolist()):
        if row < m:
            matching.append((row, col if col < n else None))
        elif col < n:
            matching.append((None, col))
    return matching
