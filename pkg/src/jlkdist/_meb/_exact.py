"""Exact weighted minimum enclosing balls by support enumeration."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import TYPE_CHECKING

import numpy as np

from jlkdist._config import BATCH_MAX_CARDINALITY, EXACT_MEB_CAP, SUPPORT_THRESHOLD
from jlkdist._errors import ContractViolationError
from jlkdist._geometry import power_distance_matrix, simplex_power_matrices
from jlkdist._meb._dual import power_profile, problem_scale, solve_stationarity
from jlkdist._meb._result import MebResult

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from jlkdist._geometry import WeightedCloud

_logger = logging.getLogger(__name__)

_CHUNK = 8192
_FULL_MATRIX_MAX = 2048


def weighted_meb_exact(X: WeightedCloud) -> MebResult:
    """Weighted minimum enclosing ball by enumeration of the candidate supports.

    Every subset of ``X`` is tried as the support of the ball: the center is the
    affine combination of the subset equalising its power distances, and the
    candidate is kept when its coefficients are positive and every other point
    is no farther. Exponential in ``len(X)``, meant as a reference for small
    clouds.

    Parameters
    ----------
    X : WeightedCloud
        Weighted cloud with at most 12 points.

    Returns
    -------
    result : MebResult
        The exact ball. ``iterations`` holds the number of supports tried.
    """
    size = len(X)
    if size == 0:
        raise ContractViolationError("Can not enclose an empty weighted cloud.")
    if size > EXACT_MEB_CAP:
        raise ContractViolationError(
            f"The exact solver enumerates supports and accepts at most "
            f"{EXACT_MEB_CAP} points, got {size}."
        )
    matrix = power_distance_matrix(X)
    scale = problem_scale(matrix)
    best: tuple[float, NDArray[np.float64]] | None = None
    fallback: tuple[float, NDArray[np.float64]] | None = None
    tried = 0
    for card in range(1, size + 1):
        for subset in combinations(range(size), card):
            tried += 1
            index = np.array(subset)
            solved, solvable = solve_stationarity(matrix[np.ix_(index, index)][None])
            if not solvable[0]:
                continue
            lambdas = np.zeros(size)
            lambdas[index] = solved[0]
            powers, dual = power_profile(matrix, lambdas)
            top = float(powers.max())
            if fallback is None or top < fallback[0]:
                fallback = (top, lambdas)
            if np.any(solved[0] <= SUPPORT_THRESHOLD):
                continue
            if top - dual > 1e-9 * max(scale, abs(dual)):
                continue
            if best is None or top < best[0]:
                best = (top, lambdas)
    if best is None:
        # affine candidates always bound the radius from above
        _logger.debug("No dominating support found, using the smallest candidate.")
        best = fallback
    rad_sq, lambdas = best
    powers, dual = power_profile(matrix, lambdas)
    lambdas = np.clip(lambdas, 0.0, None)
    return MebResult(
        center=lambdas @ X.coords,
        rad_sq=rad_sq,
        support=tuple(
            (int(index), float(lambdas[index])) for index in np.flatnonzero(lambdas)
        ),
        iterations=tried,
        residual=max(rad_sq - dual, 0.0),
    )


def weighted_meb_batch(cloud: WeightedCloud, simplices: ArrayLike) -> NDArray:
    """Exact squared radii of many small sub-clouds at once.

    The squared radius of a sub-cloud is the smallest value, over its affinely
    independent subsets, of the largest power distance from the point equalising
    the subset. The enumeration is vectorised over the simplices.

    Parameters
    ----------
    cloud : WeightedCloud
        The weighted cloud the simplices index into.
    simplices : array-like of int, shape (N, m)
        Vertex indices of ``N`` sub-clouds of the same cardinality ``m``, with
        ``m`` at most 6.

    Returns
    -------
    rad_sq : array of shape (N,)
        Squared radii of the weighted minimum enclosing balls.
    """
    simplices = np.asarray(simplices, dtype=np.intp)
    if simplices.ndim != 2 or simplices.shape[1] == 0:
        raise ContractViolationError(
            f"Expected a 2-D array of vertex indices, got shape {simplices.shape}."
        )
    card = simplices.shape[1]
    if card > BATCH_MAX_CARDINALITY:
        raise ContractViolationError(
            f"The batch solver handles at most {BATCH_MAX_CARDINALITY} vertices per "
            f"simplex, got {card}."
        )
    if simplices.size and (simplices.min() < 0 or simplices.max() >= len(cloud)):
        raise ContractViolationError("Vertex index out of range.")
    # one shared matrix when the simplices need at least as many entries
    n_entries = simplices.shape[0] * card * card
    full = None
    if len(cloud) <= _FULL_MATRIX_MAX and len(cloud) ** 2 <= n_entries:
        full = power_distance_matrix(cloud)
    out = np.empty(simplices.shape[0])
    for start in range(0, simplices.shape[0], _CHUNK):
        chunk = simplices[start : start + _CHUNK]
        if full is None:
            matrices = simplex_power_matrices(cloud, chunk)
        else:
            matrices = full[chunk[:, :, None], chunk[:, None, :]]
        out[start : start + _CHUNK] = _batch_radii(matrices)
    return out


def _batch_radii(matrices: NDArray[np.float64]) -> NDArray[np.float64]:
    n_sys, card = matrices.shape[0], matrices.shape[1]
    best = np.full(n_sys, np.inf)
    for size in range(1, card + 1):
        for subset in combinations(range(card), size):
            index = np.array(subset)
            solved, solvable = solve_stationarity(matrices[:, index][:, :, index])
            lambdas = np.zeros((n_sys, card))
            lambdas[:, index] = solved
            grad = np.einsum("nij,nj->ni", matrices, lambdas)
            dual = 0.5 * np.einsum("ni,ni->n", lambdas, grad)
            top = (grad - dual[:, None]).max(axis=1)
            best = np.where(solvable, np.minimum(best, top), best)
    return best
