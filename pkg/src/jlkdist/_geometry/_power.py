"""Power distances, barycenters and variance identities."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from scipy.spatial.distance import cdist

from jlkdist._errors import ContractViolationError
from jlkdist._geometry._types import WeightedPoint, as_point

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from jlkdist._geometry._types import WeightedCloud


def _check_same_dim(a: NDArray, b: NDArray) -> None:
    if a.shape[-1] != b.shape[-1]:
        raise ContractViolationError(
            f"Dimension mismatch: {a.shape[-1]} != {b.shape[-1]}."
        )


def squared_distance(x: ArrayLike, y: ArrayLike) -> float:
    """Squared Euclidean distance, summed coordinate-wise."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    _check_same_dim(x, y)
    diff = x - y
    return float(diff @ diff)


def power_distance(x: ArrayLike, p: WeightedPoint) -> float:
    """Power of ``x`` with respect to the weighted point ``p``.

    Parameters
    ----------
    x : array-like of shape (dim,)
        The query point.
    p : WeightedPoint
        The weighted point.

    Returns
    -------
    power : float
        ``||x - p||**2 - w(p)``.

    Raises
    ------
    ContractViolationError
        If the dimensions differ.
    """
    return squared_distance(as_point(x), p.point) - p.weight


def weighted_pair_distance(p: WeightedPoint, q: WeightedPoint) -> float:
    """Power distance between two weighted points.

    Parameters
    ----------
    p, q : WeightedPoint
        The weighted points.

    Returns
    -------
    distance : float
        ``||p - q||**2 - w(p) - w(q)``. Zero means the two weighted points are
        orthogonal.
    """
    return squared_distance(p.point, q.point) - p.weight - q.weight


def barycenter(subset: ArrayLike) -> WeightedPoint:
    """Weighted iso-barycenter of a set of points.

    Parameters
    ----------
    subset : array-like of shape (k, dim)
        The points, one per row.

    Returns
    -------
    barycenter : WeightedPoint
        The arithmetic mean ``b`` of the points, weighted with
        ``-(1/k) * sum ||b - p_i||**2``, which is never positive.

    Raises
    ------
    ContractViolationError
        If the subset is empty.
    """
    points = np.array(subset, dtype=np.float64)
    if points.ndim != 2 or points.shape[0] == 0:
        raise ContractViolationError(
            f"A barycenter needs a non-empty set of points, got shape {points.shape}."
        )
    centers, weights = barycenters(points, np.arange(points.shape[0])[None, :])
    return WeightedPoint(centers[0], weights[0])


def barycenters(
    points: ArrayLike, subsets: ArrayLike
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Weighted iso-barycenters of many subsets of the same size.

    Parameters
    ----------
    points : array-like of shape (n, dim)
        The source points.
    subsets : array-like of shape (m, k)
        Indices into ``points``, one subset per row.

    Returns
    -------
    centers : array of shape (m, dim)
        The barycenter of each subset.
    weights : array of shape (m,)
        ``-(1/k) * sum ||b - p_i||**2`` for each subset.
    """
    points = np.asarray(points, dtype=np.float64)
    subsets = np.asarray(subsets, dtype=np.intp)
    if subsets.ndim != 2 or subsets.shape[1] == 0:
        raise ContractViolationError(
            f"Subsets must be a non-empty 2-D index array, got shape {subsets.shape}."
        )
    members = points[subsets]
    centers = members.mean(axis=1)
    weights = -((members - centers[:, None, :]) ** 2).sum(axis=-1).mean(axis=1)
    return centers, weights


def _check_convex(lambdas: NDArray, size: int) -> None:
    if lambdas.shape != (size,):
        raise ContractViolationError(
            f"Expected {size} convex weights, got shape {lambdas.shape}."
        )
    if np.any(lambdas < 0) or abs(lambdas.sum() - 1.0) > 1e-9:
        raise ContractViolationError("Weights must be non-negative and sum to 1.")


def convex_spread(points: ArrayLike, lambdas: ArrayLike) -> float:
    """Weighted spread of points around their convex combination.

    Parameters
    ----------
    points : array-like of shape (m, dim)
        The points.
    lambdas : array-like of shape (m,)
        Convex weights.

    Returns
    -------
    spread : float
        ``sum_i lambda_i ||b - p_i||**2`` where ``b = sum_i lambda_i p_i``.
    """
    points = np.asarray(points, dtype=np.float64)
    lambdas = np.asarray(lambdas, dtype=np.float64)
    _check_convex(lambdas, points.shape[0])
    center = lambdas @ points
    return float(lambdas @ ((points - center) ** 2).sum(axis=1))


def pairwise_spread(points: ArrayLike, lambdas: ArrayLike) -> float:
    """Half the doubly weighted sum of squared pairwise distances.

    Parameters
    ----------
    points : array-like of shape (m, dim)
        The points.
    lambdas : array-like of shape (m,)
        Convex weights.

    Returns
    -------
    spread : float
        ``1/2 sum_i sum_j lambda_i lambda_j ||p_i - p_j||**2``, equal to
        :func:`convex_spread` for the same inputs.
    """
    points = np.asarray(points, dtype=np.float64)
    lambdas = np.asarray(lambdas, dtype=np.float64)
    _check_convex(lambdas, points.shape[0])
    diff = points[:, None, :] - points[None, :, :]
    return float(0.5 * lambdas @ (diff**2).sum(axis=-1) @ lambdas)


def _power_matrices(coords: NDArray, weights: NDArray) -> NDArray[np.float64]:
    # coords (..., m, dim), weights (..., m)
    diff = coords[..., :, None, :] - coords[..., None, :, :]
    sq = (diff**2).sum(axis=-1)
    return sq - weights[..., :, None] - weights[..., None, :]


def power_distance_matrix(cloud: WeightedCloud) -> NDArray[np.float64]:
    """Matrix of power distances between all weighted points of a cloud.

    Parameters
    ----------
    cloud : WeightedCloud
        The weighted cloud.

    Returns
    -------
    matrix : array of shape (m, m)
        ``matrix[i, j] = ||p_i - p_j||**2 - w_i - w_j``; the diagonal holds
        ``-2 w_i``.
    """
    sq = cdist(cloud.coords, cloud.coords, "sqeuclidean")
    return sq - cloud.weights[:, None] - cloud.weights[None, :]


def simplex_power_matrices(
    cloud: WeightedCloud, simplices: ArrayLike
) -> NDArray[np.float64]:
    """Power distance matrices of many simplices of the same cardinality.

    Parameters
    ----------
    cloud : WeightedCloud
        The weighted cloud the simplices index into.
    simplices : array-like of shape (N, m)
        Vertex indices, one simplex per row.

    Returns
    -------
    matrices : array of shape (N, m, m)
        The power distance matrix of each simplex.
    """
    simplices = np.asarray(simplices, dtype=np.intp)
    if simplices.ndim != 2:
        raise ContractViolationError(
            f"Simplices must be a 2-D index array, got shape {simplices.shape}."
        )
    return _power_matrices(cloud.coords[simplices], cloud.weights[simplices])
