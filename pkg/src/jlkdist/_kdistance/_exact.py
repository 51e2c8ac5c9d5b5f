"""Exact k-distance queries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy.spatial.distance import cdist

from jlkdist._errors import ContractViolationError
from jlkdist._geometry import PointCloud, as_point

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

# rows of probes processed at once by the batch queries
_CHUNK = 4096


@dataclass(frozen=True, slots=True)
class KDistanceQueryResult:
    """Result of an exact k-distance query.

    Attributes
    ----------
    value : float
        Root mean squared distance from the query to its ``k`` nearest
        neighbours.
    neighbor_indices : tuple of int
        Indices of the ``k`` nearest neighbours, closest first, ties broken by
        ascending index.
    """

    value: float
    neighbor_indices: tuple[int, ...]


def check_k(k: int, n: int) -> None:
    """Check that ``1 <= k <= n``."""
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= n:
        raise ContractViolationError(f"k must be an integer in [1, {n}], got {k!r}.")


def as_probes(X: PointCloud | ArrayLike, dim: int) -> NDArray[np.float64]:
    """Return probes as a float64 array of shape (m, dim)."""
    probes = X.coords if isinstance(X, PointCloud) else np.atleast_2d(X)
    probes = np.asarray(probes, dtype=np.float64)
    if probes.ndim != 2 or probes.shape[1] != dim:
        raise ContractViolationError(
            f"Probes of shape {probes.shape} do not match dimension {dim}."
        )
    return probes


def k_distance(x: ArrayLike, P: PointCloud, k: int) -> KDistanceQueryResult:
    """Exact k-distance of ``x`` to ``P``.

    Parameters
    ----------
    x : array-like of shape (dim,)
        The query point.
    P : PointCloud
        The point cloud.
    k : int
        Number of neighbours, ``1 <= k <= len(P)``.

    Returns
    -------
    result : KDistanceQueryResult
        The k-distance and the indices of the neighbours realising it.

    Raises
    ------
    ContractViolationError
        If ``k`` is out of range or the dimensions differ.
    """
    check_k(k, len(P))
    x = as_point(x)
    if x.shape[0] != P.dim:
        raise ContractViolationError(f"Dimension mismatch: {x.shape[0]} != {P.dim}.")
    sq = ((P.coords - x) ** 2).sum(axis=1)
    order = np.argsort(sq, kind="stable")[:k]
    return KDistanceQueryResult(
        value=float(np.sqrt(sq[order].sum() / k)),
        neighbor_indices=tuple(int(i) for i in order),
    )


def squared_k_distances(
    X: PointCloud | ArrayLike, P: PointCloud, k: int
) -> NDArray[np.float64]:
    """Squared k-distances of many probes to ``P``.

    Parameters
    ----------
    X : PointCloud | array-like of shape (m, dim)
        The probes.
    P : PointCloud
        The point cloud.
    k : int
        Number of neighbours.

    Returns
    -------
    values : array of shape (m,)
        ``d_{P,k}(x)**2`` for each probe.
    """
    check_k(k, len(P))
    probes = as_probes(X, P.dim)
    out = np.empty(probes.shape[0])
    for start in range(0, probes.shape[0], _CHUNK):
        sq = cdist(probes[start : start + _CHUNK], P.coords, "sqeuclidean")
        nearest = np.partition(sq, k - 1, axis=1)[:, :k]
        out[start : start + _CHUNK] = nearest.sum(axis=1) / k
    return out


def k_distances(
    X: PointCloud | ArrayLike, P: PointCloud, k: int
) -> NDArray[np.float64]:
    """Exact k-distances of many probes to ``P``.

    See :func:`squared_k_distances` for the parameters.
    """
    return np.sqrt(squared_k_distances(X, P, k))
