"""Approximate k-distance over the input points."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from scipy.spatial.distance import cdist

from jlkdist._errors import ContractViolationError
from jlkdist._geometry import Provenance, ProvenanceKind, WeightedCloud, as_point
from jlkdist._kdistance._exact import as_probes, squared_k_distances

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from jlkdist._geometry import PointCloud


def assign_approx_weights(P: PointCloud, k: int) -> WeightedCloud:
    """Weight every point of ``P`` by minus its squared k-distance.

    Parameters
    ----------
    P : PointCloud
        The point cloud.
    k : int
        Number of neighbours, ``1 <= k <= len(P)``.

    Returns
    -------
    cloud : WeightedCloud
        The points of ``P`` in the same order with weights ``-d_{P,k}(p)**2``
        and ``approx(k)`` provenance.
    """
    weights = -squared_k_distances(P, P, k)
    return WeightedCloud(
        P.coords,
        weights,
        Provenance(ProvenanceKind.APPROX, k),
        source_size=len(P),
    )


def approx_k_distance(x: ArrayLike, W: WeightedCloud) -> float:
    """Approximate k-distance of ``x``.

    Parameters
    ----------
    x : array-like of shape (dim,)
        The query point.
    W : WeightedCloud
        A cloud built by :func:`assign_approx_weights`.

    Returns
    -------
    value : float
        ``min_p sqrt(||x - p||**2 - w(p))``. It lies between ``1/sqrt(2)`` and
        ``sqrt(3)`` times the exact k-distance.

    Raises
    ------
    ContractViolationError
        If ``W`` does not carry ``approx`` provenance or the dimensions differ.
    """
    W.require(ProvenanceKind.APPROX)
    x = as_point(x)
    if x.shape[0] != W.dim:
        raise ContractViolationError(f"Dimension mismatch: {x.shape[0]} != {W.dim}.")
    power = ((W.coords - x) ** 2).sum(axis=1) - W.weights
    return float(np.sqrt(max(power.min(), 0.0)))


def approx_k_distances(
    X: PointCloud | ArrayLike, W: WeightedCloud
) -> NDArray[np.float64]:
    """Approximate k-distances of many probes.

    See :func:`approx_k_distance` for the parameters.
    """
    W.require(ProvenanceKind.APPROX)
    probes = as_probes(X, W.dim)
    power = cdist(probes, W.coords, "sqeuclidean") - W.weights[None, :]
    return np.sqrt(np.maximum(power.min(axis=1), 0.0))
