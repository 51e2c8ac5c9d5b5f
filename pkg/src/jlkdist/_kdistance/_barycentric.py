"""The barycentric weighted cloud realising the k-distance as a power distance."""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb
from typing import TYPE_CHECKING

import numpy as np

from jlkdist._config import BARYCENTER_BUDGET
from jlkdist._errors import BudgetExceededError, ContractViolationError
from jlkdist._geometry import (
    Provenance,
    ProvenanceKind,
    WeightedCloud,
    as_point,
    barycenters,
)
from jlkdist._kdistance._exact import check_k

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

    from jlkdist._geometry import PointCloud

_logger = logging.getLogger(__name__)

_CHUNK = 4096


def barycenter_cloud(
    P: PointCloud, k: int, budget: int = BARYCENTER_BUDGET
) -> WeightedCloud:
    """Weighted iso-barycenters of all ``k``-subsets of ``P``.

    Parameters
    ----------
    P : PointCloud
        The source cloud.
    k : int
        Subset size.
    budget : int
        Maximum number of weighted points to materialise.

    Returns
    -------
    cloud : WeightedCloud
        One weighted point per ``k``-subset, in lexicographic subset order, with
        ``barycentric(k)`` provenance.

    Raises
    ------
    BudgetExceededError
        If ``C(len(P), k)`` exceeds ``budget``. The number of barycenters needed
        to describe the k-distance grows like a power of ``n`` that increases
        with the dimension, hence the explicit cap.
    """
    n = len(P)
    check_k(k, n)
    count = comb(n, k)
    if count > budget:
        raise BudgetExceededError(n, k, count, budget)
    _logger.debug("Building %d barycenters of %d-subsets of %d points", count, k, n)
    subsets = np.fromiter(
        (i for subset in combinations(range(n), k) for i in subset),
        dtype=np.intp,
        count=count * k,
    ).reshape(count, k)
    coords = np.empty((count, P.dim))
    weights = np.empty(count)
    for start in range(0, count, _CHUNK):
        stop = start + _CHUNK
        coords[start:stop], weights[start:stop] = barycenters(
            P.coords, subsets[start:stop]
        )
    return WeightedCloud(
        coords,
        weights,
        Provenance(ProvenanceKind.BARYCENTRIC, k),
        subsets=subsets,
        source_size=n,
    )


def k_distance_via_barycenters(x: ArrayLike, B: WeightedCloud) -> float:
    """k-distance evaluated as the square root of a power distance.

    Parameters
    ----------
    x : array-like of shape (dim,)
        The query point.
    B : WeightedCloud
        A cloud built by :func:`barycenter_cloud`.

    Returns
    -------
    value : float
        ``min_b sqrt(||x - b||**2 - w(b))``, equal to the exact k-distance.

    Raises
    ------
    ContractViolationError
        If ``B`` is not barycentric or the dimensions differ.
    """
    B.require(ProvenanceKind.BARYCENTRIC)
    x = as_point(x)
    if x.shape[0] != B.dim:
        raise ContractViolationError(f"Dimension mismatch: {x.shape[0]} != {B.dim}.")
    power = ((B.coords - x) ** 2).sum(axis=1) - B.weights
    return float(np.sqrt(max(power.min(), 0.0)))
