"""Monte-Carlo Gaussian width of finite sets."""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from jlkdist._errors import ContractViolationError
from jlkdist._geometry import PointCloud

if TYPE_CHECKING:
    from numpy.typing import NDArray

# bounds on the Gaussian vectors per batch and on the entries of one batch product
_BATCH = 2048
_CELLS = 1 << 22


class WidthEstimate(NamedTuple):
    """Monte-Carlo estimate of a Gaussian width."""

    estimate: float
    std_error: float


def difference_set(P: PointCloud) -> PointCloud:
    """All normalised differences ``(x - y) / ||x - y||`` of a cloud.

    Parameters
    ----------
    P : PointCloud
        A cloud of at least two points.

    Returns
    -------
    S : PointCloud
        One unit vector per ordered pair of distinct points, ``(x_i - x_j)`` for
        ``i`` in order and then ``j != i`` in order. Pairs of coincident points
        are skipped.

    Raises
    ------
    ContractViolationError
        If ``P`` has fewer than two points or all of its points coincide.
    """
    n = len(P)
    if n < 2:
        raise ContractViolationError(f"A difference set needs >= 2 points, got {n}.")
    rows: list[NDArray[np.float64]] = []
    for i in range(n):
        diff = P.coords[i] - np.delete(P.coords, i, axis=0)
        norms = np.sqrt((diff**2).sum(axis=1))
        keep = norms > 0
        rows.append(diff[keep] / norms[keep, None])
    vectors = np.vstack(rows)
    if vectors.shape[0] == 0:
        raise ContractViolationError("All points coincide, no difference is defined.")
    return PointCloud(vectors)


def estimate_gaussian_width(
    S: PointCloud, samples: int, seed: int
) -> WidthEstimate:
    """Estimate ``E[sup_{x in S} <x, g>]`` for a standard Gaussian ``g``.

    Parameters
    ----------
    S : PointCloud
        The set, one vector per row (typically unit vectors).
    samples : int
        Number of Gaussian vectors, at least 100.
    seed : int
        Seed of :func:`numpy.random.default_rng`.

    Returns
    -------
    width : WidthEstimate
        The sample mean of the supremum and its standard error.
    """
    if not isinstance(S, PointCloud) or len(S) == 0:
        raise ContractViolationError("The Gaussian width needs a non-empty set.")
    if int(samples) != samples or samples < 100:
        raise ContractViolationError(f"samples must be >= 100, got {samples!r}.")
    rng = np.random.default_rng(seed)
    sups = np.empty(int(samples))
    # bound the size of the (batch, |S|) products
    batch = max(1, min(_BATCH, _CELLS // len(S)))
    for start in range(0, sups.size, batch):
        size = min(batch, sups.size - start)
        gaussians = rng.standard_normal((size, S.dim))
        sups[start : start + size] = (gaussians @ S.coords.T).max(axis=1)
    return WidthEstimate(
        float(sups.mean()), float(sups.std(ddof=1) / np.sqrt(sups.size))
    )
