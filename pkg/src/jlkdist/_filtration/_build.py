"""Weighted Čech and Rips filtrations of weighted clouds."""

from __future__ import annotations

import logging
from functools import partial
from typing import TYPE_CHECKING

import numpy as np

from jlkdist._config import BARYCENTER_BUDGET, BATCH_MAX_CARDINALITY
from jlkdist._errors import ContractViolationError, MebConvergenceError
from jlkdist._filtration._complex import FilteredComplex, Simplex, sort_simplices
from jlkdist._geometry import WeightedCloud
from jlkdist._kdistance import assign_approx_weights, barycenter_cloud
from jlkdist._meb import weighted_meb, weighted_meb_batch
from jlkdist._parallel import parallel_map

if TYPE_CHECKING:
    from collections.abc import Callable

    from numpy.typing import NDArray

    from jlkdist._geometry import PointCloud

_logger = logging.getLogger(__name__)

_CHUNK = 4096
# squared radii above this negative value are rounding noise, not imaginary balls
_CLAMP_TOL = 1e-12
# values within this relative gap of their largest facet take the facet value
_TIE_RTOL = 1e-12


def weighted_cech(
    W: WeightedCloud, max_dim: int, alpha_max: float, *, n_jobs: int | None = None
) -> FilteredComplex:
    """Weighted Čech filtration of a weighted cloud.

    A simplex enters at the radius of the weighted minimum enclosing ball of its
    vertices, the smallest ``alpha`` for which the balls of squared radius
    ``w + alpha**2`` around its vertices share a point. A vertex enters at
    ``sqrt(-w)``, once its own ball is real.

    Parameters
    ----------
    W : WeightedCloud
        The weighted cloud, one vertex per weighted point.
    max_dim : int
        Largest simplex dimension, at least 1.
    alpha_max : float
        Filtration cutoff. Simplices with a larger value are left out.
    n_jobs : int | None
        Number of threads evaluating the radii.

    Returns
    -------
    complex : FilteredComplex
        The filtration truncated at ``alpha_max`` and ``max_dim``.

    Raises
    ------
    MebConvergenceError
        If the iterative solver fails on a simplex with more than 6 vertices. The
        error carries the simplex.
    """
    return _grow(W, max_dim, alpha_max, _cech_radii, n_jobs)


def weighted_rips(
    W: WeightedCloud, max_dim: int, alpha_max: float
) -> FilteredComplex:
    """Weighted Rips filtration of a weighted cloud.

    Vertices and edges enter as in :func:`weighted_cech`; every other simplex
    enters once all its edges are present.
    """
    return _grow(W, max_dim, alpha_max, None, None)


def exact_kdist_cech(
    P: PointCloud,
    k: int,
    max_dim: int,
    alpha_max: float,
    budget: int = BARYCENTER_BUDGET,
    *,
    n_jobs: int | None = None,
) -> FilteredComplex:
    """Čech filtration of the k-distance, built on the barycentric cloud.

    The sublevel sets of the k-distance are unions of the balls of the weighted
    barycenters, hence the weighted Čech complex of the barycentric cloud
    computes their homology. The complex has one vertex per ``k``-subset of
    ``P``.

    Raises
    ------
    BudgetExceededError
        If ``C(len(P), k)`` exceeds ``budget``.
    """
    cloud = barycenter_cloud(P, k, budget)
    _logger.debug("Barycentric cloud of %i weighted points.", len(cloud))
    return weighted_cech(cloud, max_dim, alpha_max, n_jobs=n_jobs)


def approx_kdist_cech(
    P: PointCloud,
    k: int,
    max_dim: int,
    alpha_max: float,
    *,
    n_jobs: int | None = None,
) -> FilteredComplex:
    """Čech filtration of the approximate k-distance, with one vertex per point."""
    return weighted_cech(assign_approx_weights(P, k), max_dim, alpha_max, n_jobs=n_jobs)


def two_point_rad_sq(cloud: WeightedCloud, edges: NDArray[np.intp]) -> NDArray:
    """Squared radii of the weighted balls enclosing pairs of weighted points.

    On the segment ``p + t (q - p)`` the two power distances are equal for
    ``t = (L + w_p - w_q) / (2 L)`` with ``L = ||p - q||**2``. When ``t`` falls
    outside ``[0, 1]`` one power function dominates and the ball is centered on
    its point.

    Parameters
    ----------
    cloud : WeightedCloud
        The weighted cloud.
    edges : array of int, shape (N, 2)
        Indices of the pairs.

    Returns
    -------
    rad_sq : array of shape (N,)
        Squared radii.
    """
    edges = np.asarray(edges, dtype=np.intp).reshape(-1, 2)
    wp = cloud.weights[edges[:, 0]]
    wq = cloud.weights[edges[:, 1]]
    diff = cloud.coords[edges[:, 0]] - cloud.coords[edges[:, 1]]
    length = np.einsum("ij,ij->i", diff, diff)
    apart = length > 0
    safe = np.where(apart, length, 1.0)
    t = np.where(apart, (length + wp - wq) / (2.0 * safe), 0.5)
    rad_sq = np.where(t < 0, -wp, np.where(t > 1, -wq, t * t * length - wp))
    return np.where(apart, rad_sq, np.maximum(-wp, -wq))


def _check_args(max_dim: int, alpha_max: float) -> None:
    if max_dim < 1:
        raise ContractViolationError(f"max_dim must be at least 1, got {max_dim!r}.")
    if np.isnan(alpha_max) or alpha_max < 0:
        raise ContractViolationError(
            f"alpha_max must be non-negative, got {alpha_max!r}."
        )


def _cech_radii(
    cloud: WeightedCloud, candidates: NDArray[np.intp], n_jobs: int | None
) -> NDArray:
    if candidates.shape[1] <= BATCH_MAX_CARDINALITY:
        chunks = [
            candidates[start : start + _CHUNK]
            for start in range(0, candidates.shape[0], _CHUNK)
        ]
        parts = parallel_map(partial(weighted_meb_batch, cloud), chunks, n_jobs)
        return np.concatenate(parts)
    return np.array(parallel_map(partial(_iterative_rad_sq, cloud), candidates, n_jobs))


def _iterative_rad_sq(cloud: WeightedCloud, simplex: NDArray[np.intp]) -> float:
    sub = WeightedCloud(cloud.coords[simplex], cloud.weights[simplex])
    try:
        return weighted_meb(sub).rad_sq
    except MebConvergenceError as exc:
        raise exc.with_simplex(tuple(int(v) for v in simplex))


def _to_values(rad_sq: NDArray) -> tuple[NDArray, bool]:
    clamped = bool(np.any(rad_sq < -_CLAMP_TOL))
    return np.sqrt(np.maximum(rad_sq, 0.0)), clamped


def _grow(
    cloud: WeightedCloud,
    max_dim: int,
    alpha_max: float,
    radii: Callable[..., NDArray] | None,
    n_jobs: int | None,
) -> FilteredComplex:
    """Enumerate the simplices dimension by dimension, pruned by ``alpha_max``.

    A candidate of dimension ``q + 1`` extends a ``q``-simplex by a vertex adjacent
    to all of its vertices, and is kept when all its facets are present. Its
    value is at least the largest value of its facets.
    """
    _check_args(max_dim, alpha_max)
    vertex_values, clamped = _to_values(-cloud.weights)
    level = {
        (i,): float(value)
        for i, value in enumerate(vertex_values)
        if value <= alpha_max
    }
    present = sorted(v for (v,) in level)
    upper = {v: {u for u in present if u > v} for v in present}
    simplices = [Simplex(face, value) for face, value in level.items()]
    for dim in range(1, max_dim + 1):
        candidates, bounds = _candidates(level, upper, dim)
        if candidates.shape[0] == 0:
            break
        if dim == 1:
            rad_sq = two_point_rad_sq(cloud, candidates)
        elif radii is not None:
            rad_sq = radii(cloud, candidates, n_jobs)
        else:
            rad_sq = None
        if rad_sq is None:
            values = bounds
        else:
            values, negative = _to_values(rad_sq)
            clamped |= negative
            values = np.maximum(values, bounds)
            values = np.where(values <= bounds * (1 + _TIE_RTOL), bounds, values)
        keep = values <= alpha_max
        level = {
            tuple(face): float(value)
            for face, value in zip(
                candidates[keep].tolist(), values[keep], strict=True
            )
        }
        simplices.extend(Simplex(face, value) for face, value in level.items())
        _logger.debug(
            "Kept %i of %i candidate %i-simplices.", len(level), keep.size, dim
        )
        if dim == 1:
            upper = {v: set() for v in present}
            for a, b in level:
                upper[a].add(b)
    if clamped:
        _logger.warning(
            "Some squared radii were negative (imaginary balls) and were clamped to 0."
        )
    return FilteredComplex(
        len(cloud), sort_simplices(simplices), max_dim, float(alpha_max), clamped
    )


def _candidates(
    level: dict[tuple[int, ...], float], upper: dict[int, set[int]], dim: int
) -> tuple[NDArray[np.intp], NDArray[np.float64]]:
    rows: list[tuple[int, ...]] = []
    bounds: list[float] = []
    for face, value in level.items():
        common = set.intersection(*(upper[v] for v in face))
        for u in sorted(c for c in common if c > face[-1]):
            candidate = (*face, u)
            if dim == 1:
                rows.append(candidate)
                bounds.append(max(value, level[(u,)]))
                continue
            facet_values = [
                level.get(candidate[:i] + candidate[i + 1 :])
                for i in range(len(candidate))
            ]
            if None in facet_values:
                continue
            rows.append(candidate)
            bounds.append(max(facet_values))
    if not rows:
        return np.empty((0, dim + 1), dtype=np.intp), np.empty(0)
    return np.array(rows, dtype=np.intp), np.array(bounds)
