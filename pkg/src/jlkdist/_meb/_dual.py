"""Dual quadratic form and stationarity systems of the weighted ball problem.

The squared radius of a weighted cloud only depends on the matrix ``M`` of power
distances ``M[i, j] = D(p_i, p_j)``: it is the maximum over convex weights
``l`` of ``1/2 l^T M l``, and the power distance of the center ``sum_i l_i p_i``
to ``p_j`` is ``(M l)_j - 1/2 l^T M l``. Everything here works on ``M`` alone.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from jlkdist._config import SUPPORT_THRESHOLD
from jlkdist._errors import ContractViolationError
from jlkdist._geometry import simplex_power_matrices

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from jlkdist._geometry import WeightedCloud

# stationarity systems of matrices scaled to unit entries are singular above this
_MAX_COND = 1e12


def radius_from_support(lambdas: ArrayLike, X: WeightedCloud) -> float:
    """Evaluate the dual quadratic form ``1/2 sum_ij l_i l_j D(p_i, p_j)``.

    Parameters
    ----------
    lambdas : array-like of shape (len(X),)
        Convex weights over the weighted points of ``X``.
    X : WeightedCloud
        The weighted cloud.

    Returns
    -------
    value : float
        The quadratic form. For the optimal weights it equals the squared radius
        of the minimum enclosing ball of ``X``.

    Raises
    ------
    ContractViolationError
        If the weights are not convex.
    """
    lambdas = np.asarray(lambdas, dtype=np.float64)
    if lambdas.shape != (len(X),):
        raise ContractViolationError(
            f"Expected {len(X)} convex weights, got shape {lambdas.shape}."
        )
    if np.any(lambdas < 0) or abs(lambdas.sum() - 1.0) > 1e-9:
        raise ContractViolationError("Weights must be non-negative and sum to 1.")
    support = np.flatnonzero(lambdas)
    matrix = simplex_power_matrices(X, support[None, :])[0]
    weights = lambdas[support]
    return float(0.5 * weights @ matrix @ weights)


def problem_scale(matrix: NDArray[np.float64]) -> float:
    """Largest absolute power distance of ``matrix``, 1 for a zero matrix."""
    scale = float(np.abs(matrix).max(initial=0.0))
    return scale if scale > 0 else 1.0


def power_profile(
    matrix: NDArray[np.float64], lambdas: NDArray[np.float64]
) -> tuple[NDArray[np.float64], float]:
    """Power distances of the center of ``lambdas`` and the dual value.

    Parameters
    ----------
    matrix : array of shape (m, m)
        Power distance matrix.
    lambdas : array of shape (m,)
        Affine weights summing to 1.

    Returns
    -------
    powers : array of shape (m,)
        ``D(c, p_j)`` for the center ``c = sum_i l_i p_i``.
    dual : float
        ``1/2 l^T M l``.
    """
    grad = matrix @ lambdas
    dual = 0.5 * float(lambdas @ grad)
    return grad - dual, dual


def solve_stationarity(
    matrices: NDArray[np.float64],
) -> tuple[NDArray[np.float64], NDArray[np.bool_]]:
    """Equalise the power distances of a support.

    Solves ``M_SS l = nu 1`` with ``sum(l) = 1`` for a stack of support
    matrices, i.e. finds the affine combination of the support points whose
    power distance to every support point is the same.

    Parameters
    ----------
    matrices : array of shape (N, s, s)
        Power distance matrices of the supports.

    Returns
    -------
    lambdas : array of shape (N, s)
        Affine weights, normalised to sum to 1.
    solvable : array of shape (N,)
        False where the support is affinely dependent (singular system).
    """
    n_sys, size = matrices.shape[0], matrices.shape[1]
    # shifting M by a constant or scaling it leaves the weights unchanged
    shift = np.einsum("nii->n", matrices) / max(size, 1)
    centred = matrices - shift[:, None, None]
    scale = np.abs(centred).max(axis=(1, 2), initial=0.0)
    scale[scale == 0] = 1.0
    system = np.zeros((n_sys, size + 1, size + 1))
    system[:, :size, :size] = centred / scale[:, None, None]
    system[:, :size, size] = -1.0
    system[:, size, :size] = 1.0
    rhs = np.zeros((n_sys, size + 1, 1))
    rhs[:, size, 0] = 1.0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        cond = np.linalg.cond(system)
    solvable = np.isfinite(cond) & (cond < _MAX_COND)
    system[~solvable] = np.eye(size + 1)
    lambdas = np.linalg.solve(system, rhs)[:, :size, 0]
    total = lambdas.sum(axis=1)
    solvable &= np.all(np.isfinite(lambdas), axis=1) & (np.abs(total) > 0.5)
    total[~solvable] = 1.0
    return lambdas / total[:, None], solvable


def prune(lambdas: NDArray[np.float64]) -> NDArray[np.float64]:
    """Zero the weights below the support threshold and renormalise."""
    pruned = np.where(lambdas > SUPPORT_THRESHOLD, lambdas, 0.0)
    return pruned / pruned.sum()
