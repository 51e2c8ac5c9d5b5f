"""Iterative weighted minimum enclosing ball solver."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Literal

import numpy as np

from jlkdist._config import MEB_MAX_ITER, MEB_TOL, SUPPORT_THRESHOLD
from jlkdist._errors import ContractViolationError, MebConvergenceError
from jlkdist._geometry import power_distance_matrix
from jlkdist._meb._dual import (
    power_profile,
    problem_scale,
    prune,
    solve_stationarity,
)
from jlkdist._meb._result import MebResult

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from jlkdist._geometry import WeightedCloud

_logger = logging.getLogger(__name__)

_POLISH_EVERY = 8
_REFRESH_EVERY = 64


def weighted_meb(
    X: WeightedCloud,
    tol: float = MEB_TOL,
    max_iter: int = MEB_MAX_ITER,
    *,
    init: Literal["vertex", "uniform"] = "vertex",
    step_rule: Literal["line-search", "harmonic"] = "line-search",
) -> MebResult:
    """Weighted minimum enclosing ball of a weighted cloud.

    Maximises the concave dual ``1/2 l^T M l`` over the probability simplex,
    where ``M`` is the power distance matrix of ``X``, with Frank-Wolfe steps.
    With the default line-search rule, every step is exact, away steps are taken
    when shrinking a support point is more profitable than growing a new one,
    and the current support is periodically polished by equalising the power
    distances of its points.

    Parameters
    ----------
    X : WeightedCloud
        Non-empty weighted cloud.
    tol : float
        Stop once the duality gap ``max_j D(c, p_j) - 1/2 l^T M l`` is below
        ``tol * max(s, |rad_sq|)``, where ``s`` is the largest absolute power
        distance between two points of ``X``.
    max_iter : int
        Maximum number of iterations.
    init : ``'vertex'`` | ``'uniform'``
        Starting weights: the point of smallest weight, or uniform weights.
    step_rule : ``'line-search'`` | ``'harmonic'``
        ``'harmonic'`` moves towards the farthest point with step ``1/(t + 2)``
        at iteration ``t`` and never removes a point from the support.

    Returns
    -------
    result : MebResult
        The center, squared radius and support.

    Raises
    ------
    MebConvergenceError
        If the duality gap is still above the tolerance after ``max_iter``
        iterations. The error carries the best iterate.
    """
    if len(X) == 0:
        raise ContractViolationError("Can not enclose an empty weighted cloud.")
    if tol <= 0:
        raise ContractViolationError(f"The tolerance must be positive, got {tol!r}.")
    if max_iter < 1:
        raise ContractViolationError(
            f"The iteration cap must be at least 1, got {max_iter!r}."
        )
    if step_rule not in ("line-search", "harmonic"):
        raise ContractViolationError(f"Unknown step rule {step_rule!r}.")
    matrix = power_distance_matrix(X)
    scale = problem_scale(matrix)
    lambdas = _initial_weights(matrix, init)
    grad = matrix @ lambdas
    for iteration in range(max_iter):
        if iteration % _REFRESH_EVERY == 0:
            grad = matrix @ lambdas
        dual = 0.5 * float(lambdas @ grad)
        powers = grad - dual
        far = int(np.argmax(powers))
        gap = float(powers[far]) - dual
        if gap <= tol * max(scale, abs(float(powers[far]))):
            done = _finish(X, matrix, lambdas, iteration, tol, scale)
            if done is not None:
                return done
        if (
            step_rule == "line-search"
            and iteration % _POLISH_EVERY == _POLISH_EVERY - 1
        ):
            polished = _polish(matrix, lambdas, tol, scale)
            if polished is not None:
                return _result(X, matrix, polished, iteration + 1)
        if step_rule == "harmonic":
            step = 1.0 / (iteration + 2)
            lambdas = (1.0 - step) * lambdas
            lambdas[far] += step
            grad = (1.0 - step) * grad + step * matrix[:, far]
            continue
        lambdas, grad = _line_search_step(matrix, lambdas, grad, powers, dual, far)
    best = _result(X, matrix, lambdas, max_iter)
    _logger.debug(
        "Weighted ball solver stopped after %i iterations with residual %.3e.",
        max_iter,
        best.residual,
    )
    raise MebConvergenceError(
        f"The weighted minimum enclosing ball did not converge in {max_iter} "
        f"iterations (residual {best.residual:.3e}, tolerance {tol:.3e}).",
        best,
    )


def _initial_weights(
    matrix: NDArray[np.float64], init: str
) -> NDArray[np.float64]:
    size = matrix.shape[0]
    if init == "uniform":
        return np.full(size, 1.0 / size)
    if init == "vertex":
        # the diagonal holds -2 w_i, ties go to the lowest index
        lambdas = np.zeros(size)
        lambdas[int(np.argmax(np.diag(matrix)))] = 1.0
        return lambdas
    raise ContractViolationError(f"Unknown initialisation {init!r}.")


def _line_search_step(
    matrix: NDArray[np.float64],
    lambdas: NDArray[np.float64],
    grad: NDArray[np.float64],
    powers: NDArray[np.float64],
    dual: float,
    far: int,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """One exact Frank-Wolfe or away step on the dual."""
    support = np.flatnonzero(lambdas > 0)
    near = int(support[np.argmin(powers[support])])
    forward = float(powers[far]) - dual
    away = dual - float(powers[near])
    if forward >= away or lambdas[near] >= 1.0:
        # direction e_far - l, curvature -(d^T M d)
        curvature = -(matrix[far, far] - 2.0 * grad[far] + 2.0 * dual)
        step = 1.0 if curvature <= 0 else min(1.0, forward / curvature)
        lambdas = (1.0 - step) * lambdas
        lambdas[far] += step
        grad = (1.0 - step) * grad + step * matrix[:, far]
        return lambdas, grad
    # direction l - e_near
    max_step = lambdas[near] / (1.0 - lambdas[near])
    curvature = -(matrix[near, near] - 2.0 * grad[near] + 2.0 * dual)
    step = max_step if curvature <= 0 else min(max_step, away / curvature)
    lambdas = (1.0 + step) * lambdas
    lambdas[near] -= step
    if step == max_step:
        lambdas[near] = 0.0
    grad = (1.0 + step) * grad - step * matrix[:, near]
    return lambdas, grad


def _polish(
    matrix: NDArray[np.float64],
    lambdas: NDArray[np.float64],
    tol: float,
    scale: float,
) -> NDArray[np.float64] | None:
    """Equalise the power distances of the current support.

    Returns the polished weights if they are a certified optimum, None otherwise.
    """
    support = np.flatnonzero(lambdas > SUPPORT_THRESHOLD)
    sub = matrix[np.ix_(support, support)]
    solved, solvable = solve_stationarity(sub[None])
    if not solvable[0] or np.any(solved[0] <= SUPPORT_THRESHOLD):
        return None
    candidate = np.zeros_like(lambdas)
    candidate[support] = solved[0]
    powers, dual = power_profile(matrix, candidate)
    top = float(powers.max())
    if top - dual <= tol * max(scale, abs(top)):
        return candidate
    return None


def _finish(
    X: WeightedCloud,
    matrix: NDArray[np.float64],
    lambdas: NDArray[np.float64],
    iteration: int,
    tol: float,
    scale: float,
) -> MebResult | None:
    """Prune the converged weights, provided the pruned weights still converge."""
    pruned = prune(lambdas)
    powers, dual = power_profile(matrix, pruned)
    top = float(powers.max())
    if top - dual > tol * max(scale, abs(top)):
        return None
    return _result(X, matrix, pruned, iteration)


def _result(
    X: WeightedCloud,
    matrix: NDArray[np.float64],
    lambdas: NDArray[np.float64],
    iterations: int,
) -> MebResult:
    lambdas = prune(lambdas)
    powers, dual = power_profile(matrix, lambdas)
    rad_sq = float(powers.max())
    support = tuple(
        (int(index), float(lambdas[index])) for index in np.flatnonzero(lambdas)
    )
    return MebResult(
        center=lambdas @ X.coords,
        rad_sq=rad_sq,
        support=support,
        iterations=iterations,
        residual=max(rad_sq - dual, 0.0),
    )
