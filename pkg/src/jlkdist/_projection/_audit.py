"""Exact all-pairs distortion audit."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy.spatial.distance import pdist

from jlkdist._config import AUDIT_SLACK
from jlkdist._errors import ContractViolationError

if TYPE_CHECKING:
    from jlkdist._geometry import PointCloud

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DistortionReport:
    """Outcome of :func:`audit_distortion`.

    Attributes
    ----------
    epsilon_target : float
        The distortion the map was audited against.
    max_expansion : float
        Largest ratio ``||f(x) - f(y)|| / ||x - y||``.
    max_contraction : float
        Smallest such ratio.
    is_epsilon_distortion : bool
        Whether every ratio lies in ``[1 - epsilon, 1 + epsilon]``.
    worst_pair : tuple of int | None
        The pair whose ratio is furthest from 1.
    preserves_squared_distances : bool
        Whether every squared ratio lies in ``[1 - epsilon, 1 + epsilon]``.
        This stronger band is the one pointwise k-distances, squared radii and
        interleavings inherit.
    n_pairs : int
        Number of audited pairs.
    n_coincident : int
        Number of pairs of coincident points, skipped by the audit.
    """

    epsilon_target: float
    max_expansion: float
    max_contraction: float
    is_epsilon_distortion: bool
    worst_pair: tuple[int, int] | None
    preserves_squared_distances: bool
    n_pairs: int
    n_coincident: int


def audit_distortion(
    P: PointCloud, Q: PointCloud, epsilon: float
) -> DistortionReport:
    """Check a point correspondence against the epsilon-distortion inequalities.

    Parameters
    ----------
    P : PointCloud
        The source points.
    Q : PointCloud
        Their images, matched to ``P`` by index. Any map may be audited this way,
        including non-linear ones.
    epsilon : float
        Target distortion, ``> 0``.

    Returns
    -------
    report : DistortionReport
        Extremal ratios and the verdicts, evaluated with a relative slack of
        ``1e-12``.

    Raises
    ------
    ContractViolationError
        If the clouds have different sizes or ``epsilon <= 0``.
    """
    if len(P) != len(Q):
        raise ContractViolationError(
            f"Can not match {len(P)} points with {len(Q)} images."
        )
    if not epsilon > 0:
        raise ContractViolationError(f"epsilon must be positive, got {epsilon!r}.")
    source = pdist(P.coords)
    image = pdist(Q.coords)
    valid = source > 0
    n_coincident = int(np.count_nonzero(~valid))
    if not np.any(valid):
        return DistortionReport(
            float(epsilon), 1.0, 1.0, True, None, True, 0, n_coincident
        )
    ratio = image[valid] / source[valid]
    rows, cols = np.triu_indices(len(P), k=1)
    worst = int(np.argmax(np.abs(ratio - 1.0)))
    low = (1.0 - epsilon) * (1.0 - AUDIT_SLACK)
    high = (1.0 + epsilon) * (1.0 + AUDIT_SLACK)
    squared = ratio**2
    report = DistortionReport(
        epsilon_target=float(epsilon),
        max_expansion=float(ratio.max()),
        max_contraction=float(ratio.min()),
        is_epsilon_distortion=bool(np.all((low <= ratio) & (ratio <= high))),
        worst_pair=(int(rows[valid][worst]), int(cols[valid][worst])),
        preserves_squared_distances=bool(
            np.all((low <= squared) & (squared <= high))
        ),
        n_pairs=int(ratio.size),
        n_coincident=n_coincident,
    )
    _logger.debug(
        "Distortion audit: ratios in [%.6f, %.6f], %d coincident pairs",
        report.max_contraction,
        report.max_expansion,
        n_coincident,
    )
    return report
