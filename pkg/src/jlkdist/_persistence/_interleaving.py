"""Multiplicative interleaving certificates."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import log1p, sqrt
from typing import TYPE_CHECKING

from jlkdist._config import CERTIFICATE_SLACK
from jlkdist._errors import ContractViolationError
from jlkdist._persistence._bottleneck import bottleneck_matching

if TYPE_CHECKING:
    from collections.abc import Sequence

    from jlkdist._persistence._bottleneck import Matching
    from jlkdist._persistence._diagram import PersistenceDiagram

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class InterleavingCertificate:
    """Outcome of :func:`certify_interleaving`.

    Attributes
    ----------
    epsilon : float
        The distortion the certificate was computed for.
    beta : float
        Multiplicative factor ``(1 - epsilon) ** -0.5``.
    log_bottleneck : float
        Largest log-scale bottleneck distance over the degrees, ``inf`` when some
        degree admits no finite matching.
    passes : bool
        Whether ``log_bottleneck <= ln(beta)`` up to ``1e-12``.
    per_degree : tuple of float
        Log-scale bottleneck distance of each degree.
    matching : tuple of Matching
        Witnessing matching of each degree.
    diagnostics : tuple of str
        Why degrees with an infinite distance could not be matched.
    """

    epsilon: float
    beta: float
    log_bottleneck: float
    passes: bool
    per_degree: tuple[float, ...]
    matching: tuple[Matching, ...]
    diagnostics: tuple[str, ...] = ()

    @property
    def threshold(self) -> float:
        """``ln(beta) = -ln(1 - epsilon) / 2``."""
        return -0.5 * log1p(-self.epsilon)


def interleaving_beta(epsilon: float) -> float:
    """Multiplicative interleaving factor ``(1 - epsilon) ** -0.5``."""
    if not 0 < epsilon < 1:
        raise ContractViolationError(f"epsilon must be in (0, 1), got {epsilon!r}.")
    return 1.0 / sqrt(1.0 - epsilon)


def certify_interleaving(
    A: Sequence[PersistenceDiagram],
    B: Sequence[PersistenceDiagram],
    epsilon: float,
    cap: float | None = None,
) -> InterleavingCertificate:
    """Check that two families of diagrams are ``beta``-interleaved.

    Parameters
    ----------
    A, B : sequence of PersistenceDiagram
        Diagrams of the same degrees, in the same order.
    epsilon : float
        Distortion in ``(0, 1)``, ``beta = (1 - epsilon) ** -0.5``.
    cap : float | None
        If provided, both families are truncated at ``cap`` first, as the
        diagrams of filtrations built up to ``cap``.

    Returns
    -------
    certificate : InterleavingCertificate
        Fails with a diagnostic when classes born at 0 can not be matched, or
        when the numbers of essential classes differ.
    """
    beta = interleaving_beta(epsilon)
    if len(A) != len(B):
        raise ContractViolationError(
            f"Got {len(A)} and {len(B)} diagrams, expected one per degree on both "
            "sides."
        )
    per_degree = []
    matchings = []
    diagnostics = []
    for a, b in zip(A, B, strict=True):
        if a.dimension != b.dimension:
            raise ContractViolationError(
                f"Diagrams of degrees {a.dimension} and {b.dimension} are not aligned."
            )
        if cap is not None:
            a, b = a.truncated(cap), b.truncated(cap)
        distance, matching = bottleneck_matching(a, b, "log")
        if distance == float("inf"):
            diagnostics.append(_diagnose(a, b))
        per_degree.append(distance)
        matchings.append(matching)
    log_bottleneck = max(per_degree, default=0.0)
    threshold = -0.5 * log1p(-epsilon)
    passes = bool(log_bottleneck <= threshold + CERTIFICATE_SLACK)
    _logger.debug(
        "Log bottleneck %.6g against threshold %.6g: %s.",
        log_bottleneck,
        threshold,
        "pass" if passes else "fail",
    )
    return InterleavingCertificate(
        epsilon=float(epsilon),
        beta=beta,
        log_bottleneck=log_bottleneck,
        passes=passes,
        per_degree=tuple(per_degree),
        matching=tuple(matchings),
        diagnostics=tuple(diagnostics),
    )


def _diagnose(a: PersistenceDiagram, b: PersistenceDiagram) -> str:
    n_a, n_b = len(a.essential), len(b.essential)
    if n_a != n_b:
        return (
            f"degree {a.dimension}: {n_a} essential classes against {n_b}, they can "
            "not be matched"
        )
    zero_a = sum(p.birth == 0 for p in a.pairs)
    zero_b = sum(p.birth == 0 for p in b.pairs)
    return (
        f"degree {a.dimension}: {zero_a} classes born at 0 against {zero_b}, a class "
        "born at 0 can only match another class born at 0"
    )
