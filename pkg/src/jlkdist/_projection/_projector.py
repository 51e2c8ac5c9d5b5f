"""Seeded subgaussian random linear maps."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np

from jlkdist._errors import ContractViolationError
from jlkdist._geometry import PointCloud

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

_logger = logging.getLogger(__name__)


class ProjectorKind(StrEnum):
    """Entry law of a projection matrix."""

    GAUSSIAN = "gaussian"
    RADEMACHER = "rademacher"
    #: Achlioptas' database-friendly entries, two thirds of them zero.
    SPARSE = "sparse"
    IDENTITY = "identity"


@dataclass(frozen=True, slots=True, eq=False)
class Projector:
    """A linear map ``v -> scale * matrix @ v`` from R^D to R^d.

    Attributes
    ----------
    source_dim : int
        Input dimension ``D``.
    target_dim : int
        Output dimension ``d <= D``.
    kind : ProjectorKind
        Entry law of ``matrix``.
    seed : int | None
        Seed the matrix was drawn with, ``None`` for the identity.
    matrix : array of shape (d, D)
        Read-only matrix with i.i.d. entries of mean 0 and variance ``1/D``.
    """

    source_dim: int
    target_dim: int
    kind: ProjectorKind
    seed: int | None
    matrix: NDArray[np.float64]

    @property
    def scale(self) -> float:
        """Scale factor ``sqrt(D/d)`` making the map norm preserving on average."""
        return float(np.sqrt(self.source_dim / self.target_dim))

    def __call__(self, v: ArrayLike) -> NDArray[np.float64]:
        """Apply the map to a vector, or to each row of a 2-D array."""
        v = np.asarray(v, dtype=np.float64)
        if v.shape[-1] != self.source_dim:
            raise ContractViolationError(
                f"Expected vectors of dimension {self.source_dim}, got {v.shape[-1]}."
            )
        return self.scale * (v @ self.matrix.T)


def _check_dims(D: int, d: int) -> None:
    if int(D) != D or int(d) != d or not 1 <= d <= D:
        raise ContractViolationError(
            f"Dimensions must satisfy 1 <= d <= D, got d={d!r} and D={D!r}."
        )


def sample_projector(
    D: int, d: int, kind: ProjectorKind | str, seed: int
) -> Projector:
    """Draw a random projector.

    Parameters
    ----------
    D : int
        Source dimension.
    d : int
        Target dimension, ``1 <= d <= D``.
    kind : ProjectorKind | str
        ``gaussian`` draws ``Normal(0, 1/D)`` entries, ``rademacher`` draws
        ``+-1/sqrt(D)`` with equal probability and ``sparse`` draws
        ``+-sqrt(3/D)`` with probability 1/6 each and 0 otherwise. ``identity``
        requires ``d == D`` and ignores the seed.
    seed : int
        Non-negative seed of :func:`numpy.random.default_rng`. The same seed
        reproduces the same matrix bit for bit.

    Returns
    -------
    projector : Projector
        The sampled map. Combined with the scale ``sqrt(D/d)``, the expected
        squared norm of the image of any fixed vector equals its squared norm.

    Raises
    ------
    ContractViolationError
        If ``d > D``, the kind is unknown or the seed is negative.
    """
    _check_dims(D, d)
    try:
        kind = ProjectorKind(kind)
    except ValueError:
        raise ContractViolationError(f"Unknown projector kind {kind!r}.")
    if kind is ProjectorKind.IDENTITY:
        if d != D:
            raise ContractViolationError(
                f"An identity projector needs d == D, got d={d} and D={D}."
            )
        return identity_projector(D)
    if int(seed) != seed or seed < 0:
        raise ContractViolationError(f"Seed must be a non-negative integer: {seed!r}.")
    rng = np.random.default_rng(int(seed))
    shape = (int(d), int(D))
    if kind is ProjectorKind.GAUSSIAN:
        matrix = rng.standard_normal(shape) / np.sqrt(D)
    elif kind is ProjectorKind.RADEMACHER:
        matrix = (2.0 * rng.integers(0, 2, size=shape) - 1.0) / np.sqrt(D)
    else:
        signs = rng.choice([-1.0, 0.0, 1.0], size=shape, p=[1 / 6, 2 / 3, 1 / 6])
        matrix = signs * np.sqrt(3.0 / D)
    matrix.setflags(write=False)
    _logger.debug("Sampled a %s projector R^%d -> R^%d (seed %d)", kind, D, d, seed)
    return Projector(int(D), int(d), kind, int(seed), matrix)


def identity_projector(D: int) -> Projector:
    """Return the identity map of R^D as a projector."""
    _check_dims(D, D)
    matrix = np.eye(int(D))
    matrix.setflags(write=False)
    return Projector(int(D), int(D), ProjectorKind.IDENTITY, None, matrix)


def apply(projector: Projector, cloud: PointCloud) -> PointCloud:
    """Map every point of a cloud.

    Parameters
    ----------
    projector : Projector
        The linear map.
    cloud : PointCloud
        A cloud of dimension ``projector.source_dim``.

    Returns
    -------
    image : PointCloud
        The images, in the same order, of dimension ``projector.target_dim``.

    Raises
    ------
    ContractViolationError
        If the cloud dimension is not the source dimension of the map.
    """
    if cloud.dim != projector.source_dim:
        raise ContractViolationError(
            f"Cloud of dimension {cloud.dim} can not be mapped from "
            f"R^{projector.source_dim}."
        )
    return PointCloud(projector(cloud.coords))
