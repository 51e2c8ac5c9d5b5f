"""Point, weighted point and cloud containers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from math import comb
from typing import TYPE_CHECKING

import numpy as np

from jlkdist._errors import ContractViolationError

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from numpy.typing import ArrayLike, NDArray


def as_point(x: ArrayLike) -> NDArray[np.float64]:
    """Convert ``x`` to a read-only 1-D float64 point.

    Parameters
    ----------
    x : array-like
        Coordinates of the point.

    Returns
    -------
    point : array of shape (dim,)
        A read-only copy of the coordinates.

    Raises
    ------
    ContractViolationError
        If ``x`` is not one-dimensional, is empty or has non-finite entries.
    """
    point = np.array(x, dtype=np.float64)
    if point.ndim != 1 or point.size == 0:
        raise ContractViolationError(
            f"A point must be a non-empty vector, got shape {point.shape}."
        )
    if not np.all(np.isfinite(point)):
        raise ContractViolationError("All point coordinates must be finite.")
    point.setflags(write=False)
    return point


def _as_coords(coords: ArrayLike) -> NDArray[np.float64]:
    array = np.array(coords, dtype=np.float64)
    if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
        raise ContractViolationError(
            "A cloud needs at least one point of dimension >= 1, got coordinates "
            f"of shape {array.shape}."
        )
    if not np.all(np.isfinite(array)):
        raise ContractViolationError("All point coordinates must be finite.")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, slots=True, eq=False)
class WeightedPoint:
    """A point of R^D together with a real weight.

    Attributes
    ----------
    point : array of shape (dim,)
        Location of the weighted point.
    weight : float
        Weight, in squared-length units. The power distance of ``x`` to the
        weighted point is ``||x - point||**2 - weight``.
    """

    point: NDArray[np.float64]
    weight: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "point", as_point(self.point))
        weight = float(self.weight)
        if not np.isfinite(weight):
            raise ContractViolationError(f"Weight {weight!r} is not finite.")
        object.__setattr__(self, "weight", weight)

    @property
    def dim(self) -> int:
        """Ambient dimension."""
        return self.point.shape[0]


@dataclass(frozen=True, slots=True, eq=False)
class PointCloud:
    """A finite ordered set of points sharing one ambient dimension.

    Attributes
    ----------
    coords : array of shape (n, dim)
        One row per point. Points are identified by their row index.
    """

    coords: NDArray[np.float64]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", _as_coords(self.coords))

    @classmethod
    def from_points(cls, points: Sequence[ArrayLike]) -> PointCloud:
        """Build a cloud from a sequence of points."""
        if len(points) == 0:
            raise ContractViolationError("A cloud needs at least one point.")
        rows = [as_point(p) for p in points]
        if len({row.shape[0] for row in rows}) != 1:
            raise ContractViolationError("All points of a cloud must share one dim.")
        return cls(np.vstack(rows))

    @property
    def dim(self) -> int:
        """Ambient dimension."""
        return self.coords.shape[1]

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __getitem__(self, index: int) -> NDArray[np.float64]:
        return self.coords[index]

    def __iter__(self) -> Iterator[NDArray[np.float64]]:
        return iter(self.coords)


class ProvenanceKind(StrEnum):
    """Origin of the weights of a :class:`WeightedCloud`."""

    BARYCENTRIC = "barycentric"
    APPROX = "approx"
    RAW = "raw"


@dataclass(frozen=True, slots=True)
class Provenance:
    """Tag recording how a weighted cloud was derived.

    Attributes
    ----------
    kind : ProvenanceKind
        ``barycentric`` for iso-barycenters of ``k``-subsets, ``approx`` for the
        approximate k-distance weights, ``raw`` for user supplied weights.
    k : int | None
        The ``k`` of the k-distance, ``None`` for raw clouds.
    """

    kind: ProvenanceKind = ProvenanceKind.RAW
    k: int | None = None

    def __post_init__(self) -> None:
        kind = ProvenanceKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if (kind is ProvenanceKind.RAW) != (self.k is None):
            raise ContractViolationError(
                f"Provenance {kind.value!r} is incompatible with k={self.k!r}."
            )
        if self.k is not None and self.k < 1:
            raise ContractViolationError(f"k must be >= 1, got {self.k!r}.")

    def __str__(self) -> str:
        if self.k is None:
            return self.kind.value
        return f"{self.kind.value}({self.k})"


@dataclass(frozen=True, slots=True, eq=False)
class WeightedCloud:
    """A finite ordered set of weighted points sharing one ambient dimension.

    Attributes
    ----------
    coords : array of shape (m, dim)
        Locations of the weighted points.
    weights : array of shape (m,)
        Weights of the weighted points.
    provenance : Provenance
        How the weights were derived.
    subsets : array of shape (m, k) | None
        For barycentric clouds, the indices into the source cloud of the subset
        generating each barycenter. Two subsets may share a barycenter, so the
        weighted points are told apart by their row, never by their location.
    source_size : int | None
        For derived clouds, the size of the source cloud.
    """

    coords: NDArray[np.float64]
    weights: NDArray[np.float64]
    provenance: Provenance = field(default_factory=Provenance)
    subsets: NDArray[np.intp] | None = None
    source_size: int | None = None

    def __post_init__(self) -> None:
        coords = _as_coords(self.coords)
        weights = np.array(self.weights, dtype=np.float64).reshape(-1)
        if weights.shape[0] != coords.shape[0]:
            raise ContractViolationError(
                f"Got {weights.shape[0]} weights for {coords.shape[0]} points."
            )
        if not np.all(np.isfinite(weights)):
            raise ContractViolationError("All weights must be finite.")
        weights.setflags(write=False)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "weights", weights)
        if self.provenance.kind is ProvenanceKind.BARYCENTRIC:
            self._check_barycentric()

    def _check_barycentric(self) -> None:
        k = self.provenance.k
        if self.subsets is None or self.source_size is None:
            raise ContractViolationError(
                "A barycentric cloud needs its generating subsets and source size."
            )
        subsets = np.array(self.subsets, dtype=np.intp)
        if subsets.shape != (len(self), k):
            raise ContractViolationError(
                f"Expected subsets of shape {(len(self), k)}, got {subsets.shape}."
            )
        expected = comb(self.source_size, k)
        if len(self) != expected:
            raise ContractViolationError(
                f"A barycentric({k}) cloud over {self.source_size} points has "
                f"{expected} weighted points, got {len(self)}."
            )
        subsets.setflags(write=False)
        object.__setattr__(self, "subsets", subsets)

    @property
    def dim(self) -> int:
        """Ambient dimension."""
        return self.coords.shape[1]

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __getitem__(self, index: int) -> WeightedPoint:
        return WeightedPoint(self.coords[index], self.weights[index])

    def __iter__(self) -> Iterator[WeightedPoint]:
        return (self[i] for i in range(len(self)))

    def require(self, kind: ProvenanceKind) -> int:
        """Check the provenance of the cloud.

        Parameters
        ----------
        kind : ProvenanceKind
            The expected provenance.

        Returns
        -------
        k : int
            The ``k`` recorded in the provenance.

        Raises
        ------
        ContractViolationError
            If the cloud has another provenance.
        """
        if self.provenance.kind is not kind:
            raise ContractViolationError(
                f"Expected a {kind.value} cloud, got provenance {self.provenance}."
            )
        return self.provenance.k

    @classmethod
    def from_points(cls, points: Sequence[WeightedPoint]) -> WeightedCloud:
        """Build a raw weighted cloud from weighted points."""
        if len(points) == 0:
            raise ContractViolationError("A cloud needs at least one point.")
        if len({p.dim for p in points}) != 1:
            raise ContractViolationError("All points of a cloud must share one dim.")
        return cls(
            np.vstack([p.point for p in points]),
            np.array([p.weight for p in points]),
        )
