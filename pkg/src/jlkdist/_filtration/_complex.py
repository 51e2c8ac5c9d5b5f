"""Filtered simplicial complexes and their text format."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

import numpy as np

from jlkdist._errors import ContractViolationError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Simplex:
    """A simplex with its filtration value.

    Attributes
    ----------
    vertices : tuple of int
        Strictly increasing vertex indices.
    value : float
        Filtration value, a radius (distance units).
    """

    vertices: tuple[int, ...]
    value: float

    def __post_init__(self) -> None:
        vertices = tuple(int(v) for v in self.vertices)
        if len(vertices) == 0:
            raise ContractViolationError("A simplex needs at least one vertex.")
        if any(a >= b for a, b in zip(vertices, vertices[1:], strict=False)):
            raise ContractViolationError(
                f"Simplex vertices must be strictly increasing, got {vertices!r}."
            )
        if vertices[0] < 0:
            raise ContractViolationError(f"Negative vertex index in {vertices!r}.")
        value = float(self.value)
        if not np.isfinite(value) or value < 0:
            raise ContractViolationError(
                f"Filtration value must be finite and non-negative, got {value!r}."
            )
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "value", value)

    @property
    def dim(self) -> int:
        """Dimension, one less than the number of vertices."""
        return len(self.vertices) - 1

    @property
    def sort_key(self) -> tuple[float, int, tuple[int, ...]]:
        """Filtration order: value, then dimension, then lexicographic."""
        return (self.value, self.dim, self.vertices)

    def facets(self) -> Iterator[tuple[int, ...]]:
        """Vertex tuples of the codimension-1 faces."""
        if self.dim == 0:
            return iter(())
        return combinations(self.vertices, self.dim)


@dataclass(frozen=True, slots=True, eq=False)
class FilteredComplex:
    """A simplicial complex with a filtration order.

    Attributes
    ----------
    n_vertices : int
        Number of vertices of the underlying weighted cloud. Vertices whose value
        exceeds ``alpha_max`` are absent from ``simplices``.
    simplices : tuple of Simplex
        Sorted by ``(value, dim, vertices)``.
    max_dim : int
        Largest simplex dimension considered during construction.
    alpha_max : float
        Filtration cutoff: every simplex of dimension at most ``max_dim`` with
        value at most ``alpha_max`` is present.
    clamped : bool
        Whether some negative squared radius was clamped to 0.
    """

    n_vertices: int
    simplices: tuple[Simplex, ...]
    max_dim: int
    alpha_max: float
    clamped: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "simplices", tuple(self.simplices))

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    @property
    def values(self) -> np.ndarray:
        """Filtration values in filtration order."""
        return np.array([s.value for s in self.simplices], dtype=np.float64)

    def count_by_dim(self) -> dict[int, int]:
        """Number of simplices of each dimension."""
        counts: dict[int, int] = {}
        for simplex in self.simplices:
            counts[simplex.dim] = counts.get(simplex.dim, 0) + 1
        return counts

    def check(self) -> dict[tuple[int, ...], int]:
        """Check the filtration invariants.

        Returns
        -------
        index : dict
            Position of every simplex in the filtration order, keyed by vertices.

        Raises
        ------
        ContractViolationError
            If the simplices are not sorted, a simplex is repeated, a vertex is out
            of range, a face is missing or follows its coface, or a value is below
            the value of one of its faces.
        """
        index: dict[tuple[int, ...], int] = {}
        previous = None
        for position, simplex in enumerate(self.simplices):
            key = simplex.sort_key
            if previous is not None and key < previous:
                raise ContractViolationError(
                    f"Simplex {list(simplex.vertices)} at position {position} is "
                    "out of filtration order."
                )
            previous = key
            if simplex.vertices[-1] >= self.n_vertices:
                raise ContractViolationError(
                    f"Simplex {list(simplex.vertices)} references a vertex beyond "
                    f"the {self.n_vertices} vertices of the complex."
                )
            if simplex.vertices in index:
                raise ContractViolationError(
                    f"Simplex {list(simplex.vertices)} appears twice."
                )
            for facet in simplex.facets():
                if facet not in index:
                    raise ContractViolationError(
                        f"Face {list(facet)} of simplex {list(simplex.vertices)} is "
                        "missing or comes after it."
                    )
                if self.simplices[index[facet]].value > simplex.value:
                    raise ContractViolationError(
                        f"Simplex {list(simplex.vertices)} has a smaller value than "
                        f"its face {list(facet)}."
                    )
            index[simplex.vertices] = position
        return index

    def sublevel(self, alpha: float) -> FilteredComplex:
        """The subcomplex of the simplices with value at most ``alpha``."""
        simplices = tuple(s for s in self.simplices if s.value <= alpha)
        return FilteredComplex(
            self.n_vertices,
            simplices,
            self.max_dim,
            min(float(alpha), self.alpha_max),
            self.clamped,
        )

    def to_text(self) -> str:
        """Serialise to lines ``dim v0 ... vk value`` in filtration order.

        The header comment lines record the attributes that are not carried by
        the simplices. Values are written with ``repr`` so that the text round
        trips exactly.
        """
        lines = [
            f"# n_vertices {self.n_vertices}",
            f"# max_dim {self.max_dim}",
            f"# alpha_max {self.alpha_max!r}",
        ]
        lines.extend(
            " ".join([str(s.dim), *map(str, s.vertices), repr(s.value)])
            for s in self.simplices
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> FilteredComplex:
        """Parse the output of :meth:`to_text`.

        Lines starting with ``#`` other than the known headers are ignored, as are
        blank lines. Missing headers are inferred from the simplices.
        """
        headers: dict[str, str] = {}
        simplices = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2:
                    headers[parts[0]] = parts[1]
                continue
            simplices.append(_parse_line(line, lineno))
        n_vertices = int(
            headers.get(
                "n_vertices",
                max((s.vertices[-1] + 1 for s in simplices), default=0),
            )
        )
        max_dim = int(
            headers.get("max_dim", max((s.dim for s in simplices), default=0))
        )
        alpha_max = float(
            headers.get("alpha_max", max((s.value for s in simplices), default=0.0))
        )
        return cls(n_vertices, tuple(simplices), max_dim, alpha_max)


def _parse_line(line: str, lineno: int) -> Simplex:
    fields = line.split()
    try:
        dim = int(fields[0])
        vertices = tuple(int(v) for v in fields[1:-1])
        value = float(fields[-1])
    except (ValueError, IndexError):
        raise ContractViolationError(f"Line {lineno}: can not parse {line!r}.")
    if len(vertices) != dim + 1:
        raise ContractViolationError(
            f"Line {lineno}: a {dim}-simplex needs {dim + 1} vertices, got "
            f"{len(vertices)}."
        )
    return Simplex(vertices, value)


def sort_simplices(simplices: Iterable[Simplex]) -> tuple[Simplex, ...]:
    """Sort simplices in filtration order."""
    return tuple(sorted(simplices, key=lambda s: s.sort_key))
