"""Persistence diagrams and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from pydantic_core import from_json, to_json

from jlkdist._errors import ContractViolationError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

_INF = "inf"


@dataclass(frozen=True, slots=True)
class PersistencePair:
    """A (birth, death) pair of a persistence diagram.

    Attributes
    ----------
    birth : float
        Filtration value at which the class appears.
    death : float | None
        Filtration value at which it dies, ``None`` for essential classes.
    """

    birth: float
    death: float | None = None

    def __post_init__(self) -> None:
        birth = float(self.birth)
        if not np.isfinite(birth):
            raise ContractViolationError(f"Birth {birth!r} is not finite.")
        object.__setattr__(self, "birth", birth)
        if self.death is None:
            return
        death = float(self.death)
        if not np.isfinite(death):
            raise ContractViolationError(
                f"Death {death!r} is not finite, use None for essential classes."
            )
        if death < birth:
            raise ContractViolationError(
                f"Death {death!r} precedes birth {birth!r}."
            )
        object.__setattr__(self, "death", death)

    @property
    def essential(self) -> bool:
        """Whether the class never dies."""
        return self.death is None

    def alive_at(self, alpha: float) -> bool:
        """Whether the class is alive in the sublevel complex at ``alpha``."""
        return self.birth <= alpha and (self.death is None or alpha < self.death)

    def sort_key(self) -> tuple[float, bool, float]:
        """Order by birth, then finite deaths before essential classes."""
        return (self.birth, self.death is None, self.death or 0.0)


@dataclass(frozen=True, slots=True)
class PersistenceDiagram:
    """Persistence diagram of one homology degree.

    Attributes
    ----------
    dimension : int
        Homology degree.
    pairs : tuple of PersistencePair
        The multiset of pairs, sorted by birth then death.
    n_zero_length : int
        Number of pairs with ``birth == death`` left out of ``pairs``.
    """

    dimension: int
    pairs: tuple[PersistencePair, ...] = ()
    n_zero_length: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.dimension < 0:
            raise ContractViolationError(
                f"Homology degree must be non-negative, got {self.dimension!r}."
            )
        object.__setattr__(
            self, "pairs", tuple(sorted(self.pairs, key=PersistencePair.sort_key))
        )

    @classmethod
    def from_pairs(
        cls, dimension: int, pairs: Iterable[tuple[float, float | None]]
    ) -> PersistenceDiagram:
        """Build a diagram from ``(birth, death)`` tuples."""
        return cls(dimension, tuple(PersistencePair(b, d) for b, d in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[PersistencePair]:
        return iter(self.pairs)

    @property
    def finite(self) -> tuple[PersistencePair, ...]:
        """Pairs with a finite death."""
        return tuple(p for p in self.pairs if p.death is not None)

    @property
    def essential(self) -> tuple[PersistencePair, ...]:
        """Pairs that never die."""
        return tuple(p for p in self.pairs if p.death is None)

    def alive_at(self, alpha: float) -> int:
        """Number of classes alive at ``alpha``, i.e. the Betti number there."""
        return sum(p.alive_at(alpha) for p in self.pairs)

    def truncated(self, cap: float) -> PersistenceDiagram:
        """Diagram of the filtration stopped at ``cap``.

        Deaths above ``cap`` and essential classes die at ``cap``, classes born
        at or after ``cap`` are dropped. The map is 1-Lipschitz, in linear and in
        logarithmic scale, so it never increases a bottleneck distance.
        """
        pairs = [
            PersistencePair(
                p.birth, cap if p.death is None or p.death > cap else p.death
            )
            for p in self.pairs
            if p.birth < cap
        ]
        return PersistenceDiagram(self.dimension, tuple(pairs), self.n_zero_length)

    def to_list(self) -> list[list[float | str]]:
        """``[birth, death]`` rows, with ``"inf"`` for essential classes."""
        return [[p.birth, _INF if p.death is None else p.death] for p in self.pairs]


def diagrams_to_json(diagrams: Sequence[PersistenceDiagram]) -> str:
    """Serialise diagrams to a JSON object keyed by homology degree."""
    payload = {
        str(diagram.dimension): diagram.to_list()
        for diagram in sorted(diagrams, key=lambda d: d.dimension)
    }
    return to_json(payload, indent=2).decode()


def diagrams_from_json(data: str | bytes) -> list[PersistenceDiagram]:
    """Parse the output of :func:`diagrams_to_json`.

    Raises
    ------
    ContractViolationError
        If the document does not describe diagrams.
    """
    try:
        payload = from_json(data)
    except ValueError as exc:
        raise ContractViolationError(f"Invalid diagram JSON: {exc}")
    if not isinstance(payload, dict):
        raise ContractViolationError("Diagram JSON must be an object keyed by degree.")
    diagrams = []
    for key, rows in payload.items():
        try:
            dimension = int(key)
            pairs = [
                (float(birth), None if death == _INF else float(death))
                for birth, death in rows
            ]
        except (TypeError, ValueError):
            raise ContractViolationError(f"Invalid rows for degree {key!r}.")
        diagrams.append(PersistenceDiagram.from_pairs(dimension, pairs))
    return sorted(diagrams, key=lambda d: d.dimension)
