"""Boundary matrix reduction over Z/2."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from jlkdist._errors import ContractViolationError
from jlkdist._persistence._diagram import PersistenceDiagram, PersistencePair

if TYPE_CHECKING:
    from jlkdist._filtration import FilteredComplex

_logger = logging.getLogger(__name__)


def compute_persistence(
    K: FilteredComplex, max_degree: int
) -> list[PersistenceDiagram]:
    """Persistence diagrams of a filtered complex.

    Columns of the boundary matrix are reduced left to right in filtration
    order, adding earlier columns with the same lowest row until the lowest row
    is new. A reduced column pairs its simplex with the simplex of its lowest
    row.

    Parameters
    ----------
    K : FilteredComplex
        The filtered complex.
    max_degree : int
        Largest homology degree to report. Classes of degree ``K.max_dim`` can
        not die in ``K`` and are all essential.

    Returns
    -------
    diagrams : list of PersistenceDiagram
        One diagram per degree ``0..max_degree``. Pairs born and killed at the
        same value are left out and counted in ``n_zero_length``.

    Raises
    ------
    ContractViolationError
        If ``K`` is not sorted in filtration order or misses a face.
    """
    if max_degree < 0:
        raise ContractViolationError(
            f"max_degree must be non-negative, got {max_degree!r}."
        )
    index = K.check()
    simplices = K.simplices
    pivots: dict[int, int] = {}
    columns: dict[int, set[int]] = {}
    for j, simplex in enumerate(simplices):
        if simplex.dim == 0 or simplex.dim > max_degree + 1:
            continue
        column = {index[facet] for facet in simplex.facets()}
        while column:
            low = max(column)
            if low not in pivots:
                break
            column ^= columns[pivots[low]]
        if column:
            low = max(column)
            pivots[low] = j
            columns[j] = column
    pairs: list[list[PersistencePair]] = [[] for _ in range(max_degree + 1)]
    zero_length = [0] * (max_degree + 1)
    for birth, death in pivots.items():
        degree = simplices[birth].dim
        if simplices[birth].value == simplices[death].value:
            zero_length[degree] += 1
            continue
        pairs[degree].append(
            PersistencePair(simplices[birth].value, simplices[death].value)
        )
    for j, simplex in enumerate(simplices):
        if simplex.dim > max_degree or j in columns or j in pivots:
            continue
        pairs[simplex.dim].append(PersistencePair(simplex.value))
    _logger.debug(
        "Reduced %i columns, %i pairs and %i zero-length pairs.",
        len(simplices),
        sum(map(len, pairs)),
        sum(zero_length),
    )
    return [
        PersistenceDiagram(degree, tuple(pairs[degree]), zero_length[degree])
        for degree in range(max_degree + 1)
    ]
