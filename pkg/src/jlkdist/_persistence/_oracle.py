"""Betti numbers by dense rank computation, independent of the reduction."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from jlkdist._config import BETTI_ORACLE_CAP
from jlkdist._errors import ContractViolationError

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from jlkdist._filtration import FilteredComplex


def betti_oracle(K: FilteredComplex, alpha: float, degree: int) -> int:
    """Betti number of the sublevel complex at ``alpha`` over Z/2.

    Uses rank-nullity on the dense boundary matrices,
    ``b_q = n_q - rank(d_q) - rank(d_{q+1})``.

    Raises
    ------
    ContractViolationError
        If ``K`` has more than 2000 simplices.
    """
    if len(K) > BETTI_ORACLE_CAP:
        raise ContractViolationError(
            f"The Betti oracle is limited to {BETTI_ORACLE_CAP} simplices, the "
            f"complex has {len(K)}."
        )
    if degree < 0:
        raise ContractViolationError(f"Degree must be non-negative, got {degree!r}.")
    K.check()
    faces = [s.vertices for s in K.sublevel(alpha)]
    by_dim = {q: [f for f in faces if len(f) == q + 1] for q in (degree, degree + 1)}
    if not by_dim[degree]:
        return 0
    below = [f for f in faces if len(f) == degree] if degree > 0 else []
    rank_q = _rank_gf2(_boundary(by_dim[degree], below))
    rank_next = _rank_gf2(_boundary(by_dim[degree + 1], by_dim[degree]))
    return len(by_dim[degree]) - rank_q - rank_next


def _boundary(
    columns: list[tuple[int, ...]], rows: list[tuple[int, ...]]
) -> NDArray[np.bool_]:
    position = {face: i for i, face in enumerate(rows)}
    matrix = np.zeros((len(rows), len(columns)), dtype=bool)
    for j, simplex in enumerate(columns):
        for i in range(len(simplex)):
            matrix[position[simplex[:i] + simplex[i + 1 :]], j] = True
    return matrix


def _rank_gf2(matrix: NDArray[np.bool_]) -> int:
    matrix = matrix.copy()
    n_rows, n_cols = matrix.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.flatnonzero(matrix[rank:, col])
        if candidates.size == 0:
            continue
        pivot = rank + candidates[0]
        matrix[[rank, pivot]] = matrix[[pivot, rank]]
        mask = matrix[:, col].copy()
        mask[rank] = False
        matrix[mask] ^= matrix[rank]
        rank += 1
    return rank
