"""Result record of the weighted minimum enclosing ball solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from numpy.typing import NDArray


@dataclass(frozen=True, slots=True, eq=False)
class MebResult:
    """Weighted minimum enclosing ball of a weighted cloud.

    Attributes
    ----------
    center : array of shape (dim,)
        The unique minimiser of ``x -> max_i D(x, p_i)``.
    rad_sq : float
        The minimum, i.e. the squared radius. It may be negative for clouds with
        positive weights, in which case the ball is imaginary.
    support : tuple of (int, float)
        Indices of the weighted points the center is a convex combination of,
        with their strictly positive coefficients summing to 1.
    iterations : int
        Number of solver iterations (candidate supports for the exact solver).
    residual : float
        ``rad_sq - 1/2 sum_ij l_i l_j D(p_i, p_j)``, the duality gap of the
        certificate carried by ``support``.
    """

    center: NDArray[np.float64]
    rad_sq: float
    support: tuple[tuple[int, float], ...]
    iterations: int
    residual: float

    @property
    def imaginary(self) -> bool:
        """Whether the squared radius is negative."""
        return self.rad_sq < 0

    @property
    def support_indices(self) -> tuple[int, ...]:
        """Indices of the support."""
        return tuple(index for index, _ in self.support)

    @property
    def lambdas(self) -> NDArray[np.float64]:
        """Coefficients of the support, in the order of :attr:`support`."""
        return np.array([weight for _, weight in self.support])
