"""Exception hierarchy for jlkdist."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pathlib import Path

    from jlkdist._meb import MebResult


class JlkdistError(Exception):
    """Base class of every error raised by jlkdist."""


class ContractViolationError(JlkdistError, ValueError):
    """Raised when an operation is called outside of its preconditions."""


class BudgetExceededError(ContractViolationError):
    """Raised when a barycentric cloud would exceed the combinatorial budget.

    Parameters
    ----------
    n : int
        Size of the source cloud.
    k : int
        Size of the subsets.
    count : int
        Number of ``k``-subsets, ``C(n, k)``.
    budget : int
        The maximum number of weighted points allowed.
    """

    def __init__(self, n: int, k: int, count: int, budget: int) -> None:
        self.n = n
        self.k = k
        self.count = count
        self.budget = budget
        super().__init__(
            f"combinatorial budget exceeded: C({n}, {k}) = {count} barycenters "
            f"is larger than the budget of {budget}."
        )


class MebConvergenceError(JlkdistError, RuntimeError):
    """Raised when the iterative minimum enclosing ball solver does not converge.

    Parameters
    ----------
    message : str
        Human readable description.
    best : MebResult
        The best iterate reached before giving up.
    simplex : tuple of int | None
        The vertices of the simplex being evaluated, when the solver was called
        while building a filtration.
    """

    def __init__(
        self,
        message: str,
        best: MebResult,
        simplex: tuple[int, ...] | None = None,
    ) -> None:
        self.best = best
        self.residual = best.residual
        self.simplex = simplex
        super().__init__(message)

    def with_simplex(self, simplex: tuple[int, ...]) -> MebConvergenceError:
        """Return a copy of the error pointing at ``simplex``."""
        return MebConvergenceError(
            f"{self.args[0]} (simplex {list(simplex)})", self.best, simplex
        )


class PointCloudParseError(JlkdistError, ValueError):
    """Raised when a point file can not be parsed.

    Parameters
    ----------
    message : str
        Description of the problem.
    path : Path | str
        The file being parsed.
    line : int | None
        1-based line number of the offending row, if any.
    """

    def __init__(self, message: str, path: Path | str, line: int | None = None):
        self.path = str(path)
        self.line = line
        where = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"{where}: {message}")


class ConfigError(JlkdistError, ValueError):
    """Raised when an experiment configuration is invalid."""
