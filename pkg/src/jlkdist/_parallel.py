"""Optional parallel evaluation of independent batches."""

from __future__ import annotations

from typing import TYPE_CHECKING, TypeVar

from joblib import Parallel, cpu_count, delayed

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable

_In = TypeVar("_In")
_Out = TypeVar("_Out")


def parallel_map(
    function: Callable[[_In], _Out], inputs: Iterable[_In], n_jobs: int | None
) -> list[_Out]:
    """Apply ``function`` to every input, in order.

    Parameters
    ----------
    function : callable
        The function to evaluate.
    inputs : iterable
        Its inputs.
    n_jobs : int | None
        Number of workers. ``None`` or ``1`` runs sequentially, ``-1`` uses every
        core. Workers are threads: the batches are numpy-bound and the results
        are collected in input order, independent of the schedule.

    Returns
    -------
    outputs : list
        ``[function(x) for x in inputs]``.
    """
    if n_jobs is None or n_jobs == 1:
        return [function(inp) for inp in inputs]
    n_jobs = cpu_count() if n_jobs < 0 else min(cpu_count(), n_jobs)
    return Parallel(n_jobs=n_jobs, backend="threading")(
        delayed(function)(inp) for inp in inputs
    )
