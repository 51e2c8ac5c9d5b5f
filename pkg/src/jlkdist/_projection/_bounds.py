"""Target dimension bounds for distortion maps."""

from __future__ import annotations

import math

from jlkdist._config import JL_CONSTANT
from jlkdist._errors import ContractViolationError

# relative slack absorbing rounding before taking the ceiling
_CEIL_SLACK = 1e-12


def _ceil(value: float) -> int:
    return math.ceil(value * (1.0 - _CEIL_SLACK))


def _check_open_unit(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ContractViolationError(f"{name} must lie in (0, 1), got {value!r}.")


def jl_dimension(n: int, epsilon: float, c: float = JL_CONSTANT) -> int:
    """Target dimension ``ceil(c * ln(n) / epsilon**2)``.

    Parameters
    ----------
    n : int
        Number of points, at least 2.
    epsilon : float
        Distortion, in (0, 1).
    c : float
        Constant of the bound. The bound only fixes the dimension up to this
        constant; the failure rate for a given ``c`` is measured, not assumed.

    Returns
    -------
    d : int
        The target dimension.
    """
    if int(n) != n or n < 2:
        raise ContractViolationError(f"n must be an integer >= 2, got {n!r}.")
    _check_open_unit("epsilon", epsilon)
    if not c > 0:
        raise ContractViolationError(f"The constant c must be positive, got {c!r}.")
    return _ceil(c * math.log(n) / epsilon**2)


def gw_dimension(width: float, delta: float, epsilon: float) -> int:
    """Target dimension for a Gaussian map given a Gaussian width.

    Parameters
    ----------
    width : float
        Gaussian width of the normalised difference set, ``>= 0``.
    delta : float
        Failure probability, in (0, 1).
    epsilon : float
        Distortion, in (0, 1).

    Returns
    -------
    d : int
        ``ceil((width + sqrt(2 ln(2/delta)))**2 / epsilon**2 + 1)``.
    """
    if not width >= 0 or not math.isfinite(width):
        raise ContractViolationError(f"width must be finite and >= 0, got {width!r}.")
    _check_open_unit("delta", delta)
    _check_open_unit("epsilon", epsilon)
    bound = (width + math.sqrt(2.0 * math.log(2.0 / delta))) ** 2 / epsilon**2 + 1.0
    return _ceil(bound)
