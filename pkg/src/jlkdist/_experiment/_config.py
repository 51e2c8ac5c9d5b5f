"""Validated configuration of an experiment run."""

from __future__ import annotations

from enum import StrEnum
from pathlib import Path
from typing import Literal

from pydantic import Field, PositiveInt, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from jlkdist._config import (
    BARYCENTER_BUDGET,
    JL_CONSTANT,
    PROBES,
    RADIUS_CHECK_COUNT,
    RADIUS_CHECK_MAX_CARD,
    WIDTH_SAMPLES,
)
from jlkdist._errors import ConfigError
from jlkdist._projection import ProjectorKind


class FiltrationMode(StrEnum):
    """Filtration built on both sides of the projection."""

    EXACT_CECH = "exact-cech"
    APPROX_CECH = "approx-cech"
    RIPS = "rips"


class ExperimentConfig(BaseSettings):
    """Parameters of :func:`~jlkdist.run`.

    Every field can be set from the environment with the ``JLKDIST_`` prefix, e.g.
    ``JLKDIST_EPSILON=0.2``. Explicit values take precedence.
    """

    model_config = SettingsConfigDict(env_prefix="JLKDIST_", frozen=True)

    input_path: Path
    input_format: Literal["auto", "csv", "whitespace"] = "auto"
    k: PositiveInt = 2
    epsilon: float = Field(default=0.25, gt=0, lt=1)
    delta: float = Field(default=0.1, gt=0, lt=1)
    projector_kind: ProjectorKind = ProjectorKind.GAUSSIAN
    seed: int = Field(default=0, ge=0)
    target_dim: Literal["auto-jl", "auto-gw"] | PositiveInt = "auto-jl"
    jl_constant: float = Field(default=JL_CONSTANT, gt=0)
    filtration: FiltrationMode = FiltrationMode.EXACT_CECH
    max_homology_degree: int = Field(default=1, ge=0)
    alpha_max: float = Field(gt=0, allow_inf_nan=False)
    budget: PositiveInt = BARYCENTER_BUDGET
    probes: int = Field(default=PROBES, ge=0)
    radius_checks: int = Field(default=RADIUS_CHECK_COUNT, ge=0)
    radius_max_card: int = Field(default=RADIUS_CHECK_MAX_CARD, ge=2, le=6)
    width_samples: int = Field(default=WIDTH_SAMPLES, ge=100)
    n_jobs: int | None = None

    @model_validator(mode="after")
    def _check_dimension_mode(self) -> ExperimentConfig:
        """Check that the projection and its dimension rule agree."""
        if self.target_dim == "auto-gw" and self.projector_kind is not (
            ProjectorKind.GAUSSIAN
        ):
            raise ValueError(
                "target_dim 'auto-gw' relies on Gaussian width bounds and needs a "
                f"gaussian projector, got {self.projector_kind.value!r}"
            )
        return self

    @property
    def max_dim(self) -> int:
        """Largest simplex dimension, one above the largest homology degree."""
        return self.max_homology_degree + 1


def make_config(**values: object) -> ExperimentConfig:
    """Build a configuration, turning validation failures into ConfigError."""
    try:
        return ExperimentConfig(**values)
    except ValidationError as exc:
        details = "; ".join(
            f"{'.'.join(map(str, err['loc'])) or 'config'}: {err['msg']}"
            for err in exc.errors()
        )
        raise ConfigError(f"Invalid experiment configuration: {details}")
