"""JSON report of an experiment run."""

from __future__ import annotations

from math import isfinite
from typing import TYPE_CHECKING, Any, Literal

from pydantic import BaseModel, ConfigDict, Field

if TYPE_CHECKING:
    from jlkdist._persistence import InterleavingCertificate

#: Bumped whenever a field is renamed or its meaning changes.
SCHEMA_VERSION = 1

#: ``[birth, death]`` rows per homology degree, ``"inf"`` for essential classes.
DiagramRows = dict[str, list[list[float | str]]]


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class DimensionSummary(_Record):
    """How the target dimension was chosen."""

    ambient_dim: int
    target_dim: int
    rule: str
    requested_dim: int = Field(description="Dimension before clamping to ambient_dim.")
    clamped: bool
    gaussian_width: float | None = None
    gaussian_width_std_error: float | None = None


class DistortionSummary(_Record):
    """All-pairs distortion of the projection."""

    epsilon_target: float
    max_expansion: float
    max_contraction: float
    is_epsilon_distortion: bool
    preserves_squared_distances: bool
    worst_pair: tuple[int, int] | None
    n_pairs: int
    n_coincident: int


class RatioCheck(_Record):
    """Ratios after / before of a family of squared quantities."""

    count: int
    min_ratio: float | None
    max_ratio: float | None
    lower: float
    upper: float
    passes: bool


class PointwiseCheck(RatioCheck):
    """Squared k-distances of the points, before and after projection."""

    k: int


class RadiusCheck(RatioCheck):
    """Squared radii of sampled simplices of a weighted cloud."""

    cloud: Literal["barycentric", "approx"]
    max_card: int
    exhaustive: bool


class SandwichCheck(RatioCheck):
    """Approximate over exact k-distance at random probes."""

    probes: int


class ComplexSummary(_Record):
    """Size of a filtered complex."""

    n_vertices: int
    n_simplices: int
    by_dim: dict[str, int]
    clamped: bool


class CertificateSummary(_Record):
    """Interleaving certificate of the diagrams before and after projection."""

    epsilon: float
    beta: float
    threshold: float
    cap: float | None = None
    log_bottleneck: float | None = Field(
        description="None when no matching of finite cost exists."
    )
    per_degree: list[float | None]
    passes: bool
    matching: list[list[tuple[int | None, int | None]]]
    diagnostics: list[str]

    @classmethod
    def from_certificate(
        cls, certificate: InterleavingCertificate, cap: float | None = None
    ) -> CertificateSummary:
        """Summarise a certificate, infinite distances becoming None."""

        def finite(value: float) -> float | None:
            return value if isfinite(value) else None

        return cls(
            epsilon=certificate.epsilon,
            beta=certificate.beta,
            threshold=certificate.threshold,
            cap=cap,
            log_bottleneck=finite(certificate.log_bottleneck),
            per_degree=[finite(value) for value in certificate.per_degree],
            passes=certificate.passes,
            matching=[list(matching) for matching in certificate.matching],
            diagnostics=list(certificate.diagnostics),
        )


class Implications(_Record):
    """Verdicts of the guarantees and of their common premise.

    Each guarantee is conditional on the projection preserving squared distances
    within ``1 +/- epsilon``; the verdicts are measured independently.
    """

    premise: bool
    pointwise_kdist: bool
    radius_checks: bool
    interleaving: bool
    consistent: bool = Field(
        description="False when the premise holds but a conclusion fails."
    )


class ExperimentReport(_Record):
    """Everything a run measured."""

    schema_version: Literal[1] = SCHEMA_VERSION
    config: dict[str, Any]
    n_points: int
    filtration: str
    projector_kind: str
    seed: int
    dimension: DimensionSummary
    distortion: DistortionSummary
    pointwise_kdist: PointwiseCheck
    radius_checks: RadiusCheck
    approximation_sandwich: SandwichCheck
    complex_before: ComplexSummary
    complex_after: ComplexSummary
    diagrams_before: DiagramRows
    diagrams_after: DiagramRows
    interleaving: CertificateSummary
    implications: Implications
    timings: dict[str, float] = Field(description="Milliseconds per stage.")
