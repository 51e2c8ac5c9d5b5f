"""The projection experiment: filtrations and audits on both sides of a map."""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from math import sqrt
from typing import TYPE_CHECKING

import numpy as np

from jlkdist._config import BAND_SLACK
from jlkdist._errors import ConfigError
from jlkdist._experiment._config import FiltrationMode
from jlkdist._experiment._io import load_points
from jlkdist._experiment._report import (
    CertificateSummary,
    ComplexSummary,
    DimensionSummary,
    DistortionSummary,
    ExperimentReport,
    Implications,
    PointwiseCheck,
    RadiusCheck,
    SandwichCheck,
)
from jlkdist._experiment._sampling import sample_simplices_for_radius_check
from jlkdist._filtration import approx_kdist_cech, exact_kdist_cech, weighted_rips
from jlkdist._kdistance import (
    approx_k_distances,
    assign_approx_weights,
    barycenter_cloud,
    k_distances,
    squared_k_distances,
)
from jlkdist._meb import weighted_meb_batch
from jlkdist._persistence import certify_interleaving, compute_persistence
from jlkdist._projection import (
    ProjectorKind,
    apply,
    audit_distortion,
    difference_set,
    estimate_gaussian_width,
    gw_dimension,
    identity_projector,
    jl_dimension,
    sample_projector,
)

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from numpy.typing import NDArray

    from jlkdist._experiment._config import ExperimentConfig
    from jlkdist._filtration import FilteredComplex
    from jlkdist._geometry import PointCloud, WeightedCloud
    from jlkdist._persistence import PersistenceDiagram
    from jlkdist._projection import Projector

_logger = logging.getLogger(__name__)

#: Bounds of the approximate over the exact k-distance.
SANDWICH_BOUNDS = (1.0 / sqrt(2.0), sqrt(3.0))


@dataclass(frozen=True, slots=True, eq=False)
class ExperimentResult:
    """Report of a run together with the diagrams it summarises.

    Attributes
    ----------
    report : ExperimentReport
        The serialisable report.
    diagrams_before, diagrams_after : list of PersistenceDiagram
        Diagrams of the filtrations of the input and of its image.
    """

    report: ExperimentReport
    diagrams_before: list[PersistenceDiagram]
    diagrams_after: list[PersistenceDiagram]


def run(config: ExperimentConfig) -> ExperimentResult:
    """Run the experiment described by ``config``.

    The points are loaded and projected, the distortion of the projection is
    audited, and the filtration selected by ``config.filtration`` is built on
    both sides with weights recomputed from the projected points. The diagrams
    are compared with an interleaving certificate, and the squared k-distances
    and squared radii of sampled simplices are compared point by point.

    Parameters
    ----------
    config : ExperimentConfig
        The experiment parameters.

    Returns
    -------
    result : ExperimentResult
        The report and the diagrams. Everything but the timings only depends on
        ``config``.

    Raises
    ------
    PointCloudParseError
        If the input can not be parsed.
    BudgetExceededError
        If the barycentric cloud exceeds ``config.budget``.
    MebConvergenceError
        If a weighted minimum enclosing ball can not be computed.
    ConfigError
        If the configuration does not fit the input.
    """
    timings: dict[str, float] = {}
    with _timed(timings, "load"):
        P = load_points(config.input_path, config.input_format)
    _logger.info("Loaded %i points in R^%i.", len(P), P.dim)
    with _timed(timings, "project"):
        dimension, projector = _choose_projection(P, config)
        Q = apply(projector, P)
    with _timed(timings, "distortion"):
        distortion = audit_distortion(P, Q, config.epsilon)
    with _timed(timings, "filtration"):
        before = _filtration(P, config)
        after = _filtration(Q, config)
    with _timed(timings, "persistence"):
        diagrams_before = compute_persistence(before, config.max_homology_degree)
        diagrams_after = compute_persistence(after, config.max_homology_degree)
    with _timed(timings, "interleaving"):
        certificate = certify_interleaving(
            diagrams_before, diagrams_after, config.epsilon, cap=config.alpha_max
        )
    band = (1.0 - config.epsilon - BAND_SLACK, 1.0 + config.epsilon + BAND_SLACK)
    with _timed(timings, "pointwise_kdist"):
        pointwise = PointwiseCheck(
            k=config.k,
            **_ratio_check(
                squared_k_distances(P.coords, P, config.k),
                squared_k_distances(Q.coords, Q, config.k),
                band,
            ),
        )
    with _timed(timings, "radius_checks"):
        radius = _radius_check(P, Q, config, band)
    with _timed(timings, "approximation_sandwich"):
        sandwich = _sandwich_check(P, config)
    premise = distortion.preserves_squared_distances
    conclusions = pointwise.passes and radius.passes and certificate.passes
    if premise and not conclusions:
        _logger.warning(
            "The projection preserves squared distances but a guarantee failed."
        )
    report = ExperimentReport(
        config=config.model_dump(mode="json"),
        n_points=len(P),
        filtration=config.filtration.value,
        projector_kind=projector.kind.value,
        seed=config.seed,
        dimension=dimension,
        distortion=DistortionSummary(
            epsilon_target=distortion.epsilon_target,
            max_expansion=distortion.max_expansion,
            max_contraction=distortion.max_contraction,
            is_epsilon_distortion=distortion.is_epsilon_distortion,
            preserves_squared_distances=distortion.preserves_squared_distances,
            worst_pair=distortion.worst_pair,
            n_pairs=distortion.n_pairs,
            n_coincident=distortion.n_coincident,
        ),
        pointwise_kdist=pointwise,
        radius_checks=radius,
        approximation_sandwich=sandwich,
        complex_before=_complex_summary(before),
        complex_after=_complex_summary(after),
        diagrams_before=_rows(diagrams_before),
        diagrams_after=_rows(diagrams_after),
        interleaving=CertificateSummary.from_certificate(
            certificate, config.alpha_max
        ),
        implications=Implications(
            premise=premise,
            pointwise_kdist=pointwise.passes,
            radius_checks=radius.passes,
            interleaving=certificate.passes,
            consistent=not premise or conclusions,
        ),
        timings=timings,
    )
    return ExperimentResult(report, diagrams_before, diagrams_after)


@contextmanager
def _timed(timings: dict[str, float], stage: str) -> Iterator[None]:
    start = time.perf_counter()
    yield
    timings[stage] = (time.perf_counter() - start) * 1e3
    _logger.debug("Stage %s took %.1f ms.", stage, timings[stage])


def _choose_projection(
    P: PointCloud, config: ExperimentConfig
) -> tuple[DimensionSummary, Projector]:
    ambient = P.dim
    if config.projector_kind is ProjectorKind.IDENTITY:
        if isinstance(config.target_dim, int) and config.target_dim != ambient:
            raise ConfigError(
                f"The identity projector needs target_dim={ambient}, got "
                f"{config.target_dim!r}."
            )
        summary = DimensionSummary(
            ambient_dim=ambient,
            target_dim=ambient,
            rule="identity",
            requested_dim=ambient,
            clamped=False,
        )
        return summary, identity_projector(ambient)
    width = None
    if isinstance(config.target_dim, int):
        if config.target_dim > ambient:
            raise ConfigError(
                f"target_dim {config.target_dim} exceeds the ambient dimension "
                f"{ambient}."
            )
        rule, requested = "explicit", config.target_dim
    elif config.target_dim == "auto-jl":
        rule = "auto-jl"
        requested = jl_dimension(len(P), config.epsilon, config.jl_constant)
    else:
        rule = "auto-gw"
        width = estimate_gaussian_width(
            difference_set(P), config.width_samples, config.seed
        )
        requested = gw_dimension(
            width.estimate + 3.0 * width.std_error, config.delta, config.epsilon
        )
    target = min(requested, ambient)
    if target < requested:
        _logger.warning(
            "The %s dimension %i exceeds the ambient dimension %i, using %i.",
            rule,
            requested,
            ambient,
            ambient,
        )
    summary = DimensionSummary(
        ambient_dim=ambient,
        target_dim=target,
        rule=rule,
        requested_dim=requested,
        clamped=target < requested,
        gaussian_width=None if width is None else width.estimate,
        gaussian_width_std_error=None if width is None else width.std_error,
    )
    projector = sample_projector(ambient, target, config.projector_kind, config.seed)
    return summary, projector


def _filtration(cloud: PointCloud, config: ExperimentConfig) -> FilteredComplex:
    if config.filtration is FiltrationMode.EXACT_CECH:
        return exact_kdist_cech(
            cloud,
            config.k,
            config.max_dim,
            config.alpha_max,
            config.budget,
            n_jobs=config.n_jobs,
        )
    if config.filtration is FiltrationMode.APPROX_CECH:
        return approx_kdist_cech(
            cloud, config.k, config.max_dim, config.alpha_max, n_jobs=config.n_jobs
        )
    weighted = assign_approx_weights(cloud, config.k)
    return weighted_rips(weighted, config.max_dim, config.alpha_max)


def _ratio_check(
    before: NDArray, after: NDArray, band: tuple[float, float]
) -> dict[str, object]:
    valid = before > 0
    ratios = after[valid] / before[valid]
    return {
        "count": int(ratios.size),
        "min_ratio": float(ratios.min()) if ratios.size else None,
        "max_ratio": float(ratios.max()) if ratios.size else None,
        "lower": band[0],
        "upper": band[1],
        "passes": bool(np.all((band[0] <= ratios) & (ratios <= band[1]))),
    }


def _weighted(cloud: PointCloud, config: ExperimentConfig) -> WeightedCloud:
    if config.filtration is FiltrationMode.EXACT_CECH:
        return barycenter_cloud(cloud, config.k, config.budget)
    return assign_approx_weights(cloud, config.k)


def _radius_check(
    P: PointCloud,
    Q: PointCloud,
    config: ExperimentConfig,
    band: tuple[float, float],
) -> RadiusCheck:
    before, after = _weighted(P, config), _weighted(Q, config)
    sample = sample_simplices_for_radius_check(
        before, config.radius_checks, config.radius_max_card, config.seed
    )
    return RadiusCheck(
        cloud=(
            "barycentric"
            if config.filtration is FiltrationMode.EXACT_CECH
            else "approx"
        ),
        max_card=config.radius_max_card,
        exhaustive=sample.exhaustive,
        **_ratio_check(
            rad_sq_of_subsets(before, sample.subsets),
            rad_sq_of_subsets(after, sample.subsets),
            band,
        ),
    )


def rad_sq_of_subsets(
    cloud: WeightedCloud, subsets: Sequence[tuple[int, ...]]
) -> NDArray[np.float64]:
    """Squared radii of vertex subsets of mixed cardinalities, in input order."""
    out = np.empty(len(subsets))
    cards = np.array([len(subset) for subset in subsets], dtype=np.intp)
    for card in np.unique(cards):
        rows = np.flatnonzero(cards == card)
        simplices = np.array([subsets[row] for row in rows], dtype=np.intp)
        out[rows] = weighted_meb_batch(cloud, simplices)
    return out


def _sandwich_check(P: PointCloud, config: ExperimentConfig) -> SandwichCheck:
    lower, upper = SANDWICH_BOUNDS
    rng = np.random.default_rng(config.seed)
    low, high = P.coords.min(axis=0), P.coords.max(axis=0)
    probes = rng.uniform(low, high, size=(config.probes, P.dim))
    if config.probes == 0:
        exact = approx = np.empty(0)
    else:
        exact = k_distances(probes, P, config.k)
        approx = approx_k_distances(probes, assign_approx_weights(P, config.k))
    return SandwichCheck(
        probes=config.probes,
        **_ratio_check(exact, approx, (lower - BAND_SLACK, upper + BAND_SLACK)),
    )


def _complex_summary(K: FilteredComplex) -> ComplexSummary:
    return ComplexSummary(
        n_vertices=K.n_vertices,
        n_simplices=len(K),
        by_dim={str(dim): count for dim, count in sorted(K.count_by_dim().items())},
        clamped=K.clamped,
    )


def _rows(diagrams: Sequence[PersistenceDiagram]) -> dict[str, list]:
    return {str(d.dimension): d.to_list() for d in diagrams}
