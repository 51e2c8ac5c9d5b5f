"""Weighted points, power distances and barycenters."""

from jlkdist._geometry._power import (
    barycenter,
    barycenters,
    convex_spread,
    pairwise_spread,
    power_distance,
    power_distance_matrix,
    simplex_power_matrices,
    squared_distance,
    weighted_pair_distance,
)
from jlkdist._geometry._types import (
    PointCloud,
    Provenance,
    ProvenanceKind,
    WeightedCloud,
    WeightedPoint,
    as_point,
)
