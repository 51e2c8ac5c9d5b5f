"""Exact and approximate k-distance."""

from jlkdist._kdistance._approx import (
    approx_k_distance,
    approx_k_distances,
    assign_approx_weights,
)
from jlkdist._kdistance._barycentric import (
    barycenter_cloud,
    k_distance_via_barycenters,
)
from jlkdist._kdistance._exact import (
    KDistanceQueryResult,
    k_distance,
    k_distances,
    squared_k_distances,
)
