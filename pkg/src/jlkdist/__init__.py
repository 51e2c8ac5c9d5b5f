"""Persistent homology of k-distance filtrations under random projections.

The k-distance of a point cloud is realised as a power distance to weighted
points, so that its sublevel sets are unions of balls whose nerves, the weighted
Čech complexes, are built from weighted minimum enclosing balls. Random
projections that nearly preserve squared distances nearly preserve these radii,
and the persistence diagrams before and after projection are compared with a
multiplicative interleaving certificate.
"""

from jlkdist._errors import (
    BudgetExceededError,
    ConfigError,
    ContractViolationError,
    JlkdistError,
    MebConvergenceError,
    PointCloudParseError,
)
from jlkdist._experiment import (
    ExperimentConfig,
    ExperimentReport,
    ExperimentResult,
    FiltrationMode,
    load_points,
    run,
    sample_simplices_for_radius_check,
    write_diagram_svgs,
)
from jlkdist._filtration import (
    FilteredComplex,
    Simplex,
    approx_kdist_cech,
    exact_kdist_cech,
    weighted_cech,
    weighted_rips,
)
from jlkdist._geometry import (
    PointCloud,
    Provenance,
    ProvenanceKind,
    WeightedCloud,
    WeightedPoint,
    barycenter,
    power_distance,
    weighted_pair_distance,
)
from jlkdist._kdistance import (
    approx_k_distance,
    assign_approx_weights,
    barycenter_cloud,
    k_distance,
    k_distance_via_barycenters,
)
from jlkdist._meb import (
    MebResult,
    radius_from_support,
    weighted_meb,
    weighted_meb_batch,
    weighted_meb_exact,
)
from jlkdist._persistence import (
    InterleavingCertificate,
    PersistenceDiagram,
    PersistencePair,
    betti_oracle,
    bottleneck,
    certify_interleaving,
    compute_persistence,
)
from jlkdist._projection import (
    DistortionReport,
    Projector,
    ProjectorKind,
    apply,
    audit_distortion,
    estimate_gaussian_width,
    gw_dimension,
    jl_dimension,
    sample_projector,
)
from jlkdist._version import __version__
