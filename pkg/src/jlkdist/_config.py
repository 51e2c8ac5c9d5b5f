"""Default numerical settings of jlkdist.

The experiment configuration model built on top of these defaults lives in
:mod:`jlkdist._experiment._config`.
"""

from __future__ import annotations

#: Constant ``c`` of the dimension bound ``ceil(c * ln(n) / epsilon**2)``.
JL_CONSTANT: float = 8.0

#: Tolerance on the duality gap of the iterative minimum enclosing ball solver.
MEB_TOL: float = 1e-8
MEB_MAX_ITER: int = 10_000
#: Convex weights below this value are treated as zero.
SUPPORT_THRESHOLD: float = 1e-10
#: Largest simplex handled by the vectorised exact radius solver.
BATCH_MAX_CARDINALITY: int = 6
#: Largest cloud accepted by the enumerating exact solver.
EXACT_MEB_CAP: int = 12

#: Maximum number of barycenters materialised by ``barycenter_cloud``.
BARYCENTER_BUDGET: int = 200_000

#: Relative slack of the distortion audit.
AUDIT_SLACK: float = 1e-12
#: Absolute slack of the preservation bands reported by the experiment.
BAND_SLACK: float = 1e-9
#: Absolute slack of the interleaving certificate.
CERTIFICATE_SLACK: float = 1e-12

RADIUS_CHECK_COUNT: int = 500
RADIUS_CHECK_MAX_CARD: int = 6
WIDTH_SAMPLES: int = 2_000
PROBES: int = 1_000

#: Largest complex accepted by the dense Betti number oracle.
BETTI_ORACLE_CAP: int = 2_000
