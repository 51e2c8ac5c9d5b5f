"""End-to-end projection experiments."""

from jlkdist._experiment._config import ExperimentConfig, FiltrationMode, make_config
from jlkdist._experiment._io import load_points
from jlkdist._experiment._plot import plot_diagram, write_diagram_svgs
from jlkdist._experiment._report import SCHEMA_VERSION, ExperimentReport
from jlkdist._experiment._run import (
    SANDWICH_BOUNDS,
    ExperimentResult,
    rad_sq_of_subsets,
    run,
)
from jlkdist._experiment._sampling import (
    SimplexSample,
    sample_simplices_for_radius_check,
)
