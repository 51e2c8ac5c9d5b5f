"""Random distortion maps, dimension bounds and distortion audits."""

from jlkdist._projection._audit import DistortionReport, audit_distortion
from jlkdist._projection._bounds import gw_dimension, jl_dimension
from jlkdist._projection._projector import (
    Projector,
    ProjectorKind,
    apply,
    identity_projector,
    sample_projector,
)
from jlkdist._projection._width import (
    WidthEstimate,
    difference_set,
    estimate_gaussian_width,
)
