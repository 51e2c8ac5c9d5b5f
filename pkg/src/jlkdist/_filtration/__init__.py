from jlkdist._filtration._build import (
    approx_kdist_cech,
    exact_kdist_cech,
    two_point_rad_sq,
    weighted_cech,
    weighted_rips,
)
from jlkdist._filtration._complex import FilteredComplex, Simplex
