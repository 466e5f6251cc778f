"""Exact computation of contact-surgery invariants and cosmetic-surgery
obstructions: slope calculus, Farey-graph classification data, surgery
presentations, and the chi / sigma / c1^2 / d3 invariants, all in exact
integer and rational arithmetic."""

__version__ = "0.1.0"

from .slopes import (
    INFINITY,
    CosmeticSlopeSet,
    Slope,
    SlopeError,
    canonical_slope,
    cs_set,
    lens_parameters,
    mod_inverse,
    neg_cf_expand,
    neg_cf_value,
    parse_slope,
    rolfsen_twist,
    same_lens_space,
)
from .farey import (
    ANTICLOCKWISE,
    CLOCKWISE,
    DecoratedFareyPath,
    cf_blocks,
    count_tight_lens,
    count_tight_lens_pq,
    count_tight_solid_torus,
    count_tight_thickened_torus,
    is_edge,
    minimal_path,
    shorten,
)
from .surgery import (
    ContactZeroError,
    IntersectionForm,
    KnotMetadata,
    LegendrianData,
    SurgeryPresentation,
    convert,
    enumerate_rotations,
    linking_matrix,
    smooth_recovery,
)
from .invariants import D3Result, c_squared, d3, d3_spectrum, euler_char
from .cosmetic import (
    CosmeticVerdict,
    UnknotSurgeryClass,
    candidate_slopes,
    check_pair,
    rot_range,
    scan,
    solve_d3_equation,
    unknot_classify,
)
from .closedforms import verify_closed_forms
from .regressions import verify_d3_regressions
