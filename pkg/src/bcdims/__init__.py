"""Conductors of quadratic base change and dimensions of base-change Bianchi newform spaces."""

__version__ = "0.1.0"

from .bianchi import BianchiDimReport, BianchiSetup, bianchi_weight_to_elliptic, bs_bc_dim
from .conductor import (
    BCLevelReport,
    LocalCharData,
    PrincipalSeries,
    Special,
    Supercuspidal,
    UnramifiedPS,
    ai_conductor,
    bc_char_conductor,
    bc_level,
    bc_local_conductor,
    bc_ps_conductor,
    bc_special_conductor,
    bc_supercuspidal_conductor,
)
from .errors import BCDimsError, InternalConsistencyError, InvalidInput, UnsupportedInput
from .newspace import LevelSpec, dim_corr, dim_new_omega, dim_new_trivial
from .quad_local import (
    ExtKind,
    ImagQuadField,
    QuadExtClass,
    RelQuadExt,
    Splitting,
    compositum_over,
    kronecker,
    localize,
    rel_data,
    splitting_type,
)
from .repmult import (
    Parity,
    RepData,
    cuspidal_corr,
    multiplicity,
    ps_omega,
    steinberg_minus_trivial,
    tensor,
    trivial,
    weight_coeffs,
)
