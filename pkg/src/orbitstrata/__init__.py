"""Exact computations around moment-map images and Plancherel support for
the families GL(n,R)/(GL(m,R) x GL(k,Z)) and Sp(2n,R)/(Sp(2m,R) x Sp(2k,Z)).
"""

from .exactlin import (
    RationalMatrix,
    SignaturePair,
    SymplecticSpace,
    gram_of,
    is_semisimple,
    rank,
    random_symplectic,
    restrict_gram,
    signature,
)
from .levi import (
    LeviDescriptor,
    PolarizationClass,
    RealFormDescriptor,
    good_range,
    is_center_regular,
    near_root_wall,
    polarization_class,
)
from .momentmap import (
    BlockSpec,
    Elliptic2,
    Hyperbolic2,
    Quad4,
    Witness,
    Zero2,
    elliptic_element,
    gl_companion,
    gl_rank_bound,
    realize,
    sp_complex_membership,
    sp_membership,
    sp_witness,
    verify_witness,
)
from .oracle import OracleConfig
from .plancherel import (
    HCParam,
    SpaceSpec,
    SupportReport,
    SupportStratum,
    build_report,
    discrete_series_verdict,
    harish_chandra_params,
    inf_char_consistent,
    infinitesimal_character,
    moment_levi,
    real_forms,
    stratum_signature,
    support_strata,
    theta_parabolic_roots,
)
from .rootsys import (
    AffinePattern,
    Root,
    RootSystemSpec,
    Weight,
    pairing,
    rho,
    roots,
    weyl_canonical,
    weyl_orbit_intersects_affine,
)

__all__ = [
    "AffinePattern",
    "BlockSpec",
    "Elliptic2",
    "HCParam",
    "Hyperbolic2",
    "LeviDescriptor",
    "OracleConfig",
    "PolarizationClass",
    "Quad4",
    "RationalMatrix",
    "RealFormDescriptor",
    "Root",
    "RootSystemSpec",
    "SignaturePair",
    "SpaceSpec",
    "SupportReport",
    "SupportStratum",
    "SymplecticSpace",
    "Weight",
    "Witness",
    "Zero2",
    "build_report",
    "discrete_series_verdict",
    "elliptic_element",
    "gl_companion",
    "gl_rank_bound",
    "good_range",
    "gram_of",
    "harish_chandra_params",
    "inf_char_consistent",
    "infinitesimal_character",
    "is_center_regular",
    "is_semisimple",
    "moment_levi",
    "near_root_wall",
    "pairing",
    "polarization_class",
    "rank",
    "random_symplectic",
    "real_forms",
    "realize",
    "restrict_gram",
    "rho",
    "roots",
    "signature",
    "sp_complex_membership",
    "sp_membership",
    "sp_witness",
    "stratum_signature",
    "support_strata",
    "theta_parabolic_roots",
    "verify_witness",
    "weyl_canonical",
    "weyl_orbit_intersects_affine",
]

__version__ = "0.1.0"
