"""Exact characteristic-class calculus over the parity ring Q[P].

Building blocks: SuperScalar coefficients, truncated graded rings over
a point, a curve, or projective space, super vector bundles via formal
Chern roots, twisted K-classes, a Riemann-Roch engine for split
supercurves, and virtual-dimension calculators for moduli of stable
supermaps.
"""

from .superscalar import ONE, PI, ZERO, NotInvertible, SuperScalar, pi_power
from .chowring import ChowModel, GradedElement, ModelMismatch, NotNilpotent
from .superbundle import NotPurelyOdd, SuperBundle, root_degree
from .ktheory import (
    KClass,
    NormalData,
    ch_twisted,
    j_map,
    pullback_from_point,
    sigma1_normal,
    star_identity,
    star_product,
)
from .grr import (
    InvalidRank,
    NonIntegralTwist,
    SplitSupercurve,
    SuperEuler,
    check_sgrr,
    chi_character_form,
    chi_super,
    gr_module,
    pullback_tangent,
    rr_oracle,
)
from .modulidim import (
    ModuliParams,
    Properness,
    SuperCycleClass,
    TargetSpec,
    bosonic_dimension,
    chi_gauge,
    evaluate_request,
    properness_hint,
    vdim_assembled,
    vdim_closed,
)

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "PI",
    "ZERO",
    "SuperScalar",
    "pi_power",
    "NotInvertible",
    "ChowModel",
    "GradedElement",
    "ModelMismatch",
    "NotNilpotent",
    "SuperBundle",
    "NotPurelyOdd",
    "root_degree",
    "KClass",
    "NormalData",
    "sigma1_normal",
    "j_map",
    "star_product",
    "star_identity",
    "ch_twisted",
    "pullback_from_point",
    "SplitSupercurve",
    "SuperEuler",
    "NonIntegralTwist",
    "InvalidRank",
    "gr_module",
    "chi_super",
    "chi_character_form",
    "rr_oracle",
    "check_sgrr",
    "pullback_tangent",
    "ModuliParams",
    "TargetSpec",
    "SuperCycleClass",
    "Properness",
    "chi_gauge",
    "vdim_closed",
    "vdim_assembled",
    "bosonic_dimension",
    "properness_hint",
    "evaluate_request",
]
