"""Compile finite group presentations into positive Dehn-twist
factorizations (Lefschetz fibration monodromies) and estimate the
fiber-genus invariant of the group."""

from .words import Letter, Word
from .presentations import (
    AbelianInvariants,
    GroupPresentation,
    abelianization,
    count_homomorphisms,
    iso_evidence,
    parse_presentation,
    serialize_presentation,
    tietze_simplify,
)
from .surface import CurveRef, SurfaceModel, Witness, curve_catalog, surface_relator
from .monodromy import (
    Factorization,
    FiberSumSpec,
    TwistFactor,
    base_factorization,
    euler_characteristic,
    fiber_sum,
    homology_image,
    resolve_c_exponent,
    twist_substitution,
)
from .pi1 import Pi1Input, pi1_presentation, validate_witnesses
from .loops import LoopPlan, compile_presentation, relator_loops, special_loops
from .bounds import Family, GenusBounds, genus_bounds, kotschick_bounds

__all__ = [
    "AbelianInvariants",
    "CurveRef",
    "Factorization",
    "Family",
    "FiberSumSpec",
    "GenusBounds",
    "GroupPresentation",
    "Letter",
    "LoopPlan",
    "Pi1Input",
    "SurfaceModel",
    "TwistFactor",
    "Witness",
    "Word",
    "abelianization",
    "base_factorization",
    "compile_presentation",
    "count_homomorphisms",
    "curve_catalog",
    "euler_characteristic",
    "fiber_sum",
    "genus_bounds",
    "homology_image",
    "iso_evidence",
    "kotschick_bounds",
    "parse_presentation",
    "pi1_presentation",
    "relator_loops",
    "resolve_c_exponent",
    "serialize_presentation",
    "special_loops",
    "surface_relator",
    "tietze_simplify",
    "twist_substitution",
    "validate_witnesses",
]
