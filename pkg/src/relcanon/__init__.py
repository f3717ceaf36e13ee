"""Exact invariants of relative canonical resolutions of curves on rational normal scrolls."""

from .classifier import (
    ModelViolation,
    QuadricDecomposition,
    Verdict,
    VerdictTag,
    classify,
    conic_discriminant4,
    conjecture_spread_bound,
    decompose_quadric_bundle,
    full_profile,
    quadric_generator_count,
)
from .cohomology import recover_degrees
from .invariants import (
    Geometry,
    GonalityInput,
    ResolutionProfile,
    SplittingType,
    balanced_splitting,
    beta_rank,
    deg_syzygy_closed,
    derive_geometry,
)
from .sweep import RegionRecord, emit_region_svg, emit_table, sweep_region

__version__ = "0.1.0"
