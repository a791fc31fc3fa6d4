"""Ordinal relative belief entropy for Dempster-Shafer frames of discernment."""

from .classic import deng_entropy, dp_hartley_entropy
from .frames import (
    BasicProbabilityAssignment,
    FocalElement,
    FrameError,
    FrameOfDiscernment,
    bpa_from_masses,
    build_frame,
    make_focal,
    validate_bpa,
)
from .ordinal import (
    NormalizedValues,
    OrdinalAssignment,
    OrdinalEntropyReport,
    assign_weights,
    compute_ordinal_entropy,
    individual_iu,
    integral_inu,
    normalize_values,
    pairwise_relative_entropy,
)
from .permutation import PermutationReport, average_inu, enumerate_orderings

__all__ = [
    "BasicProbabilityAssignment",
    "FocalElement",
    "FrameError",
    "FrameOfDiscernment",
    "NormalizedValues",
    "OrdinalAssignment",
    "OrdinalEntropyReport",
    "PermutationReport",
    "assign_weights",
    "average_inu",
    "bpa_from_masses",
    "build_frame",
    "compute_ordinal_entropy",
    "deng_entropy",
    "dp_hartley_entropy",
    "enumerate_orderings",
    "individual_iu",
    "integral_inu",
    "make_focal",
    "normalize_values",
    "pairwise_relative_entropy",
    "validate_bpa",
]
