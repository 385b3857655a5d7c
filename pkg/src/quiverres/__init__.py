"""Equivariant free complexes for orbit closures of source-sink quiver representations."""

from .errors import InvariantViolation, JobError, QuiverError, UnsupportedQuiver
from .quiver import (
    Arrow,
    GraphClass,
    Quiver,
    classify,
    euler_bilinear,
    euler_quadratic,
    positive_roots,
    validate_source_sink,
)
from .reps import Decomposition, directed_partition_1step, indecomposable, orbit_codim, orbit_dim
from .resolution import (
    FreeResolution,
    ResolutionTerm,
    assemble_resolution,
    hilbert_consistency,
    thm33_check,
    verdict,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "Decomposition",
    "FreeResolution",
    "GraphClass",
    "InvariantViolation",
    "JobError",
    "Quiver",
    "QuiverError",
    "ResolutionTerm",
    "UnsupportedQuiver",
    "assemble_resolution",
    "classify",
    "directed_partition_1step",
    "euler_bilinear",
    "euler_quadratic",
    "hilbert_consistency",
    "indecomposable",
    "orbit_codim",
    "orbit_dim",
    "positive_roots",
    "thm33_check",
    "validate_source_sink",
    "verdict",
]
