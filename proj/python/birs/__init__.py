"""Bootstrap-based signal region detection for genetic association studies."""

from ._birs import (
    BirsError,
    DimensionMismatch,
    InconsistentBlocks,
    NoConvergence,
    NullModel,
    SeparationDetected,
    SingularDesign,
    WindowsDontFit,
    compute_score_set,
    fit_null,
    metrics,
    run_dbirs,
    run_sbirs,
    simulate,
)

__all__ = [
    "BirsError",
    "DimensionMismatch",
    "InconsistentBlocks",
    "NoConvergence",
    "NullModel",
    "SeparationDetected",
    "SingularDesign",
    "WindowsDontFit",
    "compute_score_set",
    "fit_null",
    "metrics",
    "run_dbirs",
    "run_sbirs",
    "simulate",
]
