"""Python bindings for the thinseq numerical core."""

from ._core import (
    ConfigError,
    DomainError,
    GapPoint,
    NonInterpolatingError,
    Sequence,
    analyze_csv,
    carleson_mu,
    deltas,
    earl_bound,
    eis_constant,
    generate,
    min_norm_interpolate,
    pseudo_distance,
    riesz_bounds,
    verify,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "GapPoint",
    "NonInterpolatingError",
    "Sequence",
    "analyze_csv",
    "carleson_mu",
    "deltas",
    "earl_bound",
    "eis_constant",
    "generate",
    "min_norm_interpolate",
    "pseudo_distance",
    "riesz_bounds",
    "verify",
]
