"""Exact Cartan calculus, homology and modular classes of Lie algebroids."""

from ._core import (
    Algebroid,
    Bivector,
    ChartMismatch,
    DivisionByZero,
    ExpressionSyntaxError,
    JacobiViolation,
    LacalcError,
    NonInvertibleVolume,
    NotClosed,
    NotFiniteDimensional,
    RankMismatch,
    SchemaError,
    SingularMetric,
    UnknownVariable,
)

__version__ = "0.1.0"

__all__ = [
    "Algebroid",
    "Bivector",
    "ChartMismatch",
    "DivisionByZero",
    "ExpressionSyntaxError",
    "JacobiViolation",
    "LacalcError",
    "NonInvertibleVolume",
    "NotClosed",
    "NotFiniteDimensional",
    "RankMismatch",
    "SchemaError",
    "SingularMetric",
    "UnknownVariable",
]
