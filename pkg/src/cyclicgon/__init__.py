"""Exact and extended-Heron areas of cyclic polygons.

The package recovers the circumscribed circle of a polygon from its side
lengths, evaluates the exact area alongside the extended Heron/Brahmagupta
approximation sqrt(P**(4-n) * prod(P - x_i)), and provides numerical tools
showing that their ratio is 1 for n <= 4, peaks at the regular polygon, and
stays below pi/e.
"""

from .errors import (
    ConvergenceFailure,
    CyclicgonError,
    DegenerateArea,
    DomainError,
    InconsistentConfig,
    NonPositiveSide,
    PolygonInequalityViolated,
    RangeError,
    RejectionOverflow,
    TooFewSides,
)
from .polygon import (
    AreaReport,
    CentralAngles,
    CenterPosition,
    CircumConfig,
    SideLengths,
    central_angles,
    exact_area_from_angles,
    exact_area_from_sides,
    sides_from_angles,
    solve_circumradius,
    validate_sides,
)
from .heron import HeronResult, generalized_heron, heron_from_angles
from .analysis import (
    OptResult,
    RatioReport,
    SequencePoint,
    VerifyReport,
    heron_limit,
    maximize_ratio,
    monte_carlo_verify,
    ratio,
    ratio_curve,
    regular_ratio,
    sample_random_angles,
    sequence_table,
)

__version__ = "0.1.0"

__all__ = [
    "AreaReport",
    "CentralAngles",
    "CenterPosition",
    "CircumConfig",
    "ConvergenceFailure",
    "CyclicgonError",
    "DegenerateArea",
    "DomainError",
    "HeronResult",
    "InconsistentConfig",
    "NonPositiveSide",
    "OptResult",
    "PolygonInequalityViolated",
    "RangeError",
    "RatioReport",
    "RejectionOverflow",
    "SequencePoint",
    "SideLengths",
    "TooFewSides",
    "VerifyReport",
    "central_angles",
    "exact_area_from_angles",
    "exact_area_from_sides",
    "generalized_heron",
    "heron_from_angles",
    "heron_limit",
    "maximize_ratio",
    "monte_carlo_verify",
    "ratio",
    "ratio_curve",
    "regular_ratio",
    "sample_random_angles",
    "sequence_table",
    "sides_from_angles",
    "solve_circumradius",
    "validate_sides",
]
