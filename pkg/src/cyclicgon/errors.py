"""Exception types raised by the cyclicgon package."""

from __future__ import annotations


class CyclicgonError(Exception):
    """Base class for all cyclicgon errors."""


class NonPositiveSide(CyclicgonError):
    """A side length is negative or not a finite number."""


class TooFewSides(CyclicgonError):
    """Fewer than three nonzero sides remain after validation."""


class PolygonInequalityViolated(CyclicgonError):
    """The longest side is at least the sum of the others, so no polygon closes."""


class ConvergenceFailure(CyclicgonError):
    """The circumradius root search did not reach its residual tolerance."""


class InconsistentConfig(CyclicgonError):
    """A circumradius configuration does not belong to the given sides."""


class DegenerateArea(CyclicgonError):
    """The polygon collapsed numerically; its area is indistinguishable from zero."""


class RejectionOverflow(CyclicgonError):
    """Rejection sampling failed to produce an admissible angle vector."""


class DomainError(CyclicgonError):
    """An argument lies outside the mathematical domain of the operation."""


class RangeError(CyclicgonError):
    """A requested index range is empty or inverted."""
