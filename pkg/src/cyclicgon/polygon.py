"""Cyclic polygon geometry from side lengths.

A convex-or-reflex polygon inscribed in a circle is determined, up to congruence
and reordering, by its side lengths.  Each side of length x subtends a central
angle alpha with x = 2 R sin(alpha / 2), and the signed area is
(R^2 / 2) * sum(sin(alpha_i)).  This module validates side lists, recovers the
circumradius and central angles by a bracketed root search, and evaluates the
exact area from either representation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    ConvergenceFailure,
    DegenerateArea,
    InconsistentConfig,
    NonPositiveSide,
    PolygonInequalityViolated,
    TooFewSides,
)

__all__ = [
    "TWO_PI",
    "CenterPosition",
    "SideLengths",
    "CentralAngles",
    "CircumConfig",
    "AreaReport",
    "validate_sides",
    "solve_circumradius",
    "central_angles",
    "sides_from_angles",
    "exact_area_from_angles",
    "exact_area_from_sides",
]

TWO_PI = 2.0 * math.pi

# Tolerances used across the package.  Angle sums are checked in radians.
ANGLE_SUM_TOL = 1e-10      # allowed |sum(alpha) - 2*pi| on CentralAngles
BOUNDARY_TOL = 1e-12       # angle-sum surplus below which the center sits on a side
SOLVER_WIDTH_TOL = 1e-14   # relative bracket width at bisection termination
SOLVER_RESIDUAL_TOL = 1e-12  # radians, residual of the governing angle equation
DEGENERATE_AREA_TOL = 1e-15  # area <= tol * R^2 counts as collapsed

_MAX_DOUBLINGS = 200
_MAX_BISECTIONS = 200


class CenterPosition(enum.Enum):
    """Location of the circumcircle center relative to the polygon."""

    INSIDE = "inside"
    BOUNDARY = "boundary"  # center on the longest side, whose central angle is pi
    OUTSIDE = "outside"    # center beyond the longest side, whose central angle is reflex


def _check_side_values(values: tuple[float, ...]) -> None:
    for i, v in enumerate(values):
        if not (math.isfinite(v) and v > 0.0):
            raise NonPositiveSide(f"side {i} is {v!r}; validated sides must be finite and positive")
    if len(values) < 3:
        raise TooFewSides(f"need at least 3 nonzero sides, got {len(values)}")
    m = max(range(len(values)), key=values.__getitem__)
    rest = math.fsum(values) - values[m]
    if values[m] >= rest:
        raise PolygonInequalityViolated(
            f"side {m} (length {values[m]!r}) is not shorter than the sum "
            f"of the remaining sides ({rest!r}); no inscribed polygon closes"
        )


@dataclass(frozen=True)
class SideLengths:
    """Validated side lengths of a cyclic polygon.

    Order is preserved for reporting, but every quantity computed from an
    instance depends only on the multiset of lengths.
    """

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        _check_side_values(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def semi_perimeter(self) -> float:
        return 0.5 * math.fsum(self.values)

    @property
    def longest_index(self) -> int:
        return max(range(len(self.values)), key=self.values.__getitem__)


@dataclass(frozen=True)
class CentralAngles:
    """Central angles, in radians, subtended by the sides of a cyclic polygon.

    Angles are positive, sum to 2*pi within ANGLE_SUM_TOL, and at most one
    entry may reach or exceed pi (the reflex entry of a center-outside
    polygon, or the straight angle of a center-on-side one).
    """

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 3:
            raise ValueError(f"need at least 3 central angles, got {len(self.values)}")
        for i, a in enumerate(self.values):
            if not (math.isfinite(a) and 0.0 < a < TWO_PI):
                raise ValueError(f"angle {i} is {a!r}; angles must lie strictly inside (0, 2*pi)")
        total = math.fsum(self.values)
        if abs(total - TWO_PI) > ANGLE_SUM_TOL:
            raise ValueError(f"angles sum to {total!r}, not 2*pi within {ANGLE_SUM_TOL}")
        if sum(1 for a in self.values if a >= math.pi) > 1:
            raise ValueError("more than one angle reaches pi; a cyclic polygon has at most one")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def reflex_index(self) -> int | None:
        """Index of the reflex entry (angle > pi), or None when all are convex."""
        for i, a in enumerate(self.values):
            if a > math.pi:
                return i
        return None


@dataclass(frozen=True)
class CircumConfig:
    """Circumradius together with the center position classification."""

    radius: float
    center_position: CenterPosition

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"radius is {self.radius!r}; it must be finite and positive")


@dataclass(frozen=True)
class AreaReport:
    """Exact area, its approximation, and the comparison between the two."""

    exact: float
    approx: float
    ratio: float
    rel_error: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.exact) and self.exact > 0.0):
            raise ValueError(f"exact area is {self.exact!r}; it must be finite and positive")


def validate_sides(raw: Iterable[float]) -> SideLengths:
    """Check and normalize a list of proposed side lengths.

    Zero entries are dropped (a zero chord removes a vertex without changing
    the polygon).  Negative or non-finite entries raise NonPositiveSide naming
    the offending position in the input.  At least three sides must remain and
    the longest must be shorter than the sum of the others.
    """
    kept: list[float] = []
    for i, v in enumerate(raw):
        v = float(v)
        if v == 0.0:
            continue
        if not (math.isfinite(v) and v > 0.0):
            raise NonPositiveSide(f"side {i} is {v!r}; sides must be finite and nonnegative")
        kept.append(v)
    return SideLengths(tuple(kept))


def _as_side_lengths(sides: SideLengths | Iterable[float]) -> SideLengths:
    if isinstance(sides, SideLengths):
        return sides
    return validate_sides(sides)


def _as_central_angles(angles: CentralAngles | Iterable[float]) -> CentralAngles:
    if isinstance(angles, CentralAngles):
        return angles
    return CentralAngles(tuple(float(a) for a in angles))


def _solve_bracketed(
    f: Callable[[float], float],
    df: Callable[[float], float],
    r_min: float,
    r_start: float,
) -> float:
    """Root of a monotone angle-sum residual on (r_min, infinity).

    Bisection with an upper bound found by doubling, then a guarded Newton
    polish confined to the final bracket.
    """
    lo = r_min * (1.0 + 1e-15)
    flo = f(lo)
    if flo == 0.0:
        return lo
    sign_lo = flo > 0.0
    hi = r_start
    fhi = f(hi)
    doublings = 0
    while fhi != 0.0 and (fhi > 0.0) == sign_lo:
        doublings += 1
        if doublings > _MAX_DOUBLINGS:
            raise ConvergenceFailure("no sign change found while expanding the radius bracket")
        lo, flo = hi, fhi
        hi *= 2.0
        fhi = f(hi)
    for _ in range(_MAX_BISECTIONS):
        if hi - lo <= SOLVER_WIDTH_TOL * hi:
            break
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == sign_lo:
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    r = 0.5 * (lo + hi)
    fr = f(r)
    # Newton polish; bisection already meets tolerance, this trims the last ulps.
    for _ in range(3):
        if fr == 0.0:
            break
        slope = df(r)
        if not math.isfinite(slope) or slope == 0.0:
            break
        r_next = r - fr / slope
        if not (lo <= r_next <= hi):
            break
        f_next = f(r_next)
        if abs(f_next) >= abs(fr):
            break
        r, fr = r_next, f_next
    return r


def solve_circumradius(sides: SideLengths | Iterable[float]) -> CircumConfig:
    """Recover the circumradius of the cyclic polygon with the given sides.

    The smallest conceivable radius is half the longest side.  The sign of the
    angle-sum surplus at that radius decides whether the center lies inside
    the polygon, on the longest side, or outside; the matching angle-sum
    equation is then solved for R by a bracketed search.
    """
    s = _as_side_lengths(sides)
    x = np.asarray(s.values, dtype=float)
    m = s.longest_index
    xm = float(x[m])
    rest = np.delete(x, m)

    # Surplus of the inscribed angle sum over pi at R = xm / 2.
    surplus = 0.5 * math.pi + float(np.arcsin(rest / xm).sum()) - math.pi
    if abs(surplus) < BOUNDARY_TOL:
        return CircumConfig(0.5 * xm, CenterPosition.BOUNDARY)

    if surplus > 0.0:
        position = CenterPosition.INSIDE

        def f(r: float) -> float:
            return float(2.0 * np.arcsin(np.minimum(x / (2.0 * r), 1.0)).sum()) - TWO_PI

        def df(r: float) -> float:
            t = x / (2.0 * r)
            c = np.sqrt(np.maximum(1.0 - t * t, 0.0))
            if np.any(c == 0.0):
                return math.inf
            return float(-(x / (c * r * r)).sum())

    else:
        position = CenterPosition.OUTSIDE

        # The longest side's angle is reflex: alpha_m = 2*pi - sum(others)
        # turns the closure condition into sum_others asin = asin for side m.
        def f(r: float) -> float:
            return float(np.arcsin(np.minimum(rest / (2.0 * r), 1.0)).sum()) - math.asin(
                min(xm / (2.0 * r), 1.0)
            )

        def df(r: float) -> float:
            t = rest / (2.0 * r)
            c = np.sqrt(np.maximum(1.0 - t * t, 0.0))
            tm = xm / (2.0 * r)
            cm = math.sqrt(max(1.0 - tm * tm, 0.0))
            if cm == 0.0 or np.any(c == 0.0):
                return math.inf
            return float(-(rest / (2.0 * c * r * r)).sum() + xm / (2.0 * cm * r * r))

    r = _solve_bracketed(f, df, 0.5 * xm, xm)
    if abs(f(r)) >= SOLVER_RESIDUAL_TOL:
        raise ConvergenceFailure(
            f"radius search stalled at R={r!r} with angle residual {f(r)!r} rad"
        )
    return CircumConfig(r, position)


def central_angles(
    sides: SideLengths | Iterable[float], config: CircumConfig
) -> CentralAngles:
    """Central angles of the polygon with the given sides and circumradius.

    The configuration must come from the same sides; a radius smaller than
    half of any side raises InconsistentConfig.
    """
    s = _as_side_lengths(sides)
    x = np.asarray(s.values, dtype=float)
    t = x / (2.0 * config.radius)
    bad = np.flatnonzero(t > 1.0 + 1e-12)
    if bad.size:
        i = int(bad[0])
        raise InconsistentConfig(
            f"side {i} (length {x[i]!r}) exceeds the circle diameter {2.0 * config.radius!r}"
        )
    a = 2.0 * np.arcsin(np.minimum(t, 1.0))
    if config.center_position is CenterPosition.OUTSIDE:
        m = s.longest_index
        a[m] = TWO_PI - (float(a.sum()) - float(a[m]))
    return CentralAngles(tuple(float(v) for v in a))


def sides_from_angles(
    angles: CentralAngles | Iterable[float], radius: float
) -> SideLengths:
    """Chord lengths 2 R sin(alpha/2) for each central angle."""
    ang = _as_central_angles(angles)
    radius = float(radius)
    if not (math.isfinite(radius) and radius > 0.0):
        raise ValueError(f"radius is {radius!r}; it must be finite and positive")
    a = np.asarray(ang.values, dtype=float)
    x = 2.0 * radius * np.sin(0.5 * a)
    return SideLengths(tuple(float(v) for v in x))


def exact_area_from_angles(
    angles: CentralAngles | Iterable[float], radius: float
) -> float:
    """Exact area (R^2 / 2) * sum(sin(alpha_i)).

    A reflex angle has a negative sine, so the triangle cut off beyond the
    longest side is subtracted, matching the vertex-coordinate (shoelace)
    area of the polygon.
    """
    ang = _as_central_angles(angles)
    radius = float(radius)
    if not (math.isfinite(radius) and radius > 0.0):
        raise ValueError(f"radius is {radius!r}; it must be finite and positive")
    a = np.asarray(ang.values, dtype=float)
    area = 0.5 * radius * radius * float(np.sin(a).sum())
    if area <= DEGENERATE_AREA_TOL * radius * radius:
        raise DegenerateArea(f"area {area!r} is numerically indistinguishable from zero")
    return area


def exact_area_from_sides(sides: SideLengths | Iterable[float]) -> float:
    """Exact area of the cyclic polygon with the given side lengths."""
    s = _as_side_lengths(sides)
    config = solve_circumradius(s)
    return exact_area_from_angles(central_angles(s, config), config.radius)
