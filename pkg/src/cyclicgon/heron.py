"""Extended Heron area approximation for cyclic polygons.

With semi-perimeter P and sides x_1..x_n, the approximation is

    S = sqrt(P**(4 - n) * (P - x_1) * ... * (P - x_n))

which reproduces Heron's triangle formula at n = 3 and Brahmagupta's cyclic
quadrilateral formula at n = 4, and overestimates the exact area for larger n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .polygon import CentralAngles, SideLengths, _as_central_angles, _as_side_lengths

__all__ = ["HeronResult", "generalized_heron", "heron_from_angles"]


@dataclass(frozen=True)
class HeronResult:
    """Approximate area together with the inputs that fix its scale."""

    approx_area: float
    semi_perimeter: float
    n: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.approx_area) and self.approx_area >= 0.0):
            raise ValueError(f"approximate area is {self.approx_area!r}; it must be finite and nonnegative")


def generalized_heron(sides: SideLengths | Iterable[float]) -> HeronResult:
    """Evaluate sqrt(P**(4-n) * prod(P - x_i)) in the log domain.

    Validation guarantees P > x_i for every side, so each log argument is
    positive.  Working with logarithms keeps the P**(4-n) factor from
    overflowing or underflowing for many-sided or extremely scaled polygons.
    """
    s = _as_side_lengths(sides)
    # Sorting fixes the summation order, so permuted inputs agree to the last
    # bit; the semi-perimeter from fsum is order independent already.
    x = np.sort(np.asarray(s.values, dtype=float))
    p = s.semi_perimeter
    n = len(s)
    log_area = 0.5 * ((4 - n) * math.log(p) + float(np.log(p - x).sum()))
    return HeronResult(math.exp(log_area), p, n)


def heron_from_angles(
    angles: CentralAngles | Iterable[float], radius: float
) -> HeronResult:
    """Same approximation expressed through central angles.

    Substituting x_i = 2 R sin(alpha_i / 2) gives P = R * T with
    T = sum(sin(alpha_i / 2)) and

        S = R**2 * T**2 * prod(1 - 2 sin(alpha_i / 2) / T) ** (1/2)

    This form never constructs the sides, which is what the sampling and
    optimization routines need.
    """
    ang = _as_central_angles(angles)
    radius = float(radius)
    if not (math.isfinite(radius) and radius > 0.0):
        raise ValueError(f"radius is {radius!r}; it must be finite and positive")
    s = np.sin(0.5 * np.asarray(ang.values, dtype=float))
    t = float(s.sum())
    # Each factor 1 - 2 s_i / T is positive by the polygon inequality; the
    # floor at -1 only guards rounding on nearly collapsed inputs.
    with np.errstate(divide="ignore"):
        logs = np.log1p(np.maximum(-2.0 * s / t, -1.0))
    area = radius * radius * math.exp(2.0 * math.log(t) + 0.5 * float(logs.sum()))
    return HeronResult(area, radius * t, len(ang))
