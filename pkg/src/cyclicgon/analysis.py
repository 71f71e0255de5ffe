"""Accuracy analysis of the extended Heron approximation.

The quantity of interest is the ratio D = S / A of the approximate to the
exact area.  D equals 1 for triangles and cyclic quadrilaterals, is
conjectured to be maximized by the regular n-gon among convex cyclic n-gons,
and its regular-polygon values

    x_n = n * tan(pi/n) * (1 - 2/n)**(n/2)

increase toward the limit pi/e.  This module evaluates the ratio, the
sequence, and its continuous extension, and probes the maximality and bound
claims by seeded Monte Carlo sampling and derivative-free optimization.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.optimize import minimize

from .errors import DegenerateArea, DomainError, RangeError, RejectionOverflow
from .heron import generalized_heron
from .polygon import (
    DEGENERATE_AREA_TOL,
    TWO_PI,
    AreaReport,
    CentralAngles,
    SideLengths,
    _as_side_lengths,
    exact_area_from_sides,
)

__all__ = [
    "RatioReport",
    "SequencePoint",
    "VerifyReport",
    "OptResult",
    "ratio",
    "regular_ratio",
    "ratio_curve",
    "heron_limit",
    "sequence_table",
    "sample_random_angles",
    "monte_carlo_verify",
    "maximize_ratio",
]

# Samples count as violations only beyond this slack, so that double rounding
# exactly at a threshold is not reported as a counterexample.
VIOLATION_TOL = 1e-12

_MAX_REJECTIONS = 10**6

# Fixed stream key for the optimizer's internal restart draws; an arbitrary
# constant, distinct from any user seed space by convention.
_OPT_STREAM = 0x5DEECE66D


@dataclass(frozen=True)
class RatioReport(AreaReport):
    """Area comparison for one polygon, tagged with its side count."""

    n: int


@dataclass(frozen=True)
class SequencePoint:
    """Regular n-gon ratio value and its distance below the pi/e limit."""

    n: int
    ratio: float
    gap_to_limit: float


@dataclass(frozen=True)
class VerifyReport:
    """Monte Carlo summary of the ratio over sampled angle vectors.

    Extremes are reported with the angle vectors attaining them.  Samples
    whose ratio leaves the band [1, pi/e] by more than VIOLATION_TOL are
    collected as violations; samples whose exact area collapsed are counted
    in ``skipped`` and excluded from the statistics.
    """

    n: int
    samples: int
    seed: int
    allow_reflex: bool
    min_ratio: float
    max_ratio: float
    argmin: CentralAngles
    argmax: CentralAngles
    upper_violations: tuple[tuple[CentralAngles, float], ...]
    lower_violations: tuple[tuple[CentralAngles, float], ...]
    skipped: int

    def __post_init__(self) -> None:
        if not self.min_ratio <= self.max_ratio:
            raise ValueError(
                f"min_ratio {self.min_ratio!r} exceeds max_ratio {self.max_ratio!r}"
            )


@dataclass(frozen=True)
class OptResult:
    """Best ratio found over all restarts and evaluations of the maximizer."""

    n: int
    best_angles: CentralAngles
    best_ratio: float
    restarts_used: int
    converged: bool


def ratio(sides: SideLengths | Iterable[float]) -> RatioReport:
    """Exact area, approximate area, and their ratio for one polygon."""
    s = _as_side_lengths(sides)
    exact = exact_area_from_sides(s)
    approx = generalized_heron(s).approx_area
    d = approx / exact
    return RatioReport(exact=exact, approx=approx, ratio=d, rel_error=d - 1.0, n=len(s))


def heron_limit() -> float:
    """Limit pi/e of the regular-polygon ratio sequence."""
    return math.pi / math.e


def regular_ratio(n: int) -> SequencePoint:
    """Ratio of the regular n-gon: n * tan(pi/n) * (1 - 2/n)**(n/2).

    The power is evaluated as exp((n/2) * log1p(-2/n)) so that large n
    neither underflows nor loses the exponent's low digits.
    """
    n = operator.index(n)
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    value = n * math.tan(math.pi / n) * math.exp(0.5 * n * math.log1p(-2.0 / n))
    return SequencePoint(n=n, ratio=value, gap_to_limit=heron_limit() - value)


def ratio_curve(x: float) -> float:
    """Continuous extension f(x) = x * tan(pi/x) * (1 - 2/x)**(x/2), x > 2.

    At integer x this matches regular_ratio.  Near x = 2 both factors are
    extreme (tan(pi/x) blows up while the power vanishes), so the tangent is
    rewritten through the cotangent of the complementary angle; the curve then
    decreases from the finite limit 4/pi at x = 2+ to a minimum of 1 between
    3 and 4 and climbs toward pi/e.
    """
    x = float(x)
    if not x > 2.0:
        raise DomainError(f"the ratio curve is defined for x > 2, got {x!r}")
    if x <= 4.0:
        # tan(pi/x) = cot(pi/2 - pi/x) = 1/tan(pi*(x-2)/(2x)); the argument
        # pi*(x-2)/(2x) is computed from x - 2 directly, which keeps full
        # relative precision as x approaches 2.
        tan_factor = x / math.tan(math.pi * (x - 2.0) / (2.0 * x))
        power = math.exp(0.5 * x * (math.log(x - 2.0) - math.log(x)))
    else:
        tan_factor = x * math.tan(math.pi / x)
        power = math.exp(0.5 * x * math.log1p(-2.0 / x))
    return tan_factor * power


def sequence_table(n_min: int, n_max: int) -> list[SequencePoint]:
    """Regular-polygon ratio values for every n in [n_min, n_max]."""
    n_min = operator.index(n_min)
    n_max = operator.index(n_max)
    if n_min < 3 or n_max < n_min:
        raise RangeError(f"need 3 <= n_min <= n_max, got n_min={n_min}, n_max={n_max}")
    return [regular_ratio(n) for n in range(n_min, n_max + 1)]


def _philox_key(seed: int | tuple[int, ...]) -> np.ndarray:
    if isinstance(seed, (int, np.integer)):
        words: tuple[int, ...] = (int(seed), 0)
    else:
        words = tuple(int(w) for w in seed)
        if not 1 <= len(words) <= 2:
            raise DomainError(f"seed tuples carry one or two integers, got {len(words)}")
        if len(words) == 1:
            words = (words[0], 0)
    return np.array([w % (1 << 64) for w in words], dtype=np.uint64)


def sample_random_angles(
    n: int, seed: int | tuple[int, ...], allow_reflex: bool = False
) -> CentralAngles:
    """One uniform draw from the open simplex of central angles.

    Independent exponential variates normalized to sum 2*pi are uniform on
    the simplex.  With allow_reflex false, draws containing an angle of pi or
    more are rejected and resampled.  The generator is counter-based and
    keyed by the seed alone, so the same (n, seed, allow_reflex) always
    reproduces the same angles, independent of any other sampling activity.
    """
    n = operator.index(n)
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    rng = np.random.Generator(np.random.Philox(key=_philox_key(seed)))
    for _ in range(_MAX_REJECTIONS):
        e = rng.standard_exponential(n)
        total = e.sum()
        if not (total > 0.0 and np.all(e > 0.0)):
            continue
        a = (TWO_PI / total) * e
        if not allow_reflex and float(a.max()) >= math.pi:
            continue
        if not (float(a.min()) > 0.0 and float(a.max()) < TWO_PI):
            continue
        return CentralAngles(tuple(float(v) for v in a))
    raise RejectionOverflow(
        f"no admissible angle vector after {_MAX_REJECTIONS} draws (n={n}, seed={seed!r})"
    )


def _ratio_of_angle_rows(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ratio for each row of central angles at unit radius.

    Returns (ratios, exact_areas).  Rows whose exact area is not positive
    produce non-finite ratios; callers decide how to treat them.
    """
    half_sines = np.sin(0.5 * mat)
    t = half_sines.sum(axis=1)
    exact = 0.5 * np.sin(mat).sum(axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log1p(np.maximum(-2.0 * half_sines / t[:, None], -1.0)).sum(axis=1)
        approx = np.exp(2.0 * np.log(t) + 0.5 * logs)
        ratios = np.where(exact > 0.0, approx / exact, np.nan)
    return ratios, exact


def monte_carlo_verify(
    n: int, samples: int, seed: int = 42, allow_reflex: bool = False
) -> VerifyReport:
    """Sample angle vectors and summarize the ratio's extremes and breaches.

    Sample k is drawn with the counter-based key (seed, k), so the report is
    a pure function of (n, samples, seed, allow_reflex) no matter how the
    evaluation is batched.  The ratio is scale invariant, so the unit-radius
    evaluation loses no generality.  Degenerate draws (exact area at or below
    the collapse threshold) are skipped and counted, not raised.
    """
    n = operator.index(n)
    samples = operator.index(samples)
    if samples < 1:
        raise DomainError(f"samples must be at least 1, got {samples}")
    mat = np.empty((samples, n), dtype=float)
    for k in range(samples):
        mat[k] = sample_random_angles(n, (seed, k), allow_reflex).values
    ratios, exact = _ratio_of_angle_rows(mat)
    valid = (exact > DEGENERATE_AREA_TOL) & np.isfinite(ratios)
    skipped = int(samples - int(valid.sum()))
    if skipped == samples:
        raise DegenerateArea(f"all {samples} samples collapsed numerically")

    masked = np.where(valid, ratios, np.nan)
    imin = int(np.nanargmin(masked))
    imax = int(np.nanargmax(masked))
    limit = heron_limit()
    upper_idx = np.flatnonzero(valid & (ratios > limit + VIOLATION_TOL))
    lower_idx = np.flatnonzero(valid & (ratios < 1.0 - VIOLATION_TOL))

    def entry(i: int) -> tuple[CentralAngles, float]:
        return CentralAngles(tuple(float(v) for v in mat[i])), float(ratios[i])

    return VerifyReport(
        n=n,
        samples=samples,
        seed=int(seed),
        allow_reflex=bool(allow_reflex),
        min_ratio=float(ratios[imin]),
        max_ratio=float(ratios[imax]),
        argmin=entry(imin)[0],
        argmax=entry(imax)[0],
        upper_violations=tuple(entry(int(i)) for i in upper_idx),
        lower_violations=tuple(entry(int(i)) for i in lower_idx),
        skipped=skipped,
    )


def _softmax_angles(y: np.ndarray) -> np.ndarray:
    z = np.exp(y - y.max())
    return TWO_PI * z / z.sum()


def maximize_ratio(n: int, restarts: int = 16, tol: float = 1e-10) -> OptResult:
    """Search the open simplex of central angles for the largest ratio.

    The simplex constraint is absorbed by the reparameterization
    alpha_i = 2*pi * exp(y_i) / sum(exp(y_j)) and the unconstrained problem
    is handed to Nelder-Mead simplex search, with function-value tolerance
    ``tol``.  One restart begins at the uniform point, the rest at draws from
    a fixed internal stream, so results are reproducible.  The best ratio
    over every evaluated point is kept, whether or not the search that
    visited it converged; ``converged`` records whether any restart met the
    tolerance within its iteration budget.
    """
    n = operator.index(n)
    restarts = operator.index(restarts)
    if n < 3:
        raise DomainError(f"n must be at least 3, got {n}")
    if restarts < 1:
        raise DomainError(f"restarts must be at least 1, got {restarts}")
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError(f"tol must be a positive number, got {tol!r}")

    best_ratio = -math.inf
    best_angles: np.ndarray | None = None

    def objective(y: np.ndarray) -> float:
        nonlocal best_ratio, best_angles
        a = _softmax_angles(np.asarray(y, dtype=float))
        r = float(_ratio_of_angle_rows(a[None, :])[0][0])
        # Points outside the open simplex (an underflowed angle) are probes,
        # not iterates; steer the search away without recording them.
        if not math.isfinite(r) or not (a.min() > 0.0 and a.max() < TWO_PI):
            return math.inf
        if r > best_ratio:
            best_ratio = r
            best_angles = a.copy()
        return -r

    rng = np.random.Generator(np.random.Philox(key=_philox_key((_OPT_STREAM, n))))
    converged = False
    budget = 2000 * n
    for k in range(restarts):
        y0 = np.zeros(n) if k == 0 else rng.normal(0.0, 0.5, size=n)
        result = minimize(
            objective,
            y0,
            method="Nelder-Mead",
            options=dict(fatol=tol, xatol=1e-8, maxiter=budget, maxfev=budget),
        )
        converged = converged or bool(result.success)

    if best_angles is None:
        raise DegenerateArea(f"every evaluated point collapsed numerically (n={n})")
    angles = CentralAngles(tuple(float(v) for v in best_angles))
    return OptResult(
        n=n,
        best_angles=angles,
        best_ratio=best_ratio,
        restarts_used=restarts,
        converged=converged,
    )
