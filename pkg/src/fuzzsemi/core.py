"""Fuzzy numbers stored as discretized level sets.

A fuzzy number is represented by sampling its level sets on a grid of
membership levels 0 = r0 < r1 < ... < rM = 1.  At level r the set is a
compact interval [lower(r), upper(r)], and the intervals are nested as r
grows: lower is nondecreasing, upper is nonincreasing, lower <= upper.
Endpoints are interpolated linearly between grid levels, so every
triangular number is represented exactly and all the arithmetic here
(levelwise interval sum, scaled interval, partial difference) is exact
for such data up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import HDifferenceError, OrderViolation

DEFAULT_LEVELS = 64  # panels in the default membership grid (grid has DEFAULT_LEVELS+1 points)

# Absolute slack used to absorb rounding noise when checking the nesting
# invariants of a candidate difference; anything larger means the
# difference genuinely does not exist.
MONOTONICITY_TOLERANCE = 1e-12


def level_grid(m_levels: int = DEFAULT_LEVELS) -> np.ndarray:
    """Uniform membership grid with ``m_levels`` panels."""
    if m_levels < 1:
        raise ValueError("m_levels must be >= 1")
    return np.linspace(0.0, 1.0, m_levels + 1)


def _frozen(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class FuzzyNumber:
    """Levelwise representation of a fuzzy number.

    Attributes:
        levels: strictly increasing grid of membership levels, first 0, last 1.
        lower:  left endpoints per level (nondecreasing in the level).
        upper:  right endpoints per level (nonincreasing in the level).

    Instances are immutable; the backing arrays are made read-only at
    construction, so values can be shared freely between threads.
    """

    levels: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        levels = _frozen(self.levels)
        lower = _frozen(self.lower)
        upper = _frozen(self.upper)
        if levels.ndim != 1 or levels.shape != lower.shape or levels.shape != upper.shape:
            raise ValueError("levels, lower and upper must be 1-d arrays of equal length")
        if levels.size < 2:
            raise ValueError("need at least the 0 and 1 membership levels")
        if not (np.isfinite(lower).all() and np.isfinite(upper).all()):
            raise ValueError("endpoints must be finite")
        if levels[0] != 0.0 or levels[-1] != 1.0 or (np.diff(levels) <= 0).any():
            raise ValueError("levels must increase strictly from 0 to 1")
        if (np.diff(lower) < 0).any():
            raise ValueError("lower endpoints must be nondecreasing in the level")
        if (np.diff(upper) > 0).any():
            raise ValueError("upper endpoints must be nonincreasing in the level")
        if (lower > upper).any():
            raise ValueError("lower endpoint exceeds upper endpoint")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def _trusted(cls, levels, lower, upper):
        # internal fast path for freshly computed arrays whose invariants
        # are guaranteed by construction (monotone rounding of sums and
        # constant multiples of monotone data); levels is shared as-is
        self = object.__new__(cls)
        levels.flags.writeable = False
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        return self

    def __repr__(self):
        return (
            f"FuzzyNumber(levels={self.levels.size}, "
            f"support=[{self.lower[0]:g}, {self.upper[0]:g}], "
            f"core=[{self.lower[-1]:g}, {self.upper[-1]:g}])"
        )

    def __eq__(self, other):
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return (
            np.array_equal(self.levels, other.levels)
            and np.array_equal(self.lower, other.lower)
            and np.array_equal(self.upper, other.upper)
        )

    def __add__(self, other):
        if isinstance(other, FuzzyNumber):
            return add(self, other)
        return NotImplemented

    def __rmul__(self, lam):
        if isinstance(lam, (int, float)):
            return scalar_mul(float(lam), self)
        return NotImplemented

    def resample(self, levels: np.ndarray) -> "FuzzyNumber":
        """Linearly interpolate the endpoint functions onto a new level grid.

        Exact for piecewise-linear endpoints whenever ``levels`` refines the
        current grid (in particular for any triangular number).
        """
        levels = np.asarray(levels, dtype=float)
        if np.array_equal(levels, self.levels):
            return self
        lo = np.interp(levels, self.levels, self.lower)
        up = np.interp(levels, self.levels, self.upper)
        out = _try_build(levels, lo, up, _noise_tol(lo, up))
        if out is None:  # pragma: no cover - interpolation preserves monotonicity
            raise ValueError("resampling produced an invalid fuzzy number")
        return out


def _noise_tol(*arrays) -> float:
    scale = max(1.0, *(float(np.abs(a).max()) for a in arrays if a.size))
    return MONOTONICITY_TOLERANCE * scale


def _try_build(levels, lower, upper, tol=MONOTONICITY_TOLERANCE):
    """Build a FuzzyNumber, clamping violations up to ``tol``; None beyond.

    Used where endpoint arrays come out of a subtraction or interpolation:
    sub-tolerance wiggles are treated as rounding noise and repaired by
    monotone clamping, larger ones mean the candidate is not a fuzzy number.
    """
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    drop = float(np.max(np.maximum(-np.diff(lower), 0.0), initial=0.0))
    rise = float(np.max(np.maximum(np.diff(upper), 0.0), initial=0.0))
    cross = float(np.max(lower - upper, initial=0.0))
    if drop > tol or rise > tol or cross > tol:
        return None
    lo = np.maximum.accumulate(lower)
    up = np.minimum.accumulate(upper)
    # with lo nondecreasing and up nonincreasing the only possible order
    # violation is at the top level; a midpoint clamp there keeps both
    # monotonicities intact (min/max against a constant)
    if lo[-1] > up[-1]:
        mid = 0.5 * (lo[-1] + up[-1])
        lo = np.minimum(lo, mid)
        up = np.maximum(up, mid)
    return FuzzyNumber._trusted(levels, lo, up)


# ---------------------------------------------------------------------------
# constructors


@dataclass(frozen=True)
class Triangular:
    """Constructor view (left, center, right) of a triangular fuzzy number."""

    left: float
    center: float
    right: float

    def __post_init__(self):
        if not (self.left <= self.center <= self.right):
            raise OrderViolation(
                f"need left <= center <= right, got ({self.left}, {self.center}, {self.right})"
            )

    @property
    def spread_left(self) -> float:
        return self.center - self.left

    @property
    def spread_right(self) -> float:
        return self.right - self.center

    @property
    def is_symmetric(self) -> bool:
        return self.spread_left == self.spread_right

    def to_fuzzy(self, m_levels: int = DEFAULT_LEVELS) -> FuzzyNumber:
        return make_triangular(self.left, self.center, self.right, m_levels)


def make_triangular(x_l: float, x_c: float, x_r: float, m_levels: int = DEFAULT_LEVELS) -> FuzzyNumber:
    """Triangular number with support [x_l, x_r] and core {x_c}.

    Level sets are [x_c - (1-r)(x_c - x_l), x_c + (1-r)(x_r - x_c)].
    """
    if not (x_l <= x_c <= x_r):
        raise OrderViolation(f"need x_l <= x_c <= x_r, got ({x_l}, {x_c}, {x_r})")
    r = level_grid(m_levels)
    lo = x_c - (1.0 - r) * (x_c - x_l)
    up = x_c + (1.0 - r) * (x_r - x_c)
    return FuzzyNumber(r, np.minimum(lo, x_c), np.maximum(up, x_c))


def symmetric_triangular(center: float, delta: float, m_levels: int = DEFAULT_LEVELS) -> FuzzyNumber:
    """Triangular number with equal spreads delta >= 0 about the center."""
    if delta < 0:
        raise OrderViolation("delta must be >= 0")
    return make_triangular(center - delta, center, center + delta, m_levels)


def crisp(value: float, m_levels: int = DEFAULT_LEVELS, levels: np.ndarray | None = None) -> FuzzyNumber:
    """Embed a real number as the degenerate fuzzy number with that value."""
    if levels is None:
        r = level_grid(m_levels)
        r.flags.writeable = False
    elif isinstance(levels, np.ndarray) and not levels.flags.writeable:
        r = levels  # already validated by the instance it came from
    else:
        r = np.asarray(levels, dtype=float)
        v = np.full(r.shape, float(value))
        return FuzzyNumber(r, v, v.copy())
    v = np.full(r.shape, float(value))
    return FuzzyNumber._trusted(r, v, v.copy())


def zero(m_levels: int = DEFAULT_LEVELS, levels: np.ndarray | None = None) -> FuzzyNumber:
    return crisp(0.0, m_levels, levels)


def zero_like(u: FuzzyNumber) -> FuzzyNumber:
    return crisp(0.0, levels=u.levels)


def is_crisp(u: FuzzyNumber) -> bool:
    return bool(np.array_equal(u.lower, u.upper))


# ---------------------------------------------------------------------------
# algebra


def common_grid(u: FuzzyNumber, v: FuzzyNumber):
    """Resample both operands onto the union of their level grids.

    Lossless for piecewise-linear endpoint data; documented as lossy
    otherwise since interpolation inserts straight segments.
    """
    if u.levels is v.levels or np.array_equal(u.levels, v.levels):
        return u, v
    merged = np.union1d(u.levels, v.levels)
    return u.resample(merged), v.resample(merged)


def add(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """Levelwise interval sum of two fuzzy numbers."""
    u, v = common_grid(u, v)
    # rounding is monotone, so sums of monotone arrays stay monotone
    return FuzzyNumber._trusted(u.levels, u.lower + v.lower, u.upper + v.upper)


def scalar_mul(lam: float, u: FuzzyNumber) -> FuzzyNumber:
    """Levelwise scaled interval; negative factors swap the endpoints."""
    lam = float(lam)
    if lam == 0.0:
        return zero_like(u)
    if lam > 0.0:
        return FuzzyNumber._trusted(u.levels, lam * u.lower, lam * u.upper)
    return FuzzyNumber._trusted(u.levels, lam * u.upper, lam * u.lower)


def hukuhara_diff(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """Partial inverse of addition: the w with v + w = u, when it exists.

    The candidate has endpoints u.lower - v.lower and u.upper - v.upper; it
    is returned iff it satisfies the nesting invariants (violations up to
    MONOTONICITY_TOLERANCE are clamped as rounding noise).  Raises
    HDifferenceError otherwise -- the difference does not exist for every
    pair, e.g. 0 minus any genuinely fuzzy number.
    """
    u, v = common_grid(u, v)
    w = _try_build(u.levels, u.lower - v.lower, u.upper - v.upper)
    if w is None:
        raise HDifferenceError("the difference would not have nested level sets")
    return w


def oriented_hukuhara_diff(x1: FuzzyNumber, x2: FuzzyNumber):
    """Whichever of x1 - x2 or x2 - x1 exists, tagged with its direction.

    Prefers the forward direction when both exist.  For symmetric
    triangular numbers at least one direction always exists (the one that
    subtracts the smaller spread from the larger).
    """
    try:
        return "forward", hukuhara_diff(x1, x2)
    except HDifferenceError:
        pass
    try:
        return "reverse", hukuhara_diff(x2, x1)
    except HDifferenceError:
        raise HDifferenceError("neither orientation of the difference exists")


# ---------------------------------------------------------------------------
# metric, norm, membership


def distance(u: FuzzyNumber, v: FuzzyNumber) -> float:
    """Supremum over levels of the larger endpoint gap.

    For piecewise-linear endpoints the supremum over the whole level
    interval is attained at a grid node, so the grid maximum is exact.
    """
    u, v = common_grid(u, v)
    gap_lo = np.abs(u.lower - v.lower).max()
    gap_up = np.abs(u.upper - v.upper).max()
    return float(max(gap_lo, gap_up))


def norm(u: FuzzyNumber) -> float:
    """Distance to the crisp zero: max absolute endpoint."""
    return float(max(np.abs(u.lower).max(), np.abs(u.upper).max()))


def membership(u: FuzzyNumber, x: float) -> float:
    """Membership degree of x, reconstructed from the level sets.

    Returns the supremum of levels r whose cut contains x, interpolating
    linearly between adjacent grid levels (consistent with the
    piecewise-linear endpoint model).
    """
    x = float(x)
    if x < u.lower[0] or x > u.upper[0]:
        return 0.0

    def last_level(values, ok):
        # highest r with ok(values[r]); values is monotone so the crossing
        # lies in a single segment
        if ok(values[-1]):
            return 1.0
        idx = int(np.argmax(~ok(values)))  # first failing index; idx >= 1 here
        v0, v1 = values[idx - 1], values[idx]
        r0, r1 = u.levels[idx - 1], u.levels[idx]
        if v1 == v0:
            return float(r0)
        return float(r0 + (r1 - r0) * (x - v0) / (v1 - v0))

    r_lo = last_level(u.lower, lambda v: v <= x)
    r_up = last_level(u.upper, lambda v: v >= x)
    return max(0.0, min(r_lo, r_up))


# ---------------------------------------------------------------------------
# JSON codec


def fuzzy_to_json(u: FuzzyNumber) -> dict:
    """Plain-dict form; floats round-trip exactly through json."""
    return {
        "levels": u.levels.tolist(),
        "lower": u.lower.tolist(),
        "upper": u.upper.tolist(),
    }


def fuzzy_from_json(obj, m_levels: int = DEFAULT_LEVELS) -> FuzzyNumber:
    """Accepts the full form or the shorthand {"tri": [l, c, r]}."""
    if not isinstance(obj, dict):
        raise ValueError("fuzzy number JSON must be an object")
    if "tri" in obj:
        tri = obj["tri"]
        if not (isinstance(tri, (list, tuple)) and len(tri) == 3):
            raise ValueError('"tri" must be a list [left, center, right]')
        return make_triangular(float(tri[0]), float(tri[1]), float(tri[2]), m_levels)
    try:
        return FuzzyNumber(
            np.asarray(obj["levels"], dtype=float),
            np.asarray(obj["lower"], dtype=float),
            np.asarray(obj["upper"], dtype=float),
        )
    except KeyError as exc:
        raise ValueError(f"missing field {exc} in fuzzy number JSON") from exc
