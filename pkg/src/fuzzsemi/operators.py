"""Bounded operators on fuzzy spaces and the probe-based operator metric.

An operator carries a certified upper bound M on its norm: the provider
guarantees ||A(x)|| <= M * ||x|| for every x.  The true operator norm (the
supremum over the unit ball) is not finitely computable for a generic
operator, and nothing downstream needs it: the series engine only
consumes an upper bound, and `phi_distance` is an explicit probe-set
lower bound on the operator metric, clearly labeled as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import core, spaces
from .core import FuzzyNumber
from .errors import MuNotPositive, ProbeNormViolation, SpaceMismatch

#: full additivity plus homogeneity under every real factor
LINEAR = "linear"
#: additive and homogeneous under nonnegative factors only
POSITIVE_HOMOGENEOUS = "positive"

BUILTIN_NAMES = ("A1", "A2", "A3", "A4", "A5", "RemarkA", "RemarkB")

PROBE_SEED = 42
PROBE_RANDOM_COUNT = 32
_PROBE_NORM_SLACK = 1e-9


@dataclass(frozen=True)
class LinearOperator:
    """An additive, (positively) homogeneous map with a certified norm bound.

    Attributes:
        fn: the underlying map element -> element (same space).
        norm_bound: certified M with ||fn(x)|| <= M ||x|| for all x.
        homogeneity: LINEAR or POSITIVE_HOMOGENEOUS.
        name: label used in reports.
        domain: "fuzzy" for fuzzy-number inputs, ("product", k) for
            k-component product elements, or "any".
    """

    fn: Callable = field(repr=False)
    norm_bound: float
    homogeneity: str = LINEAR
    name: str = "operator"
    domain: object = "any"

    def __post_init__(self):
        if not np.isfinite(self.norm_bound) or self.norm_bound < 0:
            raise ValueError("norm_bound must be finite and >= 0")
        if self.homogeneity not in (LINEAR, POSITIVE_HOMOGENEOUS):
            raise ValueError(f"unknown homogeneity flag {self.homogeneity!r}")

    def _check_domain(self, x):
        if self.domain == "fuzzy" and not isinstance(x, FuzzyNumber):
            raise SpaceMismatch(f"{self.name} acts on fuzzy numbers, got {type(x).__name__}")
        if isinstance(self.domain, tuple) and self.domain[0] == "product":
            if not isinstance(x, spaces.ProductElement) or len(x) != self.domain[1]:
                raise SpaceMismatch(
                    f"{self.name} acts on {self.domain[1]}-component products"
                )

    def __call__(self, x):
        self._check_domain(x)
        return self.fn(x)


def identity(name: str = "I") -> LinearOperator:
    return LinearOperator(lambda x: x, 1.0, LINEAR, name)


def zero_operator(name: str = "O") -> LinearOperator:
    return LinearOperator(spaces.elem_zero, 0.0, LINEAR, name)


def scale_operator(factor: float) -> LinearOperator:
    """x -> factor * x; homogeneous under every real factor."""
    factor = float(factor)
    return LinearOperator(
        lambda x: spaces.elem_scale(factor, x), abs(factor), LINEAR, f"scale({factor:g})"
    )


def compose(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    """First apply b, then a; the certified bounds multiply."""
    hom = LINEAR if a.homogeneity == b.homogeneity == LINEAR else POSITIVE_HOMOGENEOUS
    return LinearOperator(
        lambda x: a(b(x)),
        a.norm_bound * b.norm_bound,
        hom,
        f"{a.name}∘{b.name}",
        b.domain,
    )


def power(a: LinearOperator, k: int) -> LinearOperator:
    """k-fold composition; power(a, 0) is the identity, with bound M**k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return identity()
    out = a
    for _ in range(k - 1):
        out = compose(out, a)
    return out


def phi_distance(a: LinearOperator, b: LinearOperator, probes) -> float:
    """Probe-set lower bound on the operator metric sup_{||x||<=1} d(A x, B x).

    This is an approximation from below: the supremum itself is not
    finitely computable.  Probes must lie in the unit ball.
    """
    worst = 0.0
    for x in probes:
        n = spaces.elem_norm(x)
        if n > 1.0 + _PROBE_NORM_SLACK:
            raise ProbeNormViolation(f"probe norm {n} exceeds 1")
        worst = max(worst, spaces.elem_dist(a(x), b(x)))
    return worst


def canonical_probes(m_levels: int = core.DEFAULT_LEVELS, seed: int = PROBE_SEED) -> tuple:
    """Deterministic unit-ball probe set: crisp, triangular and random directions.

    Five fixed probes (crisp +-1 and three unit triangulars) plus
    PROBE_RANDOM_COUNT seeded random fuzzy numbers normalized to unit norm.
    """
    fixed = (
        core.crisp(1.0, m_levels),
        core.crisp(-1.0, m_levels),
        core.make_triangular(-1.0, 0.0, 1.0, m_levels),
        core.make_triangular(0.0, 0.5, 1.0, m_levels),
        core.make_triangular(-1.0, -0.5, 0.0, m_levels),
    )
    rng = np.random.default_rng(seed)
    randoms = []
    while len(randoms) < PROBE_RANDOM_COUNT:
        u = random_fuzzy(rng, m_levels)
        n = core.norm(u)
        if n < 1e-6:
            continue
        randoms.append(core.scalar_mul(1.0 / n, u))
    return fixed + tuple(randoms)


def random_fuzzy(rng: np.random.Generator, m_levels: int = core.DEFAULT_LEVELS, span: float = 1.0) -> FuzzyNumber:
    """Random valid fuzzy number with support inside roughly [-2*span, 2*span]."""
    lo = np.sort(rng.uniform(-span, span, m_levels + 1))
    up = -np.sort(rng.uniform(-span, span, m_levels + 1))
    if lo[-1] > up[-1]:
        # re-anchor the descending branch so its top-level value is exactly
        # the top-level lower endpoint (x - x is exact, adding a constant
        # rounds monotonically)
        up = (up - up[-1]) + lo[-1]
    return FuzzyNumber(core.level_grid(m_levels), lo, up)


# ---------------------------------------------------------------------------
# built-in operators on fuzzy numbers


def _level_integral(u: FuzzyNumber, values: np.ndarray) -> float:
    # trapezoid on the level grid: exact for piecewise-linear endpoint data
    return float(np.trapezoid(values, u.levels))


def mu_coeff(c: FuzzyNumber) -> float:
    """Growth coefficient of the generator pair: core left endpoint minus
    the level-averaged lower endpoint.  Nonnegative for every fuzzy number;
    zero exactly when the lower endpoint function is constant."""
    return float(c.lower[-1]) - _level_integral(c, c.lower)


def upper_spread_coeff(c: FuzzyNumber) -> float:
    """Support right endpoint minus the level-averaged upper endpoint."""
    return float(c.upper[0]) - _level_integral(c, c.upper)


def builtin(name: str, c: FuzzyNumber | None = None) -> LinearOperator:
    """Catalogue of concrete operators on the space of fuzzy numbers.

    A1, A4, A5 integrate endpoint data over the level grid and return the
    crisp result; A2, A3 and the generator pair RemarkA / RemarkB scale a
    fixed fuzzy constant ``c`` by such an integral.  The certified bounds
    are analytic: every coefficient is at most 2||x|| (A1 sums two
    endpoint integrals, each at most ||x||), so the bound is 2 for A1,
    2*||c|| for the c-scaling operators and 1 for A4, A5.

    A1 is fully linear.  The remaining operators are additive and
    positively homogeneous only: their coefficients switch endpoint role
    under a negative factor (e.g. A2 applied to -x integrates the lower
    endpoints of x), so homogeneity fails for negative scalars.

    RemarkA and RemarkB require mu_coeff(c) > 0.
    """
    if name in ("A2", "A3", "RemarkA", "RemarkB"):
        if c is None:
            raise ValueError(f"{name} needs the fuzzy constant c")
        if name in ("RemarkA", "RemarkB") and mu_coeff(c) <= 0.0:
            raise MuNotPositive(f"mu = {mu_coeff(c)} must be > 0 for {name}")

    if name == "A1":
        def fn(x):
            return core.crisp(_level_integral(x, x.lower + x.upper), levels=x.levels)
        return LinearOperator(fn, 2.0, LINEAR, "A1", "fuzzy")

    if name == "A2":
        def fn(x, c=c):
            coeff = _level_integral(x, x.upper[0] - x.upper)
            return core.scalar_mul(coeff, c)
        return LinearOperator(fn, 2.0 * core.norm(c), POSITIVE_HOMOGENEOUS, "A2", "fuzzy")

    if name == "A3":
        def fn(x, c=c):
            coeff = _level_integral(x, x.lower[-1] - x.lower)
            return core.scalar_mul(coeff, c)
        return LinearOperator(fn, 2.0 * core.norm(c), POSITIVE_HOMOGENEOUS, "A3", "fuzzy")

    if name == "A4":
        def fn(x):
            return core.crisp(_level_integral(x, x.lower), levels=x.levels)
        return LinearOperator(fn, 1.0, POSITIVE_HOMOGENEOUS, "A4", "fuzzy")

    if name == "A5":
        def fn(x):
            return core.crisp(_level_integral(x, x.upper), levels=x.levels)
        return LinearOperator(fn, 1.0, POSITIVE_HOMOGENEOUS, "A5", "fuzzy")

    if name == "RemarkA":
        def fn(x, c=c):
            coeff = float(x.lower[-1]) - _level_integral(x, x.lower)
            return core.scalar_mul(coeff, c)
        return LinearOperator(fn, 2.0 * core.norm(c), POSITIVE_HOMOGENEOUS, "RemarkA", "fuzzy")

    if name == "RemarkB":
        # coefficient taken from the upper endpoints at level 0 so that it
        # is nonnegative and the exponential closed form applies
        def fn(x, c=c):
            coeff = float(x.upper[0]) - _level_integral(x, x.upper)
            return core.scalar_mul(coeff, c)
        return LinearOperator(fn, 2.0 * core.norm(c), POSITIVE_HOMOGENEOUS, "RemarkB", "fuzzy")

    raise ValueError(f"unknown builtin {name!r}; valid names: {', '.join(BUILTIN_NAMES)}")


def lift_matrix(entries) -> LinearOperator:
    """Lift a real k x k matrix to product elements: image_i = sum_j a_ij * w_j.

    Negative entries act by endpoint swap through scalar multiplication.
    Fully linear; the certified bound is the max absolute row sum.
    """
    m = np.asarray(entries, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("entries must be a square matrix")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    k = m.shape[0]
    bound = float(np.abs(m).sum(axis=1).max())

    def fn(w):
        comps = []
        for i in range(k):
            acc = spaces.elem_scale(m[i, 0], w.components[0])
            for j in range(1, k):
                acc = spaces.elem_add(acc, spaces.elem_scale(m[i, j], w.components[j]))
            comps.append(acc)
        return spaces.ProductElement(tuple(comps))

    label = "matrix[" + "; ".join(" ".join(f"{v:g}" for v in row) for row in m) + "]"
    return LinearOperator(fn, bound, LINEAR, label, ("product", k))
