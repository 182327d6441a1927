"""Fuzzy-valued function spaces, sequence spaces and box-metric products.

Functions are represented by samples at space-grid nodes rather than by
closures: every metric then reduces to a finite loop over nodes and
levels.  Sequence spaces are finite truncations; membership of the
underlying infinite object in a summability class is not (and cannot be)
checked from finite data.

The module also provides the generic element operations (`elem_add`,
`elem_scale`, ...) that let the semigroup engine and the Cauchy solvers
run uniformly over fuzzy numbers, sampled functions and product elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import core
from .core import FuzzyNumber
from .errors import ArityMismatch, DomainMismatch, LengthMismatch, SpaceMismatch

DEFAULT_NODES = 128  # panels in the default space grid (DEFAULT_NODES+1 sample points)


def uniform_nodes(a: float, b: float, n_panels: int = DEFAULT_NODES) -> np.ndarray:
    if not b > a:
        raise ValueError("need b > a")
    if n_panels < 1:
        raise ValueError("n_panels must be >= 1")
    return np.linspace(float(a), float(b), n_panels + 1)


@dataclass(frozen=True, eq=False)
class FuzzyFunction:
    """A fuzzy-number-valued function on [a, b], sampled at grid nodes.

    All values must share one level grid; between nodes the function is
    understood as the levelwise linear interpolant (a convex combination
    of valid fuzzy numbers, hence again valid).
    """

    nodes: np.ndarray
    values: tuple

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        nodes.flags.writeable = False
        values = tuple(self.values)
        if nodes.ndim != 1 or nodes.size < 2 or (np.diff(nodes) <= 0).any():
            raise ValueError("nodes must be a strictly increasing 1-d grid")
        if len(values) != nodes.size:
            raise ValueError("need one value per node")
        base = values[0].levels
        for v in values:
            if not isinstance(v, FuzzyNumber):
                raise ValueError("values must be FuzzyNumber instances")
            if not np.array_equal(v.levels, base):
                raise ValueError("all values must share one level grid")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)

    @property
    def a(self) -> float:
        return float(self.nodes[0])

    @property
    def b(self) -> float:
        return float(self.nodes[-1])

    def __repr__(self):
        return f"FuzzyFunction(on [{self.a:g}, {self.b:g}], {self.nodes.size} nodes)"

    def at(self, x: float) -> FuzzyNumber:
        """Levelwise linear interpolation between the bracketing nodes."""
        x = float(x)
        if x < self.a or x > self.b:
            raise DomainMismatch(f"{x} outside [{self.a}, {self.b}]")
        idx = int(np.searchsorted(self.nodes, x, side="right"))
        if idx >= self.nodes.size:
            return self.values[-1]
        if self.nodes[idx - 1] == x:
            return self.values[idx - 1]
        x0, x1 = self.nodes[idx - 1], self.nodes[idx]
        t = (x - x0) / (x1 - x0)
        v0, v1 = self.values[idx - 1], self.values[idx]
        # convex combination of nested level sets is again nested
        return FuzzyNumber._trusted(
            v0.levels,
            (1.0 - t) * v0.lower + t * v1.lower,
            (1.0 - t) * v0.upper + t * v1.upper,
        )

    def resample_nodes(self, nodes: np.ndarray) -> "FuzzyFunction":
        nodes = np.asarray(nodes, dtype=float)
        if np.array_equal(nodes, self.nodes):
            return self
        return FuzzyFunction(nodes, tuple(self.at(x) for x in nodes))

    @classmethod
    def sample(
        cls,
        fn: Callable[[float], FuzzyNumber],
        a: float,
        b: float,
        n_panels: int = DEFAULT_NODES,
    ) -> "FuzzyFunction":
        nodes = uniform_nodes(a, b, n_panels)
        return cls(nodes, tuple(fn(float(x)) for x in nodes))


@dataclass(frozen=True, eq=False)
class FuzzySequence:
    """Finite truncation of a fuzzy-number sequence."""

    terms: tuple

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise ValueError("a fuzzy sequence needs at least one term")
        for t in terms:
            if not isinstance(t, FuzzyNumber):
                raise ValueError("terms must be FuzzyNumber instances")
        object.__setattr__(self, "terms", terms)

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True, eq=False)
class ProductElement:
    """Fixed-arity tuple of elements of (possibly different) spaces."""

    components: tuple

    def __post_init__(self):
        components = tuple(self.components)
        if not components:
            raise ValueError("a product element needs at least one component")
        object.__setattr__(self, "components", components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]


def pair(u, v) -> ProductElement:
    return ProductElement((u, v))


# ---------------------------------------------------------------------------
# metrics


def _aligned(f: FuzzyFunction, g: FuzzyFunction):
    if f.a != g.a or f.b != g.b:
        raise DomainMismatch(f"[{f.a}, {f.b}] vs [{g.a}, {g.b}]")
    if np.array_equal(f.nodes, g.nodes):
        return f, g
    merged = np.union1d(f.nodes, g.nodes)
    return f.resample_nodes(merged), g.resample_nodes(merged)


def sup_distance(f: FuzzyFunction, g: FuzzyFunction) -> float:
    """Supremum over nodes of the pointwise fuzzy distance."""
    f, g = _aligned(f, g)
    return max(core.distance(u, v) for u, v in zip(f.values, g.values))


def func_norm(f: FuzzyFunction) -> float:
    return max(core.norm(v) for v in f.values)


def lp_distance(f: FuzzyFunction, g: FuzzyFunction, p: float = 1.0) -> float:
    """Integral metric (trapezoid over the stored nodes) of order p >= 1.

    No refinement happens inside the metric; callers control the node
    count, which keeps metric values deterministic and comparable.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    f, g = _aligned(f, g)
    gaps = np.array([core.distance(u, v) for u, v in zip(f.values, g.values)])
    return float(np.trapezoid(gaps**p, f.nodes) ** (1.0 / p))


def cp_sup_distance(fs: Sequence[FuzzyFunction], gs: Sequence[FuzzyFunction]) -> float:
    """Sum of sup distances over derivative orders 0..p.

    Callers supply the sampled derivatives explicitly; order i of the
    first list is compared with order i of the second.
    """
    fs, gs = tuple(fs), tuple(gs)
    if len(fs) != len(gs):
        raise ArityMismatch(f"{len(fs)} derivative orders vs {len(gs)}")
    if not fs:
        raise ArityMismatch("need at least the order-0 functions")
    return float(sum(sup_distance(fi, gi) for fi, gi in zip(fs, gs)))


def _seq_terms(x) -> tuple:
    return x.terms if isinstance(x, FuzzySequence) else tuple(x)


def rho_p_metric(x, y, p: float = 1.0) -> float:
    """p-norm of the termwise fuzzy distances of two finite sequences."""
    if p < 1:
        raise ValueError("p must be >= 1")
    xs, ys = _seq_terms(x), _seq_terms(y)
    if len(xs) != len(ys):
        raise LengthMismatch(f"{len(xs)} terms vs {len(ys)}")
    gaps = np.array([core.distance(u, v) for u, v in zip(xs, ys)])
    return float(np.sum(gaps**p) ** (1.0 / p))


def mu_metric(x, y) -> float:
    """Supremum of the termwise fuzzy distances (bounded-sequence metric)."""
    xs, ys = _seq_terms(x), _seq_terms(y)
    if len(xs) != len(ys):
        raise LengthMismatch(f"{len(xs)} terms vs {len(ys)}")
    return max(core.distance(u, v) for u, v in zip(xs, ys))


def box_distance(w1: ProductElement, w2: ProductElement) -> float:
    """Box metric on a finite product: max of the component metrics."""
    if len(w1) != len(w2):
        raise ArityMismatch(f"{len(w1)} components vs {len(w2)}")
    return max(elem_dist(a, b) for a, b in zip(w1.components, w2.components))


# ---------------------------------------------------------------------------
# generic element operations (fuzzy numbers, functions, products)


def elem_add(x, y):
    if isinstance(x, FuzzyNumber) and isinstance(y, FuzzyNumber):
        return core.add(x, y)
    if isinstance(x, ProductElement) and isinstance(y, ProductElement):
        if len(x) != len(y):
            raise ArityMismatch(f"{len(x)} components vs {len(y)}")
        return ProductElement(tuple(elem_add(a, b) for a, b in zip(x.components, y.components)))
    if isinstance(x, FuzzyFunction) and isinstance(y, FuzzyFunction):
        x, y = _aligned(x, y)
        return FuzzyFunction(x.nodes, tuple(core.add(u, v) for u, v in zip(x.values, y.values)))
    raise SpaceMismatch(f"cannot add {type(x).__name__} and {type(y).__name__}")


def elem_scale(lam: float, x):
    if isinstance(x, FuzzyNumber):
        return core.scalar_mul(lam, x)
    if isinstance(x, ProductElement):
        return ProductElement(tuple(elem_scale(lam, c) for c in x.components))
    if isinstance(x, FuzzyFunction):
        return FuzzyFunction(x.nodes, tuple(core.scalar_mul(lam, v) for v in x.values))
    raise SpaceMismatch(f"cannot scale {type(x).__name__}")


def elem_dist(x, y) -> float:
    if isinstance(x, FuzzyNumber) and isinstance(y, FuzzyNumber):
        return core.distance(x, y)
    if isinstance(x, ProductElement) and isinstance(y, ProductElement):
        return box_distance(x, y)
    if isinstance(x, FuzzyFunction) and isinstance(y, FuzzyFunction):
        return sup_distance(x, y)
    raise SpaceMismatch(f"cannot compare {type(x).__name__} and {type(y).__name__}")


def elem_norm(x) -> float:
    if isinstance(x, FuzzyNumber):
        return core.norm(x)
    if isinstance(x, ProductElement):
        return max(elem_norm(c) for c in x.components)
    if isinstance(x, FuzzyFunction):
        return func_norm(x)
    raise SpaceMismatch(f"no norm for {type(x).__name__}")


def elem_hdiff(x, y):
    """Componentwise Hukuhara difference; exists iff every component's does."""
    if isinstance(x, FuzzyNumber) and isinstance(y, FuzzyNumber):
        return core.hukuhara_diff(x, y)
    if isinstance(x, ProductElement) and isinstance(y, ProductElement):
        if len(x) != len(y):
            raise ArityMismatch(f"{len(x)} components vs {len(y)}")
        return ProductElement(tuple(elem_hdiff(a, b) for a, b in zip(x.components, y.components)))
    if isinstance(x, FuzzyFunction) and isinstance(y, FuzzyFunction):
        x, y = _aligned(x, y)
        return FuzzyFunction(
            x.nodes, tuple(core.hukuhara_diff(u, v) for u, v in zip(x.values, y.values))
        )
    raise SpaceMismatch(f"cannot subtract {type(y).__name__} from {type(x).__name__}")


def elem_zero(x):
    if isinstance(x, FuzzyNumber):
        return core.zero_like(x)
    if isinstance(x, ProductElement):
        return ProductElement(tuple(elem_zero(c) for c in x.components))
    if isinstance(x, FuzzyFunction):
        return FuzzyFunction(x.nodes, tuple(core.zero_like(v) for v in x.values))
    raise SpaceMismatch(f"no zero for {type(x).__name__}")


# ---------------------------------------------------------------------------
# JSON codec


def function_to_json(f: FuzzyFunction) -> dict:
    return {
        "a": f.a,
        "b": f.b,
        "nodes": f.nodes.tolist(),
        "values": [core.fuzzy_to_json(v) for v in f.values],
    }


def function_from_json(obj) -> FuzzyFunction:
    try:
        nodes = np.asarray(obj["nodes"], dtype=float)
        values = tuple(core.fuzzy_from_json(v) for v in obj["values"])
    except KeyError as exc:
        raise ValueError(f"missing field {exc} in fuzzy function JSON") from exc
    return FuzzyFunction(nodes, values)
