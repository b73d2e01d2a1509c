"""Density constants for graphs with linear local minimum degree.

Random graphs (edge probability 1/2) have ``δ_loc >= c n`` with positive
probability for large ``n`` whenever an entropy condition holds for every
admissible ``d`` (the relative size of a set ``D``):

bipartite, ``d in (0, min(2c, 1)]``::

    H(d) + H(2c - d) - 1 <= 0

general, ``d in (0, c]``::

    (1 - d) [H((c - d) / (1 - d)) - 1] + H(d) <= 0

The existence argument behind these (weights ``1 / (r C(ν, dν))`` with
``r = ν`` in a local-lemma product) is not computed here.  This module
finds the largest feasible ``c`` numerically and samples small random
graphs for comparison.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ._pycore import SplitMix64
from .errors import InputError, VerificationFailure
from .graph import Graph, VertexSet, min_degree
from .locmindeg import DEFAULT_ONESIDE_CAP, delta_loc_bipartite, delta_loc_exact, exact_cap

KINDS = ("bipartite", "general")
GRID_STEP = 1e-4
GOLDEN = (math.sqrt(5) - 1) / 2


def binary_entropy(t: float) -> float:
    if not 0.0 <= t <= 1.0:
        raise InputError(f"entropy argument {t} outside [0, 1]")
    if t == 0.0 or t == 1.0:
        return 0.0
    return -t * math.log2(t) - (1 - t) * math.log2(1 - t)


def _entropy_array(t: np.ndarray) -> np.ndarray:
    t = np.clip(t, 0.0, 1.0)
    out = np.zeros_like(t)
    inner = (t > 0) & (t < 1)
    x = t[inner]
    out[inner] = -x * np.log2(x) - (1 - x) * np.log2(1 - x)
    return out


def condition_function(kind: str, c: float) -> tuple[Callable[[np.ndarray], np.ndarray], float]:
    """Left-hand side of the condition as a function of ``d``, and the
    upper end of the ``d`` range."""
    if kind == "bipartite":
        return (lambda d: _entropy_array(d) + _entropy_array(2 * c - d) - 1.0), min(2 * c, 1.0)
    if kind == "general":
        return (lambda d: (1 - d) * (_entropy_array((c - d) / (1 - d)) - 1.0) + _entropy_array(d)), c
    raise InputError(f"unknown kind {kind!r}, expected one of {KINDS}")


def _golden_max(f, lo: float, hi: float, iters: int = 60) -> float:
    a, b = lo, hi
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = f(x1)
    return (a + b) / 2


def condition_margin(kind: str, c: float, grid_step: float = GRID_STEP) -> tuple[float, float]:
    """``(max over d of the condition's left side, maximising d)``."""
    if not 0.0 < c <= 0.5:
        raise InputError(f"c = {c} outside (0, 1/2]")
    f, dmax = condition_function(kind, c)
    count = max(int(math.ceil(dmax / grid_step)), 2)
    grid = np.linspace(dmax / count, dmax, count)
    vals = f(grid)
    i = int(np.argmax(vals))
    lo = grid[max(i - 1, 0)] if i > 0 else grid[0] / 2
    hi = grid[min(i + 1, count - 1)]

    def scalar(d):
        return float(f(np.array([d]))[0])

    d_star = _golden_max(scalar, lo, hi)
    best_d, best = max(((d_star, scalar(d_star)), (float(grid[i]), float(vals[i]))), key=lambda t: t[1])
    return float(best), float(best_d)


def solve_max_c(kind: str, tol: float = 1e-6, grid_step: float = GRID_STEP) -> float:
    """Largest ``c`` whose condition margin is ``<= 0``, by bisection.

    Stops once the bracket is narrower than ``tol`` and the feasible end's
    margin is within ``tol`` of zero.
    """
    if tol <= 0:
        raise InputError("tol must be positive")
    lo, hi = 1e-3, 0.5
    if condition_margin(kind, lo, grid_step)[0] > 0 or condition_margin(kind, hi, grid_step)[0] <= 0:
        raise InputError("feasibility bracket is invalid")
    for _ in range(200):
        mid = (lo + hi) / 2
        if condition_margin(kind, mid, grid_step)[0] <= 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol and abs(condition_margin(kind, lo, grid_step)[0]) <= tol:
            break
    return lo


def margin_is_monotone(kind: str, step: float = 1e-3, upper: float = 0.25) -> bool:
    cs = np.arange(step, upper + step / 2, step)
    margins = [condition_margin(kind, float(c))[0] for c in cs]
    return all(b >= a - 1e-12 for a, b in zip(margins, margins[1:]))


@dataclass
class ConstantReport:
    kind: str
    c_max: float
    tolerance: float
    margin_at_c_max: float
    worst_d: float
    worst_d_curve: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "c_max": self.c_max,
            "tolerance": self.tolerance,
            "margin_at_c_max": self.margin_at_c_max,
            "worst_d": self.worst_d,
            "worst_d_curve": self.worst_d_curve,
        }


def constant_report(kind: str, tol: float = 1e-6, curve_points: int = 101) -> ConstantReport:
    c = solve_max_c(kind, tol)
    margin, worst_d = condition_margin(kind, c)
    f, dmax = condition_function(kind, c)
    ds = np.linspace(dmax / curve_points, dmax, curve_points)
    curve = [[float(d), float(v)] for d, v in zip(ds, f(ds))]
    return ConstantReport(kind, c, tol, margin, worst_d, curve)


def derive_seed(master: int, index: int) -> int:
    return SplitMix64(master ^ (index * 0xD1B54A32D192ED03)).next()


def random_graph(n: int, seed: int) -> Graph:
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.next() >> 63]
    return Graph.from_edges(n, edges)


def random_bipartite(nu: int, seed: int) -> Graph:
    """Sides ``0..nu-1`` and ``nu..2nu-1``, each cross pair an edge w.p. 1/2."""
    rng = SplitMix64(seed)
    n = 2 * nu
    edges = [(i, nu + j) for i in range(nu) for j in range(nu) if rng.next() >> 63]
    left = VertexSet(n, (1 << nu) - 1)
    return Graph.from_edges(n, edges, (left, left.complement()))


@dataclass
class Profile:
    kind: str
    size: int
    samples: int
    values: list
    c: Optional[float] = None

    @property
    def order(self) -> int:
        return self.size if self.kind == "general" else 2 * self.size

    @property
    def histogram(self) -> dict:
        return dict(sorted(Counter(self.values).items()))

    @property
    def fraction_exceeding(self) -> Optional[float]:
        if self.c is None or not self.values:
            return None
        return sum(v > self.c * self.order for v in self.values) / len(self.values)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "size": self.size,
            "order": self.order,
            "samples": self.samples,
            "histogram": {str(k): v for k, v in self.histogram.items()},
            "c": self.c,
            "fraction_exceeding": self.fraction_exceeding,
        }


def empirical_profile(kind: str, size: int, samples: int, seed: int, c: Optional[float] = None,
                      cross_check: bool = False, cap: Optional[int] = None) -> Profile:
    """Exact ``δ_loc`` of ``samples`` random graphs.

    ``size`` is ``n`` for general graphs and the side size ``ν`` for
    bipartite ones.  ``cross_check`` recomputes bipartite samples with the
    full enumeration.  Each sample is checked against the min-degree bound.
    """
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}")
    if size < 1:
        raise InputError("size must be at least 1")
    values = []
    for i in range(samples):
        s = derive_seed(seed, i)
        if kind == "general":
            g = random_graph(size, s)
            val = delta_loc_exact(g, cap).value
        else:
            g = random_bipartite(size, s)
            val = delta_loc_bipartite(g, DEFAULT_ONESIDE_CAP if cap is None else cap).value
            if cross_check:
                full = delta_loc_exact(g, exact_cap()).value
                if full != val:
                    raise VerificationFailure(f"one-sided {val} != full {full} on sample {i}")
        if val > min_degree(g):
            raise VerificationFailure(f"δ_loc {val} exceeds min degree on sample {i}")
        values.append(val)
    return Profile(kind, size, samples, values, c)
