"""Paley graphs and exact character-sum checks.

For a prime ``p = 1 (mod 4)`` the Paley graph joins ``i`` and ``j`` when
``i - j`` is a nonzero square mod ``p``.  For a nonempty vertex set ``S``
and ``f_S(x) = prod_{j in S} (x - j)``:

* ``|sum_i chi(f_S(i))| = | |S ∪ Odd(S)| - |S ∪ Even(S)| |`` (exact);
* ``|sum_i chi(f_S(i))| <= (|S| - 1) sqrt(p) + 1`` (Weil bound);
* hence ``|S ∪ Odd(S)| >= sqrt(p) - 1/2`` and
  ``δ_loc >= sqrt(p) - 3/2``.

Every comparison against ``sqrt(p)`` is done on squared integers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .errors import InputError
from .graph import Graph, VertexSet, odd_bits, popcount
from .locmindeg import exact_cap, falsifier_sample, min_closed_odd

PALEY_CAP = 257


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def legendre(p: int, x: int) -> int:
    """Legendre symbol by Euler's criterion: 0, +1 or -1."""
    if p == 2 or not is_prime(p):
        raise InputError(f"{p} is not an odd prime")
    x %= p
    if x == 0:
        return 0
    r = pow(x, (p - 1) // 2, p)
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class PaleyContext:
    p: int
    residues: Tuple[bool, ...]
    graph: Graph
    chi: Tuple[int, ...] = field(repr=False)


def paley_graph(p: int, cap: int = PALEY_CAP) -> PaleyContext:
    if not is_prime(p):
        raise InputError(f"p = {p} is not prime")
    if p % 4 != 1:
        raise InputError(f"p = {p} violates p ≡ 1 mod 4 (p mod 4 = {p % 4})")
    if p > cap:
        raise InputError(f"p = {p} exceeds the configured cap {cap}")
    squares = {x * x % p for x in range(1, p)}
    residues = tuple(x in squares for x in range(p))
    mask = sum(1 << x for x in squares)
    full = (1 << p) - 1
    # row i is the residue mask rotated by i
    rows = tuple(((mask << i) | (mask >> (p - i))) & full for i in range(p))
    chi = tuple(legendre(p, x) for x in range(p))
    return PaleyContext(p, residues, Graph(p, rows), chi)


def lower_bound(p: int) -> float:
    return math.sqrt(p) - 1.5


def meets_delta_bound(delta: int, p: int) -> bool:
    """``delta >= sqrt(p) - 3/2``, i.e. ``(2 delta + 3)^2 >= 4p``."""
    return 2 * delta + 3 >= 0 and (2 * delta + 3) ** 2 >= 4 * p


def meets_closed_odd_bound(size: int, p: int) -> bool:
    """``size >= sqrt(p) - 1/2``, i.e. ``(2 size + 1)^2 >= 4p``."""
    return (2 * size + 1) ** 2 >= 4 * p


def weil_holds(abs_sum: int, s_size: int, p: int) -> bool:
    """``abs_sum <= (s_size - 1) sqrt(p) + 1`` in exact arithmetic."""
    if abs_sum <= 1:
        return True
    return (abs_sum - 1) ** 2 <= (s_size - 1) ** 2 * p


@dataclass(frozen=True)
class CharSumReport:
    s: VertexSet
    sum: int
    odd_size: int
    even_size: int
    weil_rhs: float

    @property
    def identity_holds(self) -> bool:
        return abs(self.sum) == abs(self.odd_size - self.even_size)

    @property
    def weil_holds(self) -> bool:
        return weil_holds(abs(self.sum), len(self.s), self.s.n)


def char_sum(ctx: PaleyContext, s: VertexSet) -> CharSumReport:
    if s.n != ctx.p:
        raise InputError(f"set built for n={s.n}, field has p={ctx.p}")
    if not s:
        raise InputError("S must be nonempty")
    p = ctx.p
    xs = np.arange(p, dtype=np.int64)
    f = np.ones(p, dtype=np.int64)
    for j in s:
        f = f * ((xs - j) % p) % p
    total = int(np.asarray(ctx.chi, dtype=np.int64)[f].sum())
    odd = odd_bits(ctx.graph.rows, s.bits)
    full = (1 << p) - 1
    odd_size = popcount(s.bits | odd)
    even_size = popcount(s.bits | (full ^ odd))
    return CharSumReport(s, total, odd_size, even_size, (len(s) - 1) * math.sqrt(p) + 1)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    checked: int
    counterexample: Optional[CharSumReport] = None


def random_subset(p: int, rng: random.Random, min_size: int = 1) -> VertexSet:
    k = rng.randint(min_size, p)
    return VertexSet.of(p, rng.sample(range(p), k))


def _subsets_up_to(p: int, max_size: int):
    from itertools import combinations

    for k in range(1, max_size + 1):
        for combo in combinations(range(p), k):
            yield VertexSet.of(p, combo)


def verify_lemma_odd_even(ctx: PaleyContext, trials: int, seed: int,
                          exhaustive_max_size: int = 0) -> CheckResult:
    """Exact identity check on every ``S`` with ``|S| <= exhaustive_max_size``
    plus ``trials`` random nonempty ``S``."""
    rng = random.Random(seed)
    checked = 0
    sets = list(_subsets_up_to(ctx.p, exhaustive_max_size))
    sets += [random_subset(ctx.p, rng) for _ in range(trials)]
    for s in sets:
        rep = char_sum(ctx, s)
        checked += 1
        if not rep.identity_holds or rep.odd_size + rep.even_size != ctx.p + len(s):
            return CheckResult(False, checked, rep)
    return CheckResult(True, checked)


def verify_weil_bound(ctx: PaleyContext, max_subset_size: int, trials: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    checked = 0
    for s in _subsets_up_to(ctx.p, max_subset_size):
        rep = char_sum(ctx, s)
        checked += 1
        if not rep.weil_holds:
            return CheckResult(False, checked, rep)
    if max_subset_size < ctx.p:
        for _ in range(trials):
            rep = char_sum(ctx, random_subset(ctx.p, rng, max_subset_size + 1))
            checked += 1
            if not rep.weil_holds:
                return CheckResult(False, checked, rep)
    return CheckResult(True, checked)


@dataclass(frozen=True)
class PaleyTheoremReport:
    p: int
    bound: float
    mode: str  # "verified" (exhaustive) or "not falsified" (sampling only)
    holds: bool
    delta_loc: Optional[int] = None
    min_closed_odd: Optional[int] = None
    closed_odd_bound_holds: Optional[bool] = None
    witness: Optional[VertexSet] = None
    samples: int = 0


def verify_paley_theorem(ctx: PaleyContext, cap: Optional[int] = None, workers: int = 1,
                         trials: int = 100_000, seed: int = 0) -> PaleyTheoremReport:
    """Check ``δ_loc(Pal_p) >= sqrt(p) - 3/2`` and ``min |S ∪ Odd(S)| >= sqrt(p) - 1/2``.

    Under the exact cap both follow from one exhaustive sweep.  Above it,
    random sets are searched for a violation of the second inequality.
    """
    p = ctx.p
    cap = exact_cap() if cap is None else cap
    if p <= cap:
        size, bits, _ = min_closed_odd(ctx.graph.rows, range(p), workers)
        delta = size - 1
        lemma_ok = meets_closed_odd_bound(size, p)
        return PaleyTheoremReport(p, lower_bound(p), "verified", meets_delta_bound(delta, p) and lemma_ok,
                                  delta, size, lemma_ok, VertexSet(p, bits))
    # largest size violating (2 size + 1)^2 >= 4p
    threshold = (math.isqrt(4 * p - 1) - 1) // 2
    while (2 * threshold + 1) ** 2 >= 4 * p:
        threshold -= 1
    witness = falsifier_sample(ctx.graph, threshold, trials, seed) if threshold >= 1 else None
    return PaleyTheoremReport(p, lower_bound(p), "not falsified" if witness is None else "falsified",
                              witness is None, witness=witness, samples=trials)
