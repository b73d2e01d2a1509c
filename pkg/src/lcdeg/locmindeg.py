"""Exact local minimum degree.

Three independent routes:

* ``delta_loc_exact``: minimum of ``|D ∪ Odd(D)|`` over every nonempty
  ``D``, minus one, by a Gray-code sweep (one row XOR per step);
* ``delta_loc_bipartite``: the same minimum restricted to ``D`` inside one
  side of a bipartition, which attains the global minimum for bipartite
  graphs;
* ``delta_loc_via_orbit``: minimum degree over the labelled
  local-complementation orbit, the definition itself.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import kernels
from .errors import CapExceeded, InputError
from .graph import Graph, VertexSet, ensure_bipartition, local_complement, min_degree

DEFAULT_EXACT_CAP = 30
DEFAULT_ONESIDE_CAP = 30
DEFAULT_ORBIT_NODES = 2_000_000


def exact_cap() -> int:
    """Exact-search cap, overridable through ``LCDEG_CAP_N``."""
    raw = os.environ.get("LCDEG_CAP_N")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"LCDEG_CAP_N must be an integer, got {raw!r}") from None
    return DEFAULT_EXACT_CAP


@dataclass(frozen=True)
class DeltaLocResult:
    value: int
    witness: VertexSet
    sets_examined: int
    method: str  # "full-enumeration", "one-sided" or "restricted"


@dataclass(frozen=True)
class OrbitReport:
    orbit_size: int
    min_degree_over_orbit: int
    generator_sequence: Tuple[int, ...]
    truncated: bool = False


class UpperBound(int):
    """An orbit minimum from a truncated search: only an upper bound."""

    truncated = True


def _check_cap(size: int, cap: int, what: str):
    if size > cap:
        raise CapExceeded(
            f"exponential search too large: {what} has {size} vertices, cap is {cap}"
        )


def min_closed_odd(rows: Sequence[int], pool: Sequence[int], workers: int = 1):
    """Minimum ``|D ∪ Odd(D)|`` over nonempty ``D`` drawn from ``pool``.

    Returns ``(minimum, witness_bits, sets_examined)``; the witness is the
    first minimiser in Gray-code order over ``pool``.  With several workers
    the index range is split into contiguous chunks and the reduction keeps
    the globally first minimiser, so the answer does not depend on
    ``workers``.
    """
    pool = list(pool)
    if not pool:
        raise InputError("empty pool")
    vecs = [rows[v] for v in pool]
    tags = [1 << v for v in pool]
    total = 1 << len(pool)
    if workers <= 1 or total < 1 << 16:
        best, idx, examined = kernels.gray_min(vecs, tags, 1, total)
    else:
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(lambda b: kernels.gray_min(vecs, tags, b[0], b[1]), bounds))
        examined = sum(p[2] for p in parts)
        best, idx = min((p[0], p[1]) for p in parts if p[0] >= 0)
    g = kernels.gray_subset(idx)
    bits = 0
    for j, v in enumerate(pool):
        if g >> j & 1:
            bits |= 1 << v
    return best, bits, examined


def delta_loc_exact(g: Graph, cap: Optional[int] = None, workers: int = 1) -> DeltaLocResult:
    if g.n == 0:
        raise InputError("empty graph")
    _check_cap(g.n, exact_cap() if cap is None else cap, "graph")
    best, bits, examined = min_closed_odd(g.rows, range(g.n), workers)
    return DeltaLocResult(best - 1, VertexSet(g.n, bits), examined, "full-enumeration")


def delta_loc_bipartite(g: Graph, cap: Optional[int] = None, workers: int = 1) -> DeltaLocResult:
    """One-sided search: ``D`` inside the left side, then inside the right."""
    if g.n == 0:
        raise InputError("empty graph")
    g = ensure_bipartition(g)
    cap = DEFAULT_ONESIDE_CAP if cap is None else cap
    best = None
    examined = 0
    for side in g.bipartition:
        if not side:
            continue
        _check_cap(len(side), cap, "bipartition side")
        size, bits, ex = min_closed_odd(g.rows, side.members(), workers)
        examined += ex
        if best is None or size < best[0]:
            best = (size, bits)
    return DeltaLocResult(best[0] - 1, VertexSet(g.n, best[1]), examined, "one-sided")


def delta_loc_restricted(g: Graph, pool: VertexSet, cap: Optional[int] = None,
                         workers: int = 1) -> DeltaLocResult:
    """Minimum over ``D ⊆ pool`` only: an upper bound on ``δ_loc`` in general."""
    if not pool:
        raise InputError("empty pool")
    _check_cap(len(pool), exact_cap() if cap is None else cap, "pool")
    best, bits, examined = min_closed_odd(g.rows, pool.members(), workers)
    return DeltaLocResult(best - 1, VertexSet(g.n, bits), examined, "restricted")


def lc_orbit(g: Graph, node_cap: int = DEFAULT_ORBIT_NODES) -> OrbitReport:
    if g.n == 0:
        raise InputError("empty graph")
    size, best, seq, truncated = kernels.lc_orbit(g.rows, node_cap)
    return OrbitReport(size, best, tuple(seq), truncated)


def replay(g: Graph, sequence: Sequence[int]) -> Graph:
    for u in sequence:
        g = local_complement(g, u)
    return g


def delta_loc_via_orbit(g: Graph, node_cap: int = DEFAULT_ORBIT_NODES) -> int:
    """Minimum degree over the local-complementation orbit.

    Returns an ``UpperBound`` (an ``int`` with ``truncated = True``) when the
    orbit exceeds ``node_cap`` labelled graphs.
    """
    rep = lc_orbit(g, node_cap)
    if rep.truncated:
        return UpperBound(rep.min_degree_over_orbit)
    return rep.min_degree_over_orbit


def falsifier_sample(g: Graph, threshold: int, trials: int, seed: int,
                     pool: Optional[VertexSet] = None) -> Optional[VertexSet]:
    """Random search for a nonempty ``D`` with ``|D ∪ Odd(D)| <= threshold``.

    ``D`` is drawn from ``pool`` (default: all vertices).  Deterministic for
    a fixed seed.  ``None`` means no witness was found, not that none exists.
    """
    if trials < 1:
        raise InputError("trials must be at least 1")
    members = list(range(g.n)) if pool is None else pool.members()
    if not members:
        return None
    vecs = [g.rows[v] for v in members]
    tags = [1 << v for v in members]
    found, _ = kernels.falsify(vecs, tags, threshold, trials, seed)
    if not found:
        return None
    bits = 0
    for j, v in enumerate(members):
        if found >> j & 1:
            bits |= 1 << v
    return VertexSet(g.n, bits)


def degree_witness(g: Graph) -> VertexSet:
    """``{v}`` for a vertex of minimum degree: ``|{v} ∪ N(v)| - 1 = deg(v)``."""
    d = min_degree(g)
    v = next(u for u in range(g.n) if g.rows[u].bit_count() == d)
    return VertexSet.of(g.n, [v])
