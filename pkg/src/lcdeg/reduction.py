"""Shortest-codeword to local-minimum-degree reduction.

Given a generator ``A = (I_k; A')`` (``A'`` is ``n x k``) and a bipartite
gadget ``G_B`` with sides ``(V_B1, V_B2)`` and a vertex ``u`` in ``V_B1``,
the composed bipartite graph has

* ``V_1L = cols(A') x {u}``       (``k`` vertices),
* ``V_1R = rows(A') x V_B2``,
* ``V_2  = rows(A') x V_B1``,

and ``(x, y) ~ (x', y')`` iff ``A'[x', x] = 1 and y = y'`` or
``y ~ y'`` in ``G_B and x = x'``.  In words: one copy of the gadget per row
of ``A'``, and column vertex ``x`` attached to the ``u``-vertex of copy
``x'`` whenever ``A'[x', x] = 1``.  When the gadget's ``δ_loc`` exceeds
``n + 1`` the minimiser of ``|D ∪ Odd(D)|`` lies in ``V_1L`` and equals the
code's minimum distance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple, Union

from .codes import BinaryMatrix, kernel_dim, min_distance, read_matrix, format_matrix
from .errors import InputError
from .formats import format_edge_list, parse_edge_list, to_dot, to_graph6
from .graph import Graph, VertexSet, ensure_bipartition, min_degree
from .locmindeg import (
    DEFAULT_ONESIDE_CAP,
    delta_loc_bipartite,
    delta_loc_exact,
    delta_loc_restricted,
    exact_cap,
    falsifier_sample,
)


class PreconditionFailure(InputError):
    """The gadget or composed graph does not meet the reduction's hypotheses."""


def code_graph(aprime: BinaryMatrix) -> Graph:
    """Bipartite graph of ``A'``: columns ``0..k-1``, rows ``k..k+n-1``."""
    k, n = aprime.cols, aprime.rows
    edges = [(x, k + xp) for xp in range(n) for x in range(k) if aprime.entry(xp, x)]
    left = VertexSet(k + n, (1 << k) - 1)
    return Graph.from_edges(k + n, edges, (left, left.complement()))


def gadget_graph(b: BinaryMatrix) -> Graph:
    """Bipartite graph with biadjacency ``b``: rows are side 1, columns side 2."""
    r, c = b.rows, b.cols
    edges = [(i, r + j) for i in range(r) for j in range(c) if b.entry(i, j)]
    left = VertexSet(r + c, (1 << r) - 1)
    return Graph.from_edges(r + c, edges, (left, left.complement()))


@dataclass(frozen=True)
class ReductionInstance:
    aprime: BinaryMatrix
    gadget: Graph
    u: int
    composed: Graph
    v1l: VertexSet
    v1r: VertexSet
    v2: VertexSet
    labels: Tuple[Tuple[str, int, int], ...]  # (part, x, y) per composed vertex
    experimental: bool = False

    @property
    def k(self) -> int:
        return self.aprime.cols

    @property
    def n(self) -> int:
        return self.aprime.rows

    def manifest(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "u": self.u,
            "experimental": self.experimental,
            "gadget_sides": [s.members() for s in self.gadget.bipartition] if self.gadget.bipartition else None,
            "vertex_labels": [list(lab) for lab in self.labels],
            "V1L": self.v1l.members(),
            "V1R": self.v1r.members(),
            "V2": self.v2.members(),
        }


def compose(aprime: BinaryMatrix, gadget: Graph, u: int) -> ReductionInstance:
    """Build the composed graph.  Vertex order: ``V_1L``, ``V_1R``, ``V_2``;
    the latter two ordered row-major by ``(row of A', gadget vertex)``."""
    gadget = ensure_bipartition(gadget)
    b1, b2 = gadget.bipartition
    if u not in b1:
        raise InputError(f"u = {u} is not on the first side of the gadget")
    k, n = aprime.cols, aprime.rows
    side1, side2 = b1.members(), b2.members()
    labels = [("1L", x, u) for x in range(k)]
    labels += [("1R", xp, y) for xp in range(n) for y in side2]
    labels += [("2", xp, y) for xp in range(n) for y in side1]
    index = {lab: i for i, lab in enumerate(labels)}
    total = len(labels)
    edges = []
    for x in range(k):
        for xp in range(n):
            if aprime.entry(xp, x):
                edges.append((index[("1L", x, u)], index[("2", xp, u)]))
    for xp in range(n):
        for y in side2:
            for yp in side1:
                if gadget.has_edge(y, yp):
                    edges.append((index[("1R", xp, y)], index[("2", xp, yp)]))
    v1l = VertexSet(total, (1 << k) - 1)
    v1r = VertexSet(total, ((1 << (n * len(side2))) - 1) << k)
    v2 = VertexSet(total, ((1 << total) - 1) ^ v1l.bits ^ v1r.bits)
    composed = Graph.from_edges(total, edges, (v1l | v1r, v2))
    return ReductionInstance(aprime, gadget, u, composed, v1l, v1r, v2, tuple(labels))


def compose_with_copies(aprime: BinaryMatrix, gadget: Graph, u: int) -> ReductionInstance:
    """Experimental variant for a non-bipartite gadget such as a Paley graph.

    One full copy of the gadget per row of ``A'``; column vertex ``x`` joins
    the ``u``-vertex of copy ``x'`` when ``A'[x', x] = 1``.  The result is
    generally not bipartite, so only ``delta_loc_exact`` can verify it.
    """
    if not 0 <= u < gadget.n:
        raise InputError(f"u = {u} out of range for the gadget")
    k, n, m = aprime.cols, aprime.rows, gadget.n
    labels = [("1L", x, u) for x in range(k)] + [("copy", xp, y) for xp in range(n) for y in range(m)]
    total = len(labels)
    edges = [(x, k + xp * m + u) for x in range(k) for xp in range(n) if aprime.entry(xp, x)]
    for xp in range(n):
        base = k + xp * m
        edges += [(base + a, base + b) for a, b in gadget.edges()]
    v1l = VertexSet(total, (1 << k) - 1)
    rest = v1l.complement()
    return ReductionInstance(aprime, gadget, u, Graph.from_edges(total, edges), v1l,
                             VertexSet(total), rest, tuple(labels), experimental=True)


@dataclass(frozen=True)
class PreconditionReport:
    gadget_delta_loc: int
    n: int
    composed_min_degree: int
    gadget_ok: bool  # δ_loc(G_B) > n + 1
    degree_ok: bool  # δ(G) <= n

    @property
    def passed(self) -> bool:
        return self.gadget_ok and self.degree_ok

    def failures(self) -> list[str]:
        out = []
        if not self.gadget_ok:
            out.append(f"gadget δ_loc = {self.gadget_delta_loc} is not > n + 1 = {self.n + 1}")
        if not self.degree_ok:
            out.append(f"composed min degree {self.composed_min_degree} exceeds n = {self.n}")
        return out


def verify_preconditions(inst: ReductionInstance, cap: Optional[int] = None) -> PreconditionReport:
    if inst.experimental:
        gd = delta_loc_exact(inst.gadget, cap).value
    else:
        gd = delta_loc_bipartite(inst.gadget, DEFAULT_ONESIDE_CAP if cap is None else cap).value
    md = min_degree(inst.composed)
    return PreconditionReport(gd, inst.n, md, gd > inst.n + 1, md <= inst.n)


@dataclass
class ReductionReport:
    d_min: int
    delta_loc_plus_1: Optional[int]
    equal: bool
    method: str  # "exact", "theorem-assisted" or "kernel"
    witness: Optional[VertexSet] = None
    restricted_min: Optional[int] = None
    falsifier_samples: int = 0
    falsifier_witness: Optional[VertexSet] = None
    preconditions: Optional[PreconditionReport] = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "d_min": self.d_min,
            "delta_loc_plus_1": self.delta_loc_plus_1,
            "delta_loc": None if self.delta_loc_plus_1 is None else self.delta_loc_plus_1 - 1,
            "equal": self.equal,
            "method": self.method,
            "witness": None if self.witness is None else self.witness.members(),
            "restricted_min": self.restricted_min,
            "falsifier_samples": self.falsifier_samples,
            "falsifier_witness": None if self.falsifier_witness is None else self.falsifier_witness.members(),
            "notes": self.notes,
        }
        if self.preconditions is not None:
            p = self.preconditions
            out["preconditions"] = {
                "gadget_delta_loc": p.gadget_delta_loc,
                "n": p.n,
                "composed_min_degree": p.composed_min_degree,
                "gadget_ok": p.gadget_ok,
                "degree_ok": p.degree_ok,
            }
        return out


def short_circuit(a: BinaryMatrix) -> Optional[ReductionReport]:
    """A code with a nontrivial kernel has a zero codeword: answer 0, no graph."""
    if kernel_dim(a) > 0:
        return ReductionReport(0, None, True, "kernel", notes=["kernel is nontrivial; min weight is 0"])
    return None


def verify_reduction(inst: ReductionInstance, a: BinaryMatrix, cap: Optional[int] = None,
                     falsifier_trials: int = 1_000_000, seed: int = 0,
                     workers: int = 1, force_assisted: bool = False) -> ReductionReport:
    """Check ``δ_loc(composed) + 1 == d_min(A)``.

    ``exact``: one-sided enumeration of the composed graph when both sides
    fit the cap.  ``theorem-assisted``: exact minimum over ``D ⊆ V_1L``
    (which the reduction argument shows is the global minimum) plus a
    randomized search on each side for anything smaller.
    """
    sc = short_circuit(a)
    if sc is not None:
        return sc
    pre = verify_preconditions(inst, cap)
    if not pre.passed:
        raise PreconditionFailure("; ".join(pre.failures()))
    dm = min_distance(a).value
    cap = exact_cap() if cap is None else cap
    g = inst.composed
    if inst.experimental:
        sides_fit = g.n <= cap
    else:
        sides_fit = all(len(s) <= cap for s in g.bipartition)
    if sides_fit and not force_assisted:
        res = delta_loc_exact(g, cap, workers) if inst.experimental else delta_loc_bipartite(g, cap, workers)
        value = res.value + 1
        return ReductionReport(dm, value, value == dm, "exact", res.witness, preconditions=pre)
    restricted = delta_loc_restricted(g, inst.v1l, cap, workers)
    rmin = restricted.value + 1
    pools = [inst.v1l | inst.v1r, inst.v2] if not inst.experimental else [VertexSet.full(g.n)]
    per_pool = max(falsifier_trials // len(pools), 1)
    found = None
    for i, pool in enumerate(pools):
        if rmin - 1 >= 1 and pool:
            found = falsifier_sample(g, rmin - 1, per_pool, seed + i, pool)
        if found is not None:
            break
    notes = ["minimum over V_1L is exact; global minimality rests on the reduction argument "
             "and was probed by random sampling, not proven by enumeration"]
    return ReductionReport(dm, rmin, rmin == dm and found is None, "theorem-assisted", restricted.witness,
                           rmin, per_pool * len(pools), found, pre, notes)


def save_bundle(inst: ReductionInstance, directory: Union[str, Path]) -> Path:
    """Write ``aprime.txt``, ``gadget.edges``, ``composed.{edges,g6,dot}`` and
    ``manifest.json`` into ``directory``."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    (d / "aprime.txt").write_text(format_matrix(inst.aprime))
    (d / "gadget.edges").write_text(format_edge_list(inst.gadget))
    (d / "composed.edges").write_text(format_edge_list(inst.composed))
    if inst.composed.n <= 62:
        (d / "composed.g6").write_text(to_graph6(inst.composed) + "\n")
    labels = ["{}:{}:{}".format(*lab) for lab in inst.labels]
    (d / "composed.dot").write_text(to_dot(inst.composed, "composed", labels))
    (d / "manifest.json").write_text(json.dumps(inst.manifest(), indent=2) + "\n")
    return d


def load_bundle(directory: Union[str, Path]) -> ReductionInstance:
    d = Path(directory)
    manifest = json.loads((d / "manifest.json").read_text())
    aprime = read_matrix(d / "aprime.txt")
    gadget = parse_edge_list((d / "gadget.edges").read_text())
    if manifest.get("experimental"):
        return compose_with_copies(aprime, gadget, manifest["u"])
    sides = manifest["gadget_sides"]
    gadget = gadget.with_bipartition(VertexSet.of(gadget.n, sides[0]), VertexSet.of(gadget.n, sides[1]))
    return compose(aprime, gadget, manifest["u"])
