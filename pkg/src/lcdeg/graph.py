"""Bit-row graphs and the neighbourhood primitives.

A graph on ``n`` vertices is stored as ``n`` Python integers; bit ``v`` of
row ``u`` is set iff ``u`` and ``v`` are adjacent.  Vertex subsets are
integers too, so the odd neighbourhood of a set is a parity fold (XOR) of
adjacency rows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import InputError

MAX_N = 512
WORD_BITS = 64


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., n-1}`` held as a bit mask."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise InputError("negative vertex count")
        if self.bits < 0 or self.bits >> self.n:
            raise InputError(f"bits outside range for n={self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in members:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.n, self.bits ^ other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) ^ self.bits)

    def members(self) -> list[int]:
        return list(self)

    def _same(self, other: "VertexSet"):
        if self.n != other.n:
            raise InputError(f"vertex set sizes differ: {self.n} vs {other.n}")

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {self.members()})"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with adjacency rows as bit masks.

    Equality and hashing look at the labelled adjacency only; the optional
    ``bipartition`` is metadata.
    """

    n: int
    rows: Tuple[int, ...]
    bipartition: Optional[Tuple[VertexSet, VertexSet]] = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise InputError(f"vertex count {self.n} outside [0, {MAX_N}]")
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n:
            raise InputError(f"expected {self.n} rows, got {len(rows)}")
        for u, r in enumerate(rows):
            if r < 0 or r >> self.n:
                raise InputError(f"row {u} has bits outside range")
            if r >> u & 1:
                raise InputError(f"self-loop at vertex {u}")
            for v in iter_bits(r):
                if not rows[v] >> u & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        if self.bipartition is not None:
            _check_bipartition(self, *self.bipartition)

    @classmethod
    def _trusted(cls, n: int, rows: Tuple[int, ...], bipartition=None) -> "Graph":
        # skips validation; callers guarantee symmetry and zero diagonal
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "bipartition", bipartition)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], bipartition=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), bipartition)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        rows = []
        for u, line in enumerate(matrix):
            if len(line) != n:
                raise InputError("adjacency matrix is not square")
            rows.append(sum(1 << v for v, x in enumerate(line) if x))
        return cls(n, tuple(rows))

    def edges(self) -> list[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def degree(self, u: int) -> int:
        _check_vertex(self, u)
        return popcount(self.rows[u])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def with_bipartition(self, left: VertexSet, right: VertexSet) -> "Graph":
        return Graph(self.n, self.rows, (left, right))

    def adjacency_bytes(self) -> bytes:
        width = (self.n + 7) // 8
        return b"".join(r.to_bytes(width, "little") for r in self.rows)


def _check_vertex(g: Graph, u: int):
    if not isinstance(u, int) or not 0 <= u < g.n:
        raise InputError(f"vertex {u!r} out of range for n={g.n}")


def _check_set(g: Graph, d: VertexSet):
    if d.n != g.n:
        raise InputError(f"vertex set built for n={d.n}, graph has n={g.n}")


def _check_bipartition(g: Graph, left: VertexSet, right: VertexSet):
    _check_set(g, left)
    _check_set(g, right)
    if left.bits & right.bits:
        raise InputError("bipartition sides overlap")
    if left.bits | right.bits != (1 << g.n) - 1:
        raise InputError("bipartition sides do not cover all vertices")
    for side in (left, right):
        for u in side:
            if g.rows[u] & side.bits:
                raise InputError(f"edge inside a bipartition side at vertex {u}")


def neighbors(g: Graph, u: int) -> VertexSet:
    _check_vertex(g, u)
    return VertexSet(g.n, g.rows[u])


def odd_bits(rows: Sequence[int], d: int) -> int:
    """Bit mask of vertices with an odd number of neighbours in ``d``."""
    acc = 0
    for v in iter_bits(d):
        acc ^= rows[v]
    return acc


def odd_neighborhood(g: Graph, d: VertexSet) -> VertexSet:
    _check_set(g, d)
    return VertexSet(g.n, odd_bits(g.rows, d.bits))


def even_neighborhood(g: Graph, d: VertexSet) -> VertexSet:
    return odd_neighborhood(g, d).complement()


def closed_odd_size(g: Graph, d: VertexSet) -> int:
    """``|D ∪ Odd(D)|`` for a nonempty ``D``."""
    _check_set(g, d)
    if not d.bits:
        raise InputError("D must be nonempty")
    return popcount(d.bits | odd_bits(g.rows, d.bits))


def local_complement_rows(rows: Sequence[int], u: int) -> Tuple[int, ...]:
    nb = rows[u]
    out = list(rows)
    for a in iter_bits(nb):
        out[a] ^= nb & ~(1 << a)
    return tuple(out)


def local_complement(g: Graph, u: int) -> Graph:
    """``G * u``: toggle every pair of distinct neighbours of ``u``."""
    _check_vertex(g, u)
    return Graph._trusted(g.n, local_complement_rows(g.rows, u))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("empty graph has no minimum degree")
    return min(popcount(r) for r in g.rows)


def is_bipartite(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """Two-colour ``g`` by BFS; ``None`` if an odd cycle exists.

    Each component's smallest vertex is coloured left.
    """
    if g.n == 0:
        raise InputError("empty graph")
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.rows[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    left = VertexSet.of(g.n, (v for v in range(g.n) if colour[v] == 0))
    return left, left.complement()


def ensure_bipartition(g: Graph) -> Graph:
    """Return ``g`` with a bipartition attached, computing one if needed."""
    if g.bipartition is not None:
        return g
    sides = is_bipartite(g)
    if sides is None:
        raise InputError("graph is not bipartite")
    return Graph._trusted(g.n, g.rows, sides)


# Small named graphs used throughout tests and examples.

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_bipartite(a: int, b: int) -> Graph:
    n = a + b
    left = VertexSet(n, (1 << a) - 1)
    return Graph.from_edges(n, [(i, a + j) for i in range(a) for j in range(b)], (left, left.complement()))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return complete_bipartite(1, leaves)
