"""Text formats for graphs: edge list, graph6 and DOT."""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .errors import InputError
from .graph import Graph

GRAPH6_MAX_N = 62


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("edge list is empty")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise InputError(f"bad header line {lines[0]!r}, expected 'n m'") from None
    if len(lines) - 1 != m:
        raise InputError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"bad edge line {ln!r}") from None
        edges.append((u, v))
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise InputError(f"graph6 export supports n <= {GRAPH6_MAX_N}")
    bits = [g.rows[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return "".join(chars)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise InputError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= GRAPH6_MAX_N:
        raise InputError(f"graph6 import supports n <= {GRAPH6_MAX_N}")
    need = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (need + 5) // 6:
        raise InputError("graph6 string has the wrong length")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise InputError(f"invalid graph6 character {ch!r}")
        bits.extend(val >> (5 - t) & 1 for t in range(6))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_dot(g: Graph, name: str = "G", labels=None) -> str:
    out = [f"graph {name} {{"]
    colour = {}
    if g.bipartition is not None:
        for v in g.bipartition[0]:
            colour[v] = "lightblue"
        for v in g.bipartition[1]:
            colour[v] = "lightsalmon"
    for v in range(g.n):
        attrs = []
        if labels is not None:
            attrs.append(f'label="{labels[v]}"')
        if v in colour:
            attrs.append(f'style=filled, fillcolor="{colour[v]}"')
        out.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def read_graph(path: Union[str, Path]) -> Graph:
    """Read an edge-list file, or graph6 when the suffix is ``.g6``."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".g6" or text.startswith(">>graph6<<"):
        return from_graph6(text.splitlines()[0])
    return parse_edge_list(text)
