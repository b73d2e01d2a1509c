import itertools

import pytest
from hypothesis import strategies as st

from lcdeg.graph import Graph, VertexSet

ACCEPTANCE_LINES = []


def graph_from_bits(n, bits):
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return graph_from_bits(n, bits)


@st.composite
def graphs_with_set(draw, min_n=1, max_n=10, nonempty=False):
    g = draw(graphs(min_n, max_n))
    lo = 1 if nonempty else 0
    bits = draw(st.integers(lo, (1 << g.n) - 1))
    return g, VertexSet(g.n, bits)


def brute_delta_loc(g):
    """Independent oracle: direct per-vertex parity count over all nonempty D."""
    best = None
    for mask in range(1, 1 << g.n):
        size = 0
        for v in range(g.n):
            if mask >> v & 1 or bin(g.rows[v] & mask).count("1") % 2 == 1:
                size += 1
        best = size if best is None else min(best, size)
    return best - 1


@pytest.fixture
def acceptance():
    """Record a one-line pass/fail verdict for the terminal summary."""

    def record(number, passed, detail):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
