"""Acceptance criteria, one test each.  Run with ``-s`` to see the verdicts
as they happen; they are also collected in the terminal summary."""

import math
import random
import time
from pathlib import Path

from lcdeg import kernels
from lcdeg.codes import BinaryMatrix, gadget_code_search, min_distance, min_distance_by_support, read_matrix, systematic_form
from lcdeg.graph import (
    Graph,
    VertexSet,
    closed_odd_size,
    even_neighborhood,
    local_complement,
    min_degree,
    odd_neighborhood,
)
from lcdeg.lll import binary_entropy, solve_max_c
from lcdeg.locmindeg import delta_loc_bipartite, delta_loc_exact, delta_loc_via_orbit
from lcdeg.paley import is_prime, paley_graph, verify_lemma_odd_even, verify_paley_theorem, verify_weil_bound
from lcdeg.reduction import compose, gadget_graph, verify_preconditions, verify_reduction

from conftest import graph_from_bits

DATA = Path(__file__).resolve().parent.parent / "data"


def _random_graph(rng, n):
    return graph_from_bits(n, [rng.random() < 0.5 for _ in range(n * (n - 1) // 2)])


def test_criterion_1_paley_theorem(acceptance):
    t0 = time.perf_counter()
    small = {p: verify_paley_theorem(paley_graph(p)) for p in (5, 13, 17)}
    t_small = time.perf_counter() - t0
    t0 = time.perf_counter()
    big = verify_paley_theorem(paley_graph(29))
    t_big = time.perf_counter() - t0
    ok = (all(r.mode == "verified" and r.holds for r in small.values())
          and small[5].delta_loc == 2 and t_small < 10
          and big.mode == "verified" and big.holds and big.closed_odd_bound_holds and t_big < 600)
    vals = ", ".join(f"p={p}: {r.delta_loc}" for p, r in small.items())
    acceptance(1, ok, f"{vals} in {t_small:.2f}s; p=29: delta_loc={big.delta_loc}, "
                      f"min |S ∪ Odd(S)|={big.min_closed_odd} >= {math.sqrt(29) - 0.5:.3f} "
                      f"in {t_big:.1f}s ({kernels.BACKEND} backend)")
    assert ok


def test_criterion_2_odd_even_identity(acceptance):
    results = {p: verify_lemma_odd_even(paley_graph(p), 200, seed=p) for p in (5, 13, 17, 29, 37, 41)}
    ok = all(r.passed and r.checked == 200 for r in results.values())
    acceptance(2, ok, f"{sum(r.checked for r in results.values())} random sets over 6 primes, "
                      f"exact identity {'held' if ok else 'FAILED'}")
    assert ok


def test_criterion_3_weil_bound(acceptance):
    primes = [p for p in range(5, 62) if is_prime(p) and p % 4 == 1]
    results = {p: verify_weil_bound(paley_graph(p), 3, 200, seed=p) for p in primes}
    expected = {p: p + math.comb(p, 2) + math.comb(p, 3) + 200 for p in primes}
    ok = all(r.passed and r.checked == expected[p] for p, r in results.items())
    acceptance(3, ok, f"primes {primes}: {sum(r.checked for r in results.values())} sets, zero failures"
               if ok else "bound violated or sets skipped")
    assert ok


def test_criterion_4_oracle_equivalence(acceptance):
    checked = 0
    mismatch = None
    for n in range(1, 6):
        m = n * (n - 1) // 2
        for mask in range(1 << m):
            g = graph_from_bits(n, [mask >> i & 1 for i in range(m)])
            checked += 1
            if delta_loc_via_orbit(g) != delta_loc_exact(g).value:
                mismatch = mismatch or g
    rng = random.Random(4)
    for n in (6, 7):
        for _ in range(200):
            g = _random_graph(rng, n)
            checked += 1
            if delta_loc_via_orbit(g) != delta_loc_exact(g).value:
                mismatch = mismatch or g
    ok = mismatch is None
    acceptance(4, ok, f"{checked} graphs, orbit oracle == exact search" if ok else f"mismatch on {mismatch}")
    assert ok


def test_criterion_5_property_suite(acceptance):
    rng = random.Random(5)
    failures = []
    for i in range(1000):
        n = rng.randint(1, 24)
        g = _random_graph(rng, n)
        s = VertexSet(n, rng.randrange(1, 1 << n))
        if len(s | odd_neighborhood(g, s)) + len(s | even_neighborhood(g, s)) != n + len(s):
            failures.append((i, "counting"))
        d1, d2 = VertexSet(n, rng.getrandbits(n)), VertexSet(n, rng.getrandbits(n))
        if odd_neighborhood(g, d1 ^ d2) != odd_neighborhood(g, d1) ^ odd_neighborhood(g, d2):
            failures.append((i, "linearity"))
        u = rng.randrange(n)
        h = local_complement(g, u)
        if local_complement(h, u) != g:
            failures.append((i, "involution"))
        val = delta_loc_exact(g)
        if val.value > min_degree(g) or closed_odd_size(g, val.witness) != val.value + 1:
            failures.append((i, "degree bound"))
        if delta_loc_exact(h).value != val.value:
            failures.append((i, "LC invariance"))
    for i in range(1000):
        a = rng.randint(1, 15)
        b = rng.randint(0, 16 - a)
        edges = [(x, a + y) for x in range(a) for y in range(b) if rng.random() < 0.5]
        g = Graph.from_edges(a + b, edges)
        if delta_loc_bipartite(g).value != delta_loc_exact(g).value:
            failures.append((i, "bipartite one-sided"))
    ok = not failures
    acceptance(5, ok, "1000 graphs n<=24 and 1000 bipartite n<=16, zero failures"
               if ok else f"{len(failures)} failures, first {failures[0]}")
    assert ok


def test_criterion_6_lll_constants(acceptance):
    t0 = time.perf_counter()
    cb = solve_max_c("bipartite")
    cg = solve_max_c("general")
    elapsed = time.perf_counter() - t0
    gap = abs(2 * binary_entropy(cb) - 1)
    ok = abs(cb - 0.110) <= 5e-4 and abs(cg - 0.189) <= 1e-3 and gap <= 1e-4 and elapsed < 1
    acceptance(6, ok, f"bipartite c={cb:.6f} (|2H(c)-1|={gap:.1e}), general c={cg:.6f}, {elapsed:.2f}s")
    assert ok


def test_criterion_7_reduction_exact(acceptance):
    t0 = time.perf_counter()
    a = read_matrix(DATA / "tiny_exact.txt")
    sf = systematic_form(a)
    b = gadget_code_search(10, 5, 20_000, seed=1)
    inst = compose(sf.aprime, gadget_graph(b), 0)
    pre = verify_preconditions(inst)
    rep = verify_reduction(inst, a)
    elapsed = time.perf_counter() - t0
    ok = (inst.k <= 3 and inst.n <= 2 and pre.passed and rep.method == "exact" and rep.equal
          and rep.d_min == min_distance_by_support(a) and elapsed < 300)
    acceptance(7, ok, f"k={inst.k}, n={inst.n}, gadget delta_loc={pre.gadget_delta_loc}, "
                      f"delta_loc+1={rep.delta_loc_plus_1}, d_min={rep.d_min}, method={rep.method}, {elapsed:.1f}s")
    assert ok


def test_criterion_8_reduction_theorem_assisted(acceptance):
    a = read_matrix(DATA / "hamming74.txt")
    dm = min_distance_by_support(a)
    sf = systematic_form(a)
    b = gadget_code_search(10, sf.aprime.rows + 3, 10_000, seed=0, family="circulant")
    inst = compose(sf.aprime, gadget_graph(b), 0)
    rep = verify_reduction(inst, a, falsifier_trials=1_000_000, seed=0)
    ok = (dm == 3 and min_distance(a).value == 3 and rep.preconditions.passed
          and rep.method == "theorem-assisted" and rep.restricted_min == 3
          and rep.falsifier_samples == 1_000_000 and rep.falsifier_witness is None and rep.equal)
    acceptance(8, ok, f"Hamming [7,4] d_min={dm}, gadget delta_loc={rep.preconditions.gadget_delta_loc}, "
                      f"V_1L minimum={rep.restricted_min}, {rep.falsifier_samples} falsifier samples, "
                      f"witness={rep.falsifier_witness}, method={rep.method}")
    assert ok
