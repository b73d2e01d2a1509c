"""Pure-Python kernels.  Semantics match ``_core.pyx`` bit for bit."""

MASK64 = (1 << 64) - 1
NO_MIN = -1


def gray_min(vecs, tags, start, stop):
    """Scan Gray-code indices ``i`` in ``[start, stop)``, skipping 0.

    Index ``i`` selects the pool elements whose bits are set in
    ``i ^ (i >> 1)``.  The score of a selection is
    ``popcount(XOR(tags) | XOR(vecs))``.  Returns ``(best, first_index,
    examined)``; ``best`` is ``-1`` when the range holds no index.
    """
    m = len(vecs)
    start = max(start, 1)
    stop = min(stop, 1 << m)
    if start >= stop:
        return NO_MIN, 0, 0
    g = start ^ (start >> 1)
    d = 0
    acc = 0
    j = 0
    while g >> j:
        if g >> j & 1:
            d ^= tags[j]
            acc ^= vecs[j]
        j += 1
    best = (d | acc).bit_count()
    best_i = start
    for i in range(start + 1, stop):
        j = (i & -i).bit_length() - 1
        d ^= tags[j]
        acc ^= vecs[j]
        s = (d | acc).bit_count()
        if s < best:
            best = s
            best_i = i
    return best, best_i, stop - start


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def falsify(vecs, tags, threshold, trials, seed):
    """Random search for a selection scoring ``<= threshold``.

    Selection size: with probability 1/2 geometric(1/2) starting at 1
    (capped at the pool size), otherwise uniform on ``1..m``.  Members come
    from a partial Fisher-Yates shuffle of a persistent index array.
    Returns ``(selection_mask, trials_used)``; the mask is 0 if nothing
    was found.
    """
    m = len(vecs)
    if m == 0:
        return 0, 0
    rng = SplitMix64(seed)
    perm = list(range(m))
    for t in range(1, trials + 1):
        if rng.next() & 1:
            k = 1
            while k < m and rng.next() & 1:
                k += 1
        else:
            k = 1 + rng.next() % m
        d = 0
        acc = 0
        sel = 0
        for a in range(k):
            b = a + rng.next() % (m - a)
            perm[a], perm[b] = perm[b], perm[a]
            j = perm[a]
            d ^= tags[j]
            acc ^= vecs[j]
            sel |= 1 << j
        if (d | acc).bit_count() <= threshold:
            return sel, t
    return 0, trials


def lc_orbit(rows, node_cap):
    """BFS over the labelled local-complementation orbit of ``rows``.

    Returns ``(orbit_size, min_degree, sequence, truncated)`` where
    ``sequence`` reaches a graph of minimum degree ``min_degree``.
    """
    n = len(rows)
    start = tuple(rows)
    parent = {start: None}
    best = min((r.bit_count() for r in start), default=0)
    best_key = start
    frontier = [start]
    truncated = False
    while frontier and not truncated:
        nxt = []
        for cur in frontier:
            for u in range(n):
                nb = cur[u]
                if nb & (nb - 1) == 0:
                    continue  # fewer than two neighbours: G * u = G
                out = list(cur)
                x = nb
                while x:
                    low = x & -x
                    a = low.bit_length() - 1
                    out[a] ^= nb ^ low
                    x ^= low
                key = tuple(out)
                if key in parent:
                    continue
                if len(parent) >= node_cap:
                    truncated = True
                    break
                parent[key] = (cur, u)
                deg = min(r.bit_count() for r in key)
                if deg < best:
                    best = deg
                    best_key = key
                nxt.append(key)
            if truncated:
                break
        frontier = nxt
    seq = []
    key = best_key
    while parent[key] is not None:
        key, u = parent[key]
        seq.append(u)
    seq.reverse()
    return len(parent), best, seq, truncated
