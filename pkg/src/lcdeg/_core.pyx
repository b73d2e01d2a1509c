# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over 64-bit words.  Semantics match ``_pycore``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

WORD_BITS = 64
MAX_POOL = 62


cdef uint64_t* _copy_words(seq, Py_ssize_t m) except NULL:
    cdef uint64_t* out = <uint64_t*>malloc((m if m > 0 else 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t j
    for j in range(m):
        out[j] = <uint64_t>seq[j]
    return out


def gray_min(vecs, tags, start, stop):
    cdef Py_ssize_t m = len(vecs)
    if m > MAX_POOL:
        raise ValueError("pool too large for the compiled kernel")
    cdef uint64_t lo = max(<uint64_t>start, 1)
    cdef uint64_t hi = min(<uint64_t>stop, (<uint64_t>1) << m)
    if lo >= hi:
        return -1, 0, 0
    cdef uint64_t* v = _copy_words(vecs, m)
    cdef uint64_t* t = _copy_words(tags, m)
    cdef uint64_t g = lo ^ (lo >> 1)
    cdef uint64_t d = 0, acc = 0, i, best_i = lo
    cdef int j, s, best
    with nogil:
        for j in range(m):
            if (g >> j) & 1:
                d ^= t[j]
                acc ^= v[j]
        best = __builtin_popcountll(d | acc)
        i = lo + 1
        while i < hi:
            j = __builtin_ctzll(i)
            d ^= t[j]
            acc ^= v[j]
            s = __builtin_popcountll(d | acc)
            if s < best:
                best = s
                best_i = i
            i += 1
    free(v)
    free(t)
    return best, best_i, hi - lo


cdef inline uint64_t _splitmix(uint64_t* state) nogil:
    state[0] += <uint64_t>0x9E3779B97F4A7C15
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


def falsify(vecs, tags, threshold, trials, seed):
    cdef Py_ssize_t m = len(vecs)
    if m > MAX_POOL:
        raise ValueError("pool too large for the compiled kernel")
    if m == 0:
        return 0, 0
    cdef uint64_t* v = _copy_words(vecs, m)
    cdef uint64_t* t = _copy_words(tags, m)
    cdef int* perm = <int*>malloc(m * sizeof(int))
    if perm == NULL:
        free(v)
        free(t)
        raise MemoryError()
    cdef uint64_t state = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef long long n_trials = trials, tr, found_at = 0
    cdef int thr = threshold
    cdef int k, a, b, j, tmp
    cdef uint64_t d, acc, sel, found_sel = 0
    for a in range(m):
        perm[a] = a
    with nogil:
        tr = 1
        while tr <= n_trials:
            if _splitmix(&state) & 1:
                k = 1
                while k < m and (_splitmix(&state) & 1):
                    k += 1
            else:
                k = 1 + <int>(_splitmix(&state) % <uint64_t>m)
            d = 0
            acc = 0
            sel = 0
            for a in range(k):
                b = a + <int>(_splitmix(&state) % <uint64_t>(m - a))
                tmp = perm[a]
                perm[a] = perm[b]
                perm[b] = tmp
                j = perm[a]
                d ^= t[j]
                acc ^= v[j]
                sel |= (<uint64_t>1) << j
            if __builtin_popcountll(d | acc) <= thr:
                found_sel = sel
                found_at = tr
                break
            tr += 1
    free(v)
    free(t)
    free(perm)
    if found_at:
        return found_sel, found_at
    return 0, n_trials
