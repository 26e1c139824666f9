# cython: boundscheck=False, wraparound=False
"""Compiled enumeration kernel.

Same contract as the pure-Python twin (`_pykernel`): bitmask encoding
with bit p set for an R at step p, lexicographic enumeration with R < L.
Masks fit in 64 bits for any practical n (the enumeration cap upstream
is far below 32).
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef void _enum_rec(list out, unsigned long long mask, int pos, int r, int l, int n):
    if pos == 2 * n:
        out.append(mask)
        return
    if r < n:
        _enum_rec(out, mask | (<unsigned long long>1 << pos), pos + 1, r + 1, l, n)
    if l < r:
        _enum_rec(out, mask, pos + 1, r, l + 1, n)


def enumerate_masks(int n):
    """All Dyck-path bitmasks of semi-length n, lexicographic with R first."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [0]
    out = []
    _enum_rec(out, 0, 0, 0, 0, n)
    return out


cdef void _hist_rec(long long* hist, int pos, int r, int l, int comps, int n):
    if pos == 2 * n:
        hist[comps] += 1
        return
    if r < n:
        _hist_rec(hist, pos + 1, r + 1, l, comps, n)
    if l < r:
        _hist_rec(hist, pos + 1, r, l + 1, comps + (1 if l + 1 == r else 0), n)


def component_histogram(int n):
    """Count Dyck paths of semi-length n by number of returns to height 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [1]
    cdef long long* hist = <long long*>malloc((n + 1) * sizeof(long long))
    if hist is NULL:
        raise MemoryError()
    cdef int i
    for i in range(n + 1):
        hist[i] = 0
    _hist_rec(hist, 0, 0, 0, 0, n)
    result = [hist[i] for i in range(n + 1)]
    free(hist)
    return result
