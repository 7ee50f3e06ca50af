# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled popcount kernel for neighbour counting against a vertex set.

Adjacency rows are packed into little-endian 64-bit words; the single hot
loop intersects every row with a query mask and popcounts the result.
"""

import numpy as np

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int abm_popcnt64(unsigned long long v) { return __builtin_popcountll(v); }
    #else
    static inline int abm_popcnt64(unsigned long long v) {
        v = v - ((v >> 1) & 0x5555555555555555ULL);
        v = (v & 0x3333333333333333ULL) + ((v >> 2) & 0x3333333333333333ULL);
        v = (v + (v >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
        return (int)((v * 0x0101010101010101ULL) >> 56);
    }
    #endif
    """
    int abm_popcnt64(unsigned long long v) nogil


def counts_vs_set(const unsigned long long[:, ::1] adj, const unsigned long long[::1] query):
    """Return ``cnt[x] = popcount(adj[x] & query)`` for every row ``x``."""
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t w = adj.shape[1]
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t i, j
    cdef long long c
    with nogil:
        for i in range(n):
            c = 0
            for j in range(w):
                c += abm_popcnt64(adj[i, j] & query[j])
            o[i] = c
    return out


def splitter_bits(const unsigned long long[:, ::1] adj,
                  const unsigned long long[::1] query,
                  long long size, long long alpha, long long beta):
    """Packed mask of the outside vertices caught strictly between the
    thresholds ``beta < count < size - alpha``."""
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t w = adj.shape[1]
    out = np.zeros(w, dtype=np.uint64)
    cdef unsigned long long[::1] o = out
    cdef Py_ssize_t i, j
    cdef long long c
    cdef long long hi = size - alpha
    if hi - beta < 2:
        return out
    with nogil:
        for i in range(n):
            if (query[i >> 6] >> (i & 63)) & 1:
                continue
            c = 0
            for j in range(w):
                c += abm_popcnt64(adj[i, j] & query[j])
            if beta < c < hi:
                o[i >> 6] |= (<unsigned long long>1) << (i & 63)
    return out


def first_splitter(const unsigned long long[:, ::1] adj,
                   const unsigned long long[::1] query,
                   long long size, long long alpha, long long beta):
    """Lowest-id splitter of the query set, or -1 when it is a module."""
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t w = adj.shape[1]
    cdef Py_ssize_t i, j
    cdef long long c
    cdef long long hi = size - alpha
    cdef Py_ssize_t found = -1
    if hi - beta < 2:
        return -1
    with nogil:
        for i in range(n):
            if (query[i >> 6] >> (i & 63)) & 1:
                continue
            c = 0
            for j in range(w):
                c += abm_popcnt64(adj[i, j] & query[j])
            if beta < c < hi:
                found = i
                break
    return found
