# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled burn-propagation kernel: staggered multi-source BFS over CSR.

Round t first spreads fire from every vertex burned at round t-1, then
ignites sources[t-1] if it exists and is still unburned.  Returns int32
first-burn rounds, -1 for never burned.  Mirrors burnkit._pyburn exactly.
"""

import numpy as np


def burn_times_csr(indptr, indices, sources):
    cdef int[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int[::1] src = np.ascontiguousarray(sources, dtype=np.int32)
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef Py_ssize_t k = src.shape[0]

    times_arr = np.full(n, -1, dtype=np.int32)
    cdef int[::1] times = times_arr
    cur_arr = np.empty(n if n > 0 else 1, dtype=np.int32)
    nxt_arr = np.empty(n if n > 0 else 1, dtype=np.int32)
    cdef int[::1] cur = cur_arr
    cdef int[::1] nxt = nxt_arr

    cdef Py_ssize_t cur_len = 0, nxt_len, i, j, t = 0
    cdef int u, v, s

    while cur_len > 0 or t < k:
        t += 1
        nxt_len = 0
        for i in range(cur_len):
            u = cur[i]
            for j in range(ip[u], ip[u + 1]):
                v = idx[j]
                if times[v] < 0:
                    times[v] = <int> t
                    nxt[nxt_len] = v
                    nxt_len += 1
        if t <= k:
            s = src[t - 1]
            if times[s] < 0:
                times[s] = <int> t
                nxt[nxt_len] = s
                nxt_len += 1
        cur, nxt = nxt, cur
        cur_len = nxt_len

    return times_arr
