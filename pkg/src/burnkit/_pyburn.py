"""Pure-Python burn-propagation kernel (fallback for the compiled one).

Semantics are identical to burnkit._fastburn: staggered multi-source BFS
over a CSR graph.  Round t first spreads fire from every vertex burned at
round t-1, then ignites sources[t-1] if it exists and is still unburned.
Returns an int32 array of first-burn rounds, -1 for never burned.
"""

import numpy as np


def burn_times_csr(indptr, indices, sources):
    ip = indptr.tolist() if hasattr(indptr, "tolist") else list(indptr)
    idx = indices.tolist() if hasattr(indices, "tolist") else list(indices)
    src = sources.tolist() if hasattr(sources, "tolist") else list(sources)
    n = len(ip) - 1
    k = len(src)
    times = [-1] * n
    cur: list[int] = []
    t = 0
    while cur or t < k:
        t += 1
        nxt: list[int] = []
        for u in cur:
            for i in range(ip[u], ip[u + 1]):
                v = idx[i]
                if times[v] < 0:
                    times[v] = t
                    nxt.append(v)
        if t <= k:
            s = src[t - 1]
            if times[s] < 0:
                times[s] = t
                nxt.append(s)
        cur = nxt
    return np.asarray(times, dtype=np.int32)
