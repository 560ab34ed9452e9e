"""Hot inner loops, compiled with numba when available.

Every kernel is written once as plain Python over numpy arrays.  At import
time the kernels are wrapped with ``numba.njit`` unless ``BPGLAB_JIT=0`` is
set in the environment (or numba is missing), in which case the same source
runs as ordinary Python.  Both variants stay reachable through
:data:`PY` and :data:`JIT` for cross-checks and benchmarks.

Adjacency is passed as a square ``uint8`` matrix, vertices 0-based.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _jit_requested() -> bool:
    return os.environ.get("BPGLAB_JIT", "1").strip().lower() not in ("0", "false", "no", "off")


JIT_ENABLED = numba is not None and _jit_requested()


def embed_search(ag, ah, order, cand, out, limit):
    """Backtracking search for induced embeddings of ``ah`` into ``ag``.

    ``order`` lists pattern vertices in search order; ``cand[u, v]`` is nonzero
    when pattern vertex ``u`` may be mapped to host vertex ``v``.  Found maps
    are written to the rows of ``out`` (indexed by pattern vertex) while there
    is room.  The search stops after ``limit`` maps when ``limit > 0``;
    otherwise it runs to exhaustion.  Returns the number of maps found.
    """
    ng = ag.shape[0]
    k = order.shape[0]
    assign = np.full(ah.shape[0], -1, dtype=np.int64)
    used = np.zeros(ng, dtype=np.uint8)
    nxt = np.zeros(k + 1, dtype=np.int64)
    count = 0
    depth = 0
    while depth >= 0:
        if depth == k:
            if count < out.shape[0]:
                for i in range(ah.shape[0]):
                    out[count, i] = assign[i]
            count += 1
            if limit > 0 and count >= limit:
                return count
            depth -= 1
            continue
        u = order[depth]
        if assign[u] >= 0:
            used[assign[u]] = 0
            assign[u] = -1
        v = nxt[depth]
        while v < ng:
            if cand[u, v] != 0 and used[v] == 0:
                ok = True
                for e in range(depth):
                    w = order[e]
                    if ag[v, assign[w]] != ah[u, w]:
                        ok = False
                        break
                if ok:
                    break
            v += 1
        if v < ng:
            assign[u] = v
            used[v] = 1
            nxt[depth] = v + 1
            depth += 1
            nxt[depth] = 0
        else:
            nxt[depth] = 0
            depth -= 1
    return count


def max_independent_set(a, mask0):
    """Independence number of the subgraph induced by the bitmask ``mask0``.

    Needs at most 63 vertices.  Branch and bound: a vertex of degree at most
    one in the remaining graph is always taken; otherwise branch on a vertex
    of maximum remaining degree.
    """
    n = a.shape[0]
    nbr = np.zeros(n, dtype=np.int64)
    for i in range(n):
        m = 0
        for j in range(n):
            if a[i, j] != 0:
                m |= np.int64(1) << j
        nbr[i] = m
    stack_mask = np.zeros(2 * n + 2, dtype=np.int64)
    stack_size = np.zeros(2 * n + 2, dtype=np.int64)
    top = 0
    stack_mask[0] = mask0
    stack_size[0] = 0
    best = 0
    while top >= 0:
        mask = stack_mask[top]
        size = stack_size[top]
        top -= 1
        while True:
            if mask == 0:
                if size > best:
                    best = size
                break
            c = 0
            x = mask
            while x != 0:
                x &= x - 1
                c += 1
            if size + c <= best:
                break
            pick = -1
            pick_deg = -1
            low = -1
            rest = mask
            while rest != 0:
                low_bit = rest & -rest
                rest ^= low_bit
                v = 0
                while (low_bit >> v) != 1:
                    v += 1
                d = 0
                x = nbr[v] & mask
                while x != 0:
                    x &= x - 1
                    d += 1
                if d <= 1:
                    low = v
                    break
                if d > pick_deg:
                    pick_deg = d
                    pick = v
            if low >= 0:
                mask &= ~(nbr[low] | (np.int64(1) << low))
                size += 1
                continue
            top += 1
            stack_mask[top] = mask & ~(np.int64(1) << pick)
            stack_size[top] = size
            mask &= ~(nbr[pick] | (np.int64(1) << pick))
            size += 1
    return best


def longest_path_edges(a):
    """Number of edges on a longest (not necessarily induced) path."""
    n = a.shape[0]
    best = 0
    path = np.zeros(n, dtype=np.int64)
    nxt = np.zeros(n, dtype=np.int64)
    onpath = np.zeros(n, dtype=np.uint8)
    for s in range(n):
        depth = 0
        path[0] = s
        nxt[0] = 0
        onpath[s] = 1
        while depth >= 0:
            if depth > best:
                best = depth
            if best == n - 1:
                return best
            u = path[depth]
            v = nxt[depth]
            while v < n and (a[u, v] == 0 or onpath[v] != 0):
                v += 1
            if v < n:
                nxt[depth] = v + 1
                depth += 1
                path[depth] = v
                nxt[depth] = 0
                onpath[v] = 1
            else:
                onpath[u] = 0
                depth -= 1
    return best


def distinguishing_scan(a):
    """Distinguishing number by exhaustive scan over all proper subsets U."""
    n = a.shape[0]
    nbr = np.zeros(n, dtype=np.int64)
    for i in range(n):
        m = 0
        for j in range(n):
            if a[i, j] != 0:
                m |= np.int64(1) << j
        nbr[i] = m
    best = 0
    full = (np.int64(1) << n) - 1
    sigs = np.zeros(n, dtype=np.int64)
    sizes = np.zeros(n, dtype=np.int64)
    for u in range(full):
        outside = 0
        for v in range(n):
            if (u >> v) & 1 == 0:
                sigs[outside] = nbr[v] & u
                outside += 1
        if outside < (best + 1) * (best + 1):
            continue
        srt = np.sort(sigs[:outside])
        ncls = 0
        run = 1
        for i in range(1, outside + 1):
            if i < outside and srt[i] == srt[i - 1]:
                run += 1
            else:
                sizes[ncls] = run
                ncls += 1
                run = 1
        cls = -np.sort(-sizes[:ncls])
        k = 0
        for i in range(ncls):
            if cls[i] >= i + 1:
                k = i + 1
            else:
                break
        if k > best:
            best = k
    return best


_KERNELS = ("embed_search", "max_independent_set", "longest_path_edges", "distinguishing_scan")

PY = SimpleNamespace(**{name: globals()[name] for name in _KERNELS})

if numba is not None:
    JIT = SimpleNamespace(**{name: numba.njit(cache=True)(globals()[name]) for name in _KERNELS})
else:  # pragma: no cover
    JIT = PY

ACTIVE = JIT if JIT_ENABLED else PY
