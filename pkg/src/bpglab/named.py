"""Named graph families with fixed, documented vertex labellings.

=================  ==========================================================
family             labelling
=================  ==========================================================
path(n)            1-2-...-n
cycle(n)           path plus the edge 1-n  (n >= 3)
complete(n)        all pairs
complete-bipartite sides 1..p and p+1..p+q
star(m)            K_{1,m}: centre 1, leaves 2..m+1
spider(i,j,k)      centre 1, then the legs of i, j and k edges in turn
sun3               4-cycle 1-2-3-4, pendants 5@1, 6@3, 7@4
phi                rows 1-2-3 and 4-5-6, rungs 1-4, 2-5, 3-6, pendant 7@5
hgraph(k)          path 1..k, pendants k+1, k+2 at 1 and k+3, k+4 at k
matching(m)        edges (2i-1, 2i)
empty(n)           no edges
=================  ==========================================================

``hgraph(1)`` collapses to ``K_{1,4}`` because both pairs of pendants hang
from the same vertex.
"""

from __future__ import annotations

from .graph import Graph


def path(n: int) -> Graph:
    if n < 0:
        raise ValueError("path needs n >= 0")
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete needs n >= 0")
    return Graph.from_edges(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 0 or q < 0:
        raise ValueError("complete-bipartite needs p, q >= 0")
    return Graph.from_edges(p + q, ((i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)))


def star(m: int) -> Graph:
    """``S_m = K_{1,m}``; ``star(0)`` is ``K_1``."""
    if m < 0:
        raise ValueError("star needs m >= 0")
    return Graph.from_edges(m + 1, ((1, j) for j in range(2, m + 2)))


def spider(i: int, j: int, k: int) -> Graph:
    if min(i, j, k) < 1:
        raise ValueError("spider needs i, j, k >= 1")
    edges = []
    nxt = 2
    for leg in (i, j, k):
        prev = 1
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt - 1, edges)


def sun3() -> Graph:
    return Graph.from_edges(7, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (3, 6), (4, 7)])


def phi() -> Graph:
    return Graph.from_edges(7, [(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6), (5, 7)])


def hgraph(k: int) -> Graph:
    if k < 1:
        raise ValueError("hgraph needs k >= 1")
    edges = [(i, i + 1) for i in range(1, k)]
    edges += [(1, k + 1), (1, k + 2), (k, k + 3), (k, k + 4)]
    return Graph.from_edges(k + 4, edges)


def matching(m: int) -> Graph:
    if m < 0:
        raise ValueError("matching needs m >= 0")
    return Graph.from_edges(2 * m, ((2 * i - 1, 2 * i) for i in range(1, m + 1)))


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("empty needs n >= 0")
    return Graph(n)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "spider": (spider, 3),
    "sun3": (sun3, 0),
    "phi": (phi, 0),
    "hgraph": (hgraph, 1),
    "matching": (matching, 1),
    "empty": (empty, 1),
}


def make_named(family: str, *params: int) -> Graph:
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)
