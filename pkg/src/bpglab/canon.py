"""Canonical codes, isomorphism testing and exhaustive graph enumeration.

The canonical code is found by individualisation-refinement: colour
refinement to an equitable ordered partition, then branching on the cells
that are still not singletons.  Vertices of a cell that are twins of each
other (same neighbourhood apart from one another) give isomorphic subtrees,
so only one of each twin class is branched on.  Each leaf is a vertex order;
its code is the upper triangle of the reordered adjacency matrix read as a
binary number, and the canonical code is the largest leaf code.
"""

from __future__ import annotations

from typing import Iterator

from ._caps import check_cap
from .graph import Graph

Code = tuple[int, int]


def _refine(adj: list[frozenset[int]], cells: list[list[int]]) -> list[list[int]]:
    """Split cells until every vertex of a cell sees every cell equally often."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        cell_of = {}
        for idx, c in enumerate(cells):
            for v in c:
                cell_of[v] = idx
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig: dict[int, tuple] = {}
            for v in c:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[cell_of[w]] += 1
                sig[v] = tuple(counts)
            groups: dict[tuple, list[int]] = {}
            for v in c:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
            else:
                out.append(c)
        cells = out
    return cells


def _leaf_code(adj: list[frozenset[int]], order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    code = 0
    for u in order:
        for w in adj[u]:
            i, j = pos[u], pos[w]
            if i < j:
                # bit for pair (i, j) in row-major upper-triangle order, most significant first
                idx = i * n - i * (i + 1) // 2 + (j - i - 1)
                code |= 1 << (n * (n - 1) // 2 - 1 - idx)
    return code


def canonical_form(g: Graph) -> tuple[Code, list[int]]:
    """Return ``(code, order)``: the canonical code and a vertex order attaining it."""
    adj = list(g.adj)
    if g.n == 0:
        return (0, 0), []
    degree_cells: dict[int, list[int]] = {}
    for v in g.vertices:
        degree_cells.setdefault(len(adj[v]), []).append(v)
    start = _refine(adj, [degree_cells[d] for d in sorted(degree_cells)])

    best_code = -1
    best_order: list[int] = []
    stack = [start]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            continue
        cell = cells[target]
        reps = []
        for v in cell:
            if not any(adj[v] - {r} == adj[r] - {v} for r in reps):
                reps.append(v)
        for v in reversed(reps):
            split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            stack.append(_refine(adj, split))
    return (g.n, best_code), best_order


def canonical_code(g: Graph) -> Code:
    return canonical_form(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative: relabel so that vertex ``i`` is ``order[i-1]``."""
    _, order = canonical_form(g)
    new = {v: i + 1 for i, v in enumerate(order)}
    return g.relabel(new)


def _invariant(g: Graph) -> tuple:
    comps = sorted(len(c) for c in g.components())
    return g.n, g.m, tuple(sorted(g.degrees())), tuple(comps)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if _invariant(g) != _invariant(h):
        return False
    return canonical_code(g) == canonical_code(h)


def automorphism_count(g: Graph) -> int:
    """``|Aut(g)|`` counted directly as the induced self-embeddings of ``g``."""
    from .recognition import count_induced
    return count_induced(g, g)


# -- enumeration ---------------------------------------------------------------

ENUM_CAP = 7


def enumerate_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, as canonical representatives.

    Built by vertex augmentation: every class on ``n`` vertices arises from a
    class on ``n-1`` vertices by adding a vertex with some neighbourhood.  The
    stream is ordered by canonical code, so it is deterministic.
    """
    check_cap(n, ENUM_CAP if not allow_large else 8, "enumerate_graphs", override=False)
    for code in sorted(_codes(n)):
        yield _graph_from_code(code)


_CODE_CACHE: dict[int, frozenset[Code]] = {}


def _codes(n: int) -> frozenset[Code]:
    if n in _CODE_CACHE:
        return _CODE_CACHE[n]
    if n == 0:
        res = frozenset([(0, 0)])
    else:
        res = set()
        for code in _codes(n - 1):
            base = _graph_from_code(code)
            for mask in range(1 << (n - 1)):
                extra = [(v, n) for v in range(1, n) if mask >> (v - 1) & 1]
                g = Graph(n, base.edges | frozenset(extra))
                res.add(canonical_code(g))
        res = frozenset(res)
    _CODE_CACHE[n] = res
    return res


def _graph_from_code(code: Code) -> Graph:
    n, bits = code
    total = n * (n - 1) // 2
    edges = []
    idx = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if bits >> (total - 1 - idx) & 1:
                edges.append((i, j))
            idx += 1
    return Graph(n, frozenset(edges))


graph_from_code = _graph_from_code
