"""Induced pattern search and membership tests for the hereditary classes.

Class tags (the strings accepted by :func:`parse_class` and the CLI)::

    bipartite  bpg  chain  degree_le1  linear_forest  star_forest
    caterpillar_forest  p5free_bipartite  boundary_L  class_Xi(i)  kSk_free(k)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import _kernels, named
from .graph import Graph, disjoint_union, induced_subgraph


@dataclass(frozen=True)
class Embedding:
    source: Graph
    target: Graph
    map: dict[int, int]

    def verify(self) -> bool:
        if len(set(self.map.values())) != len(self.map) or set(self.map) != set(self.source.vertices):
            return False
        if any(not 1 <= v <= self.target.n for v in self.map.values()):
            return False
        verts = sorted(self.source.vertices)
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if self.source.has_edge(u, v) != self.target.has_edge(self.map[u], self.map[v]):
                    return False
        return True

    def image(self) -> list[int]:
        return [self.map[v] for v in sorted(self.map)]


def _search_order(h: Graph) -> np.ndarray:
    """BFS order per component, highest degree first, so constraints bite early."""
    seen = set()
    order = []
    for s in sorted(h.vertices, key=lambda v: (-h.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u - 1)
            for w in sorted(h.adj[u], key=lambda v: (-h.degree(v), v)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return np.array(order, dtype=np.int64)


def _candidates(g: Graph, h: Graph) -> np.ndarray:
    dg = np.array(g.degrees(), dtype=np.int64)
    dh = np.array(h.degrees(), dtype=np.int64)
    codeg_g = g.n - 1 - dg
    codeg_h = h.n - 1 - dh
    cand = (dg[None, :] >= dh[:, None]) & (codeg_g[None, :] >= codeg_h[:, None])
    return cand.astype(np.uint8)


def _embed(g: Graph, h: Graph, limit: int, keep: int) -> tuple[int, np.ndarray]:
    out = np.zeros((keep, h.n), dtype=np.int64)
    if h.n > g.n:
        return 0, out
    count = _kernels.ACTIVE.embed_search(
        np.ascontiguousarray(g.matrix), np.ascontiguousarray(h.matrix),
        _search_order(h), _candidates(g, h), out, limit)
    return int(count), out


def find_induced(g: Graph, pattern: Graph) -> Embedding | None:
    """An induced embedding of ``pattern`` into ``g``, or ``None``.  Exhaustive."""
    count, out = _embed(g, pattern, 1, 1)
    if count == 0:
        return None
    emb = Embedding(pattern, g, {u + 1: int(out[0, u]) + 1 for u in range(pattern.n)})
    assert emb.verify()
    return emb


def all_induced(g: Graph, pattern: Graph) -> list[Embedding]:
    count, _ = _embed(g, pattern, 0, 0)
    _, out = _embed(g, pattern, 0, count)
    return [Embedding(pattern, g, {u + 1: int(row[u]) + 1 for u in range(pattern.n)}) for row in out]


def count_induced(g: Graph, pattern: Graph) -> int:
    return _embed(g, pattern, 0, 0)[0]


def contains(g: Graph, pattern: Graph) -> bool:
    return find_induced(g, pattern) is not None


# -- star forests ----------------------------------------------------------------

def find_star_forest_pattern(g: Graph, k: int, m: int) -> Embedding | None:
    """Find an induced ``k S_m`` (``k`` disjoint ``K_{1,m}``, no edges between them).

    Centres are chosen first (pairwise non-adjacent, degree at least ``m``),
    then private leaf sets by backtracking: each leaf must be adjacent to its
    own centre only among the chosen centres, and leaves must be pairwise
    non-adjacent.
    """
    pattern = disjoint_union([named.star(m)] * k)
    if k == 0:
        return Embedding(pattern, g, {})
    # false twins are interchangeable: within a run of twins only prefixes are tried
    twin_class = {v: g.adj[v] for v in g.vertices}

    def by_class(vs):
        return sorted(vs, key=lambda v: (sorted(twin_class[v]), v))

    def repeat(seq, idx, start):
        return idx > start and twin_class[seq[idx]] == twin_class[seq[idx - 1]]

    heavy = by_class(v for v in g.vertices if g.degree(v) >= m)
    chosen_centres: list[int] = []
    chosen_leaves: list[list[int]] = []

    def pick_leaves(ci: int, pool: list[int], taken: list[int], start: int) -> bool:
        if len(taken) == m:
            chosen_leaves.append(list(taken))
            if ci + 1 == k:
                return True
            if pick_leaves_for(ci + 1):
                return True
            chosen_leaves.pop()
            return False
        for idx in range(start, len(pool)):
            x = pool[idx]
            if repeat(pool, idx, start):
                continue
            if any(g.has_edge(x, y) for y in taken) or any(x in L or g.has_edge(x, y) for L in chosen_leaves for y in L):
                continue
            taken.append(x)
            if pick_leaves(ci, pool, taken, idx + 1):
                return True
            taken.pop()
        return False

    def pick_leaves_for(ci: int) -> bool:
        c = chosen_centres[ci]
        used = set(chosen_centres)
        pool = by_class(x for x in g.adj[c]
                        if x not in used and not any(g.has_edge(x, d) for d in chosen_centres if d != c))
        return pick_leaves(ci, pool, [], 0)

    def pick_centres(start: int) -> bool:
        if len(chosen_centres) == k:
            return pick_leaves_for(0)
        for idx in range(start, len(heavy)):
            c = heavy[idx]
            if repeat(heavy, idx, start) or any(g.has_edge(c, d) for d in chosen_centres):
                continue
            chosen_centres.append(c)
            if pick_centres(idx + 1):
                return True
            chosen_centres.pop()
        return False

    if not pick_centres(0):
        return None
    mapping = {}
    for i, (c, leaves) in enumerate(zip(chosen_centres, chosen_leaves)):
        base = i * (m + 1)
        mapping[base + 1] = c
        for j, x in enumerate(leaves):
            mapping[base + 2 + j] = x
    emb = Embedding(pattern, g, mapping)
    assert emb.verify()
    return emb


# -- induced cycles ----------------------------------------------------------------

def find_long_hole(g: Graph, min_len: int = 5) -> list[int] | None:
    """An induced cycle with at least ``min_len`` vertices, as a vertex list.

    Grows chordless paths from each start vertex ``s`` through larger-numbered
    vertices only, pruning any extension that would create a chord.
    """
    adj = g.adj
    for s in g.vertices:
        path = [s]
        onpath = {s}

        def extend() -> list[int] | None:
            last = path[-1]
            for w in sorted(adj[last]):
                if w <= s or w in onpath:
                    continue
                # w may touch only `last`, and `s` (which closes the cycle)
                touches = [p for p in path[:-1] if p in adj[w]]
                if touches and touches != [s]:
                    continue
                if touches == [s]:
                    if len(path) + 1 >= min_len and len(path) >= 2:
                        return path + [w]
                    continue
                path.append(w)
                onpath.add(w)
                res = extend()
                if res:
                    return res
                path.pop()
                onpath.discard(w)
            return None

        res = extend()
        if res:
            return res
    return None


# -- class membership ---------------------------------------------------------------

@dataclass(frozen=True)
class ClassId:
    tag: str
    param: int | None = None

    def __str__(self):
        return self.tag if self.param is None else f"{self.tag}({self.param})"


SIMPLE_TAGS = ("bipartite", "bpg", "chain", "degree_le1", "linear_forest", "star_forest",
               "caterpillar_forest", "p5free_bipartite", "boundary_L")
PARAM_TAGS = ("class_Xi", "kSk_free")


def parse_class(text: str | ClassId) -> ClassId:
    if isinstance(text, ClassId):
        return text
    text = text.strip()
    if text in SIMPLE_TAGS:
        return ClassId(text)
    m = re.fullmatch(r"(class_Xi|kSk_free)[(:=]?(\d+)\)?", text)
    if m:
        p = int(m.group(2))
        if p < 1:
            raise ValueError(f"{m.group(1)} needs a parameter >= 1")
        return ClassId(m.group(1), p)
    raise ValueError(f"unknown class tag {text!r}")


@dataclass
class Membership:
    member: bool
    reason: str = ""
    certificate: Any = None

    def __bool__(self):
        return self.member


_FORBIDDEN_BPG = (("S_{2,2,2}", lambda: named.spider(2, 2, 2)),
                  ("Sun_3", named.sun3),
                  ("Phi", named.phi))


def bpg_forbidden(g: Graph) -> Membership:
    """BPG test by forbidden induced subgraphs."""
    if not g.is_bipartite():
        return Membership(False, "not bipartite")
    for name, make in _FORBIDDEN_BPG:
        emb = find_induced(g, make())
        if emb is not None:
            return Membership(False, f"induced {name}", emb.image())
    hole = find_long_hole(g, 5)
    if hole is not None:
        return Membership(False, f"induced C_{len(hole)}", hole)
    return Membership(True, "no forbidden induced subgraph")


def bpg_constructive(g: Graph) -> Membership:
    from .letters import encode_bpg
    from .errors import NotBPGError
    try:
        sysm = encode_bpg(g)
    except NotBPGError as exc:
        return Membership(False, str(exc))
    return Membership(True, "path-decoder word found", sysm)


def _is_path_component(g: Graph, comp: list[int]) -> bool:
    m = sum(g.degree(v) for v in comp) // 2
    return m == len(comp) - 1 and all(g.degree(v) <= 2 for v in comp)


def _is_tree_component(g: Graph, comp: list[int]) -> bool:
    return sum(g.degree(v) for v in comp) // 2 == len(comp) - 1


def _is_star_component(g: Graph, comp: list[int]) -> bool:
    if not _is_tree_component(g, comp):
        return False
    return sum(1 for v in comp if g.degree(v) > 1) <= 1


def _is_caterpillar_component(g: Graph, comp: list[int]) -> bool:
    """Tree whose non-leaf vertices induce a path (i.e. it has a dominating path)."""
    if not _is_tree_component(g, comp):
        return False
    inner = [v for v in comp if g.degree(v) > 1]
    if len(inner) <= 1:
        return True
    sub = induced_subgraph(g, inner)
    return all(d <= 2 for d in sub.degrees())


def _is_s11k_component(g: Graph, comp: list[int]) -> bool:
    """``S_{1,1,k}``: a spider with legs of 1, 1 and k edges (``k >= 1``)."""
    if not _is_tree_component(g, comp):
        return False
    branch = [v for v in comp if g.degree(v) == 3]
    if len(branch) != 1 or any(g.degree(v) > 3 for v in comp):
        return False
    leaves = [w for w in g.adj[branch[0]] if g.degree(w) == 1]
    return len(leaves) >= 2


def caterpillar_direct(g: Graph) -> bool:
    return all(_is_caterpillar_component(g, c) for c in g.components())


def is_member(c: ClassId | str, g: Graph, mode: str = "forbidden") -> Membership:
    """Exact membership of ``g`` in the class ``c``.

    ``mode`` selects the BPG test used wherever BPG membership is needed:
    ``"forbidden"`` (forbidden induced subgraphs) or ``"constructive"``
    (a path-decoder letter word is built).
    """
    c = parse_class(c)
    tag = c.tag
    comps = g.components()
    if tag == "bipartite":
        return Membership(g.is_bipartite(), "2-colouring" if g.is_bipartite() else "odd cycle")
    if tag == "bpg":
        return bpg_constructive(g) if mode == "constructive" else bpg_forbidden(g)
    if tag == "chain":
        if not g.is_bipartite():
            return Membership(False, "not bipartite")
        emb = find_induced(g, named.matching(2))
        if emb is not None:
            return Membership(False, "induced 2K_2", emb.image())
        return Membership(True, "bipartite and 2K_2-free")
    if tag == "degree_le1":
        bad = [v for v in g.vertices if g.degree(v) > 1]
        return Membership(not bad, f"vertex {bad[0]} has degree {g.degree(bad[0])}" if bad else "max degree <= 1")
    if tag in ("linear_forest", "star_forest", "caterpillar_forest"):
        test = {"linear_forest": _is_path_component, "star_forest": _is_star_component,
                "caterpillar_forest": _is_caterpillar_component}[tag]
        bad = [comp for comp in comps if not test(g, comp)]
        return Membership(not bad, f"component {bad[0]}" if bad else "component decomposition", comps)
    if tag == "p5free_bipartite":
        if not g.is_bipartite():
            return Membership(False, "not bipartite")
        emb = find_induced(g, named.path(5))
        if emb is not None:
            return Membership(False, "induced P_5", emb.image())
        return Membership(True, "bipartite and P_5-free")
    if tag == "boundary_L":
        spiders = [comp for comp in comps if not _is_path_component(g, comp)]
        if any(not _is_s11k_component(g, comp) for comp in spiders):
            return Membership(False, "a component is neither a path nor S_{1,1,k}")
        if len(spiders) > 2:
            return Membership(False, f"{len(spiders)} components of the form S_{{1,1,k}}")
        return Membership(True, "paths plus at most two S_{1,1,k}", comps)
    if tag == "class_Xi":
        i = c.param
        base = is_member("bpg", g, mode)
        if not base:
            return base
        emb = find_induced(g, named.path(4 + i))
        if emb is not None:
            return Membership(False, f"induced P_{4 + i}", emb.image())
        for j in range(1, i):
            emb = find_induced(g, named.hgraph(j))
            if emb is not None:
                return Membership(False, f"induced H_{j}", emb.image())
        return Membership(True, f"BPG, P_{4 + i}-free and H_1..H_{i - 1}-free")
    if tag == "kSk_free":
        k = c.param
        emb = find_star_forest_pattern(g, k, k)
        if emb is not None:
            return Membership(False, f"induced {k}S_{k}", emb.image())
        return Membership(True, f"{k}S_{k}-free")
    raise ValueError(f"unknown class {c}")
