"""Graph parameters and the U(F,K) / U(w,K) constructions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import _kernels
from ._caps import check_cap
from .errors import GraphFormatError
from .graph import Graph


def similar(g: Graph, x: int, y: int) -> bool:
    """No third vertex is adjacent to exactly one of ``x`` and ``y``."""
    return (g.adj[x] ^ g.adj[y]) <= {x, y}


def similarity_classes(g: Graph) -> list[list[int]]:
    classes: list[list[int]] = []
    for v in g.vertices:
        for cls in classes:
            if similar(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    # similarity is always transitive; check it anyway
    for cls in classes:
        for x, y in combinations(cls, 2):
            if not similar(g, x, y):
                raise AssertionError(f"similarity not transitive at {x}, {y}")
    for a, b in combinations(classes, 2):
        if similar(g, a[0], b[0]):
            raise AssertionError("similarity classes overlap")
    return classes


def neighbourhood_diversity(g: Graph) -> int:
    return len(similarity_classes(g))


DIST_CAP = 16


def distinguishing_number(g: Graph) -> int:
    """Largest ``k`` such that some ``U`` splits ``V - U`` into at least ``k``
    classes of size at least ``k`` by neighbourhood in ``U``."""
    check_cap(g.n, DIST_CAP, "distinguishing_number")
    if g.n == 0:
        return 0
    return int(_kernels.ACTIVE.distinguishing_scan(np.ascontiguousarray(g.matrix)))


def distinguishing_number_reference(g: Graph) -> int:
    """Set-based restatement of :func:`distinguishing_number` for cross-checks."""
    verts = list(g.vertices)
    best = 0
    for r in range(len(verts)):
        for u in combinations(verts, r):
            us = set(u)
            groups: dict[frozenset, int] = {}
            for v in verts:
                if v not in us:
                    key = g.adj[v] & us
                    groups[key] = groups.get(key, 0) + 1
            sizes = sorted(groups.values(), reverse=True)
            k = max((min(i, s) for i, s in enumerate(sizes, 1)), default=0)
            best = max(best, k)
    return best


@dataclass(frozen=True)
class KGraph:
    """Graph on ``1..k`` with loops allowed; edges stored as ``(i, j)``, ``i <= j``."""
    k: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i <= j <= self.k):
                raise ValueError(f"KGraph edge {(i, j)} out of range for k={self.k}")

    @classmethod
    def from_pairs(cls, k: int, pairs) -> KGraph:
        return cls(k, frozenset((min(i, j), max(i, j)) for i, j in pairs))

    def has(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "edges": [list(e) for e in sorted(self.edges)]})

    @classmethod
    def from_json(cls, text: str) -> KGraph:
        try:
            data = json.loads(text)
            return cls.from_pairs(int(data["k"]), [(int(i), int(j)) for i, j in data["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"bad KGraph JSON: {exc}") from None


@dataclass(frozen=True)
class WordSource:
    """The eventually periodic infinite word ``prefix . period^inf``."""
    alphabet: tuple[str, ...]
    prefix: str
    period: str

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be non-empty")
        bad = set(self.prefix + self.period) - set(self.alphabet)
        if bad:
            raise ValueError(f"letters {sorted(bad)} not in alphabet")

    def letter(self, i: int) -> str:
        """Letter at 1-based position ``i``."""
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.period[(i - len(self.prefix) - 1) % len(self.period)]

    def to_json(self) -> str:
        return json.dumps({"alphabet": list(self.alphabet), "prefix": self.prefix, "period": self.period})

    @classmethod
    def from_json(cls, text: str) -> WordSource:
        try:
            data = json.loads(text)
            return cls(tuple(str(a) for a in data["alphabet"]), str(data.get("prefix", "")), str(data["period"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"bad word source JSON: {exc}") from None


def build_UFK(f: Graph, k: KGraph, copies: int) -> Graph:
    """Finite part of ``U(F, K)``: ``copies`` copies of ``F``, with the edges
    between classes ``V_i`` and ``V_j`` complemented when ``ij`` is in ``K``.

    Vertex ``i`` of copy ``c`` is ``(c-1)*k + i``.
    """
    if f.n != k.k:
        raise ValueError(f"F has {f.n} vertices but K has {k.k}")
    if copies < 1:
        raise ValueError("copies must be >= 1")
    size = k.k
    total = size * copies
    edges = []
    for u in range(1, total + 1):
        cu, iu = divmod(u - 1, size)
        for v in range(u + 1, total + 1):
            cv, iv = divmod(v - 1, size)
            in_f = cu == cv and f.has_edge(iu + 1, iv + 1)
            if in_f != k.has(iu + 1, iv + 1):
                edges.append((u, v))
    return Graph(total, frozenset(edges))


def build_UwK(src: WordSource, k: KGraph, n: int, letter_index: dict[str, int] | None = None) -> Graph:
    """The first ``n`` vertices of ``U(w, K)``.

    Consecutive positions are adjacent unless their letters are adjacent in
    ``K``; positions further apart are adjacent exactly when their letters are
    adjacent in ``K``.  Letters map to ``K`` vertices by alphabet position
    unless ``letter_index`` says otherwise.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = letter_index or {a: i + 1 for i, a in enumerate(src.alphabet)}
    if max(idx.values()) > k.k:
        raise ValueError("alphabet larger than K")
    lab = [idx[src.letter(i)] for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            inside = k.has(lab[i], lab[j])
            if (j - i == 1 and not inside) or (j - i > 1 and inside):
                edges.append((i + 1, j + 1))
    return Graph(n, frozenset(edges))


@dataclass
class Metrics:
    components: list[list[int]]
    distances: dict[int, dict[int, float]]
    mis: int | None
    path_number: int | None


MIS_CAP = 63
PATH_NUMBER_CAP = 15


def max_independent_set_size(g: Graph, vertices=None) -> int:
    verts = list(g.vertices) if vertices is None else sorted(vertices)
    check_cap(g.n, MIS_CAP, "max_independent_set_size")
    mask = 0
    for v in verts:
        mask |= 1 << (v - 1)
    return int(_kernels.ACTIVE.max_independent_set(np.ascontiguousarray(g.matrix), np.int64(mask)))


def path_number(g: Graph) -> int:
    """Edges on a longest (not necessarily induced) path."""
    check_cap(g.n, PATH_NUMBER_CAP, "path_number")
    return int(_kernels.ACTIVE.longest_path_edges(np.ascontiguousarray(g.matrix)))


def graph_metrics(g: Graph, with_mis: bool = True, with_path_number: bool = True) -> Metrics:
    inf = float("inf")
    dist = {}
    for s in g.vertices:
        d = g.bfs_distances(s)
        dist[s] = {v: float(d.get(v, inf)) for v in g.vertices}
    mis = max_independent_set_size(g) if with_mis and g.n <= MIS_CAP else None
    pn = path_number(g) if with_path_number and g.n <= PATH_NUMBER_CAP else None
    return Metrics(g.components(), dist, mis, pn)
