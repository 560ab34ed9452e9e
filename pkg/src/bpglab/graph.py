"""Simple undirected graphs on vertices ``1..n`` and the operations on them.

A :class:`Graph` is immutable; every operation returns a new graph.  Vertex
labels are always the contiguous range ``1..n`` so that generators and
transformations are reproducible byte-for-byte.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphFormatError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        for e in self.edges:
            u, v = e
            if u >= v:
                raise ValueError(f"edge {e} is not normalized (need u < v)")
            if u < 1 or v > self.n:
                raise ValueError(f"edge {e} out of range 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
        """Build a graph, normalizing edge orientation.  Loops are rejected."""
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add(_norm(u, v))
        return cls(n, frozenset(norm))

    @classmethod
    def from_matrix(cls, a: np.ndarray) -> Graph:
        n = a.shape[0]
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls(n, frozenset((int(i) + 1, int(j) + 1) for i, j in zip(iu, ju)))

    # -- basic queries -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, indexed by vertex (index 0 is an unused empty set)."""
        nb: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def matrix(self) -> np.ndarray:
        """0-based ``uint8`` adjacency matrix (read-only)."""
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges:
            a[u - 1, v - 1] = a[v - 1, u - 1] = 1
        a.setflags(write=False)
        return a

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(self.adj[v]) for v in self.vertices]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- structure -----------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * (self.n + 1)
        comps = []
        for s in self.vertices:
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bipartition(self) -> dict[int, int] | None:
        """2-colouring ``{v: 0|1}`` or ``None`` when an odd cycle exists."""
        colour: dict[int, int] = {}
        for s in self.vertices:
            if s in colour:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in colour:
                        colour[w] = 1 - colour[u]
                        queue.append(w)
                    elif colour[w] == colour[u]:
                        return None
        return colour

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bfs_distances(self, s: int) -> dict[int, int]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distance(self, u: int, v: int) -> float:
        return self.bfs_distances(u).get(v, float("inf"))

    def relabel(self, mapping: dict[int, int] | Sequence[int], n: int | None = None) -> Graph:
        """Rename vertices through ``mapping`` (dict or 1-based sequence)."""
        if not isinstance(mapping, dict):
            mapping = {v: mapping[v - 1] for v in self.vertices}
        return Graph.from_edges(self.n if n is None else n,
                                ((mapping[u], mapping[v]) for u, v in self.edges))

    def complement(self) -> Graph:
        return Graph(self.n, frozenset(e for e in combinations(self.vertices, 2)
                                       if e not in self.edges))


# -- constructors on graphs -------------------------------------------------

def disjoint_union(gs: Iterable[Graph]) -> Graph:
    n = 0
    edges = []
    for g in gs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, frozenset(edges))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabelled ``1..|s|`` in increasing order."""
    verts = sorted(set(s))
    for v in verts:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    pos = {v: i + 1 for i, v in enumerate(verts)}
    return Graph(len(verts), frozenset((pos[u], pos[v]) for u, v in g.edges
                                       if u in pos and v in pos))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, (u for u in g.vertices if u != v))


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the subgraph induced by the neighbourhood of ``v``."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    edges = set(g.edges)
    for e in combinations(sorted(g.adj[v]), 2):
        edges ^= {e}
    return Graph(g.n, frozenset(edges))


def pivot(g: Graph, u: int, v: int) -> Graph:
    """Pivot on the edge ``uv``: local complementation at ``u``, ``v``, ``u``.

    On bipartite graphs the net effect is to complement the edges between
    ``N(u) - {v}`` and ``N(v) - {u}`` and then exchange the labels ``u`` and
    ``v``; :func:`pivot_net_effect` computes the complementation alone, so the
    two agree up to that transposition.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"pivot needs an edge, {u} and {v} are not adjacent")
    return local_complement(local_complement(local_complement(g, u), v), u)


def pivot_net_effect(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"pivot needs an edge, {u} and {v} are not adjacent")
    edges = set(g.edges)
    for x in g.adj[u] - {v}:
        for y in g.adj[v] - {u}:
            if x != y:
                edges ^= {_norm(x, y)}
    return Graph(g.n, frozenset(edges))


# -- text format --------------------------------------------------------------

def write_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"p {g.n}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def write_graphs(gs: Iterable[Graph]) -> str:
    return "".join(write_graph(g) for g in gs)


def iter_read_graphs(text: str) -> Iterator[Graph]:
    """Parse one or more graphs; each starts at a ``p <n>`` header."""
    n = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p" and len(parts) == 2:
                if n is not None:
                    yield _finish(n, edges, lineno)
                n = int(parts[1])
                if n < 0:
                    raise ValueError
                edges = []
            elif parts[0] == "e" and len(parts) == 3:
                if n is None:
                    raise GraphFormatError(f"line {lineno}: edge before 'p' header")
                u, v = int(parts[1]), int(parts[2])
                if not 1 <= u < v <= n:
                    raise GraphFormatError(f"line {lineno}: need 1 <= u < v <= {n}, got {u} {v}")
                edges.append((u, v))
            else:
                raise GraphFormatError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: bad integer in {raw!r}") from None
    if n is None:
        raise GraphFormatError("missing 'p <n>' header")
    yield _finish(n, edges, None)


def _finish(n: int, edges: list[Edge], lineno: int | None) -> Graph:
    if len(set(edges)) != len(edges):
        raise GraphFormatError(f"duplicate edge in graph ending before line {lineno}")
    return Graph(n, frozenset(edges))


def read_graphs(text: str) -> list[Graph]:
    return list(iter_read_graphs(text))


def read_graph(text: str) -> Graph:
    gs = read_graphs(text)
    if len(gs) != 1:
        raise GraphFormatError(f"expected one graph, found {len(gs)}")
    return gs[0]
