"""Universal graphs, the rigid lower-bound witnesses, and a universality checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import named
from ._caps import check_cap
from .canon import canonical_code, enumerate_graphs, graph_from_code
from .graph import Graph, disjoint_union, pivot
from .letters import chain_system, decode_path_word, enumerate_bpg, letter_graph
from .recognition import ClassId, find_induced, is_member, parse_class


# -- universal constructions ---------------------------------------------------------

def hnn_word(n: int) -> list[int]:
    return [r for _ in range(n) for r in range(1, n + 1)]


def hnn_vertex(n: int, r: int, c: int) -> int:
    """Vertex id of row ``r`` (letter index), column ``c`` (copy) in ``H_{n,n}``."""
    return (c - 1) * n + r


def universal_bpg(n: int) -> Graph:
    """``H_{n,n}``: the Parikh graph of ``(a1 a2 ... an)^n``.

    Vertex ``(c-1)*n + r`` is letter ``r`` of copy ``c``; ``(r, c)`` and
    ``(r+1, c')`` are adjacent iff ``c <= c'``.
    """
    if n < 1:
        raise ValueError("universal_bpg needs n >= 1")
    return decode_path_word(hnn_word(n))


def universal_chain(n: int) -> Graph:
    """``Z_n``: letter graph of ``(ab)^n``; ``a_k`` is vertex ``2k-1``, ``b_l`` is ``2l``."""
    if n < 1:
        raise ValueError("universal_chain needs n >= 1")
    return letter_graph(chain_system("ab" * n))


def chain_pivot_edges(n: int) -> list[tuple[int, int]]:
    """Edges ``a_i b_i`` for ``i = 2..n-1`` of ``Z_n``; pivoting on them in order turns ``Z_n`` into ``P_{2n}``."""
    return [(2 * i - 1, 2 * i) for i in range(2, n)]


def pivot_sequence(g: Graph, edges: Iterable[tuple[int, int]]) -> list[Graph]:
    """``g`` followed by the graph after each successive pivot."""
    out = [g]
    for u, v in edges:
        out.append(pivot(out[-1], u, v))
    return out


def star_forest(sizes: Iterable[int]) -> Graph:
    return disjoint_union(named.star(s) for s in sizes)


def fstar_sizes(n: int) -> list[int]:
    return [n // i for i in range(1, n + 1)]


def universal_star_forest(n: int) -> Graph:
    """``F*(n) = S_{n//1} + S_{n//2} + ... + S_{n//n}``."""
    if n < 1:
        raise ValueError("universal_star_forest needs n >= 1")
    return star_forest(fstar_sizes(n))


def universal_star_forest_bounded(k: int, n: int) -> Graph:
    """``(k-1) S_n + n S_{k-1}``: n-universal for ``kS_k``-free star forests."""
    if k < 2 or n < 1:
        raise ValueError("universal_star_forest_bounded needs k >= 2 and n >= 1")
    return star_forest([n] * (k - 1) + [k - 1] * n)


def star_forest_fits(sizes: Sequence[int], n: int) -> bool:
    """Analytic test: the star forest with leaf counts ``sizes`` sits inside
    ``F*(n)`` when its ``i``-th largest star has at most ``n // i`` leaves."""
    srt = sorted(sizes, reverse=True)
    return len(srt) <= n and all(a <= n // i for i, a in enumerate(srt, 1))


# -- rigid witnesses --------------------------------------------------------------------

@dataclass
class Witness:
    graph: Graph
    zigzag: list[int]          # the long induced path, in path order
    column: list[int]          # c_1..c_{t+3}, in path order (inflated slots hold one representative)
    inflated: dict[int, list[int]] = field(default_factory=dict)  # column index -> twin set

    @property
    def x(self) -> list[int]:
        return self.inflated.get(len(self.column), [self.column[-1]])

    @property
    def y(self) -> list[int]:
        return self.inflated.get(1, [self.column[0]])


def _rigid_edges(t: int) -> tuple[dict, dict, list]:
    zig = {}
    order = []
    for i in range(t + 2):
        for p in ((i, i), (i, i + 1), (i + 1, i)):
            order.append(p)
    order.append((t + 2, t + 2))
    for idx, p in enumerate(order, 1):
        zig[p] = idx
    col = {i: len(order) + i for i in range(1, t + 4)}
    edges = []
    for a, b in zip(order, order[1:]):
        edges.append((zig[a], zig[b]))
    for i in range(1, t + 3):
        edges.append((col[i], col[i + 1]))
    for i in range(1, t + 4):
        for p in ((i - 2, i - 1), (i - 1, i - 1), (i, i - 1)):
            if p in zig:
                edges.append((col[i], zig[p]))
    return zig, col, edges


def rigid_graph(t: int) -> Witness:
    """``Q_t``: a zigzag induced path on ``3t+7`` vertices plus a column path
    ``c_1..c_{t+3}`` with ``c_i`` joined to ``(i-2, i-1)``, ``(i-1, i-1)`` and
    ``(i, i-1)`` whenever those zigzag vertices exist."""
    if t < 1:
        raise ValueError("Q_t needs t >= 1")
    zig, col, edges = _rigid_edges(t)
    n = len(zig) + len(col)
    path_order = sorted(zig.values())
    return Witness(Graph.from_edges(n, edges), path_order, [col[i] for i in range(1, t + 4)])


def _inflate(w: Witness, sizes: dict[int, int]) -> Witness:
    g = w.graph
    edges = set(g.edges)
    n = g.n
    inflated = {}
    for ci, size in sorted(sizes.items()):
        if size < 1:
            raise ValueError("inflated twin sets must be non-empty")
        v = w.column[ci - 1]
        twins = [v]
        for _ in range(size - 1):
            n += 1
            twins.append(n)
            edges.update((min(u, n), max(u, n)) for u in g.adj[v])
        inflated[ci] = twins
    return Witness(Graph(n, frozenset(edges)), w.zigzag, w.column, inflated)


def witness_rigid(t: int, inflation: tuple[int, int | Iterable[int]] | None = None) -> Witness:
    """``Q_t``, or an inflated version of it.

    ``inflation=(n, t)`` with the same ``t`` gives ``R_{n,t}``: ``x = c_{t+3}``
    and ``y = c_1`` become independent twin sets of size ``(n-4t-8)//2``.
    ``inflation=(n, T)`` with ``T`` a collection gives ``R_{n,T}`` built on
    ``Q_{max T}``: ``c_1`` and every ``c_{j+3}`` (``j`` in ``T``) are inflated,
    splitting the budget evenly (remainder to ``c_1``).
    """
    if inflation is None:
        return rigid_graph(t)
    n, shape = inflation
    if isinstance(shape, int):
        return witness_rnt(n, shape)
    return witness_rnT(n, shape)


def witness_rnt(n: int, t: int) -> Witness:
    size = (n - 4 * t - 8) // 2
    if size < 1:
        raise ValueError(f"R_{{{n},{t}}} needs (n-4t-8)//2 >= 1")
    q = rigid_graph(t)
    return _inflate(q, {1: size, t + 3: size})


def witness_rnT(n: int, ts: Iterable[int]) -> Witness:
    ts = sorted(set(ts))
    if not ts or ts[0] < 1:
        raise ValueError("T must be a non-empty set of positive integers")
    q = rigid_graph(ts[-1])
    slots = [1] + [j + 3 for j in ts]
    budget = n - (q.graph.n - len(slots))
    each, extra = divmod(budget, len(slots))
    if each < 1:
        raise ValueError(f"R_{{{n},T}} leaves no room for the twin sets")
    sizes = {s: each for s in slots}
    sizes[1] += extra
    return _inflate(q, sizes)


# -- class catalogues ------------------------------------------------------------------

def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` in non-increasing order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def linear_forests(n: int) -> Iterator[Graph]:
    for p in partitions(n):
        yield disjoint_union(named.path(k) for k in p)


def star_forests(n: int) -> Iterator[Graph]:
    # component sizes are star orders m+1
    for p in partitions(n):
        yield star_forest(k - 1 for k in p)


def degree_le1_graphs(n: int) -> Iterator[Graph]:
    for m in range(n // 2 + 1):
        yield disjoint_union([named.matching(m), named.empty(n - 2 * m)])


def chain_graphs(n: int) -> Iterator[Graph]:
    codes = set()
    for mask in range(1 << n):
        word = "".join("b" if mask >> i & 1 else "a" for i in range(n))
        codes.add(canonical_code(letter_graph(chain_system(word))))
    for code in sorted(codes):
        yield graph_from_code(code)


CLASS_CAPS = {"linear_forest": 30, "star_forest": 30, "degree_le1": 40, "chain": 16, "bpg": 8}
FILTER_CAP = 7


def enumerate_class(c: ClassId | str, n: int, allow_large: bool = False) -> Iterator[Graph]:
    """All ``n``-vertex members of ``c`` up to isomorphism."""
    c = parse_class(c)
    gens = {"linear_forest": linear_forests, "star_forest": star_forests,
            "degree_le1": degree_le1_graphs, "chain": chain_graphs, "bpg": enumerate_bpg}
    if c.tag in gens:
        check_cap(n, CLASS_CAPS[c.tag], f"enumerate_class({c})", allow_large)
        yield from gens[c.tag](n)
        return
    check_cap(n, FILTER_CAP, f"enumerate_class({c})", allow_large)
    source = enumerate_bpg(n) if n <= 8 and c.tag not in ("bipartite", "kSk_free") else \
        enumerate_graphs(n, allow_large=allow_large or n == 8)
    for g in source:
        if is_member(c, g):
            yield g


def enumerate_class_by_filter(c: ClassId | str, n: int) -> Iterator[Graph]:
    """Reference catalogue: every graph on ``n`` vertices, filtered by membership."""
    for g in enumerate_graphs(n):
        if is_member(c, g):
            yield g


@dataclass
class UniversalityReport:
    cls: str
    n: int
    checked: int
    passed: bool
    failure: Graph | None = None

    def summary(self) -> str:
        if self.passed:
            return f"pass: all {self.checked} {self.n}-vertex members of {self.cls} embed"
        return f"fail: member #{self.checked} of {self.cls} does not embed ({self.failure!r})"


def verify_universal(c: ClassId | str, n: int, u: Graph,
                     members: Iterable[Graph] | None = None) -> UniversalityReport:
    """Try to embed every ``n``-vertex member of ``c`` into ``u``; report the first failure."""
    cname = str(parse_class(c)) if members is None else str(c)
    members = enumerate_class(c, n) if members is None else members
    checked = 0
    for g in members:
        checked += 1
        if find_induced(u, g) is None:
            return UniversalityReport(cname, n, checked, False, g)
    return UniversalityReport(cname, n, checked, True)
