"""Letter graphs, Parikh graphs and the path-decoder encoder for BPGs.

A letter graph is decoded from a word ``w`` and a decoder ``D`` of ordered
letter pairs: positions ``i < j`` are adjacent iff ``(w_i, w_j)`` is in ``D``.
With letters ``a1 < a2 < ... < ar`` and the *path decoder*
``{(a_p, a_{p+1})}`` the letter graph is the Parikh graph of the word, and
these are exactly the bipartite permutation graphs.

Internally a path-decoder word is a list of 1-based letter indices.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._caps import check_cap
from .canon import canonical_code, graph_from_code
from .errors import GraphFormatError, NotBPGError
from .graph import Graph


@dataclass(frozen=True)
class LetterSystem:
    alphabet: tuple[str, ...]
    decoder: frozenset[tuple[str, str]]
    word: tuple[str, ...]
    # vertex_map[i] is the graph vertex encoded at word position i+1
    vertex_map: tuple[int, ...] | None = None

    def __post_init__(self):
        letters = set(self.alphabet)
        if len(letters) != len(self.alphabet):
            raise ValueError("repeated letter in alphabet")
        for x in self.word:
            if x not in letters:
                raise ValueError(f"word letter {x!r} not in alphabet")
        for x, y in self.decoder:
            if x not in letters or y not in letters:
                raise ValueError(f"decoder pair {(x, y)!r} uses a letter outside the alphabet")
        if self.vertex_map is not None and sorted(self.vertex_map) != list(range(1, len(self.word) + 1)):
            raise ValueError("vertex_map must be a permutation of 1..len(word)")

    @property
    def size(self) -> int:
        return len(self.alphabet)

    def is_path_decoder(self) -> bool:
        a = self.alphabet
        return self.decoder == frozenset((a[i], a[i + 1]) for i in range(len(a) - 1))

    def indices(self) -> list[int]:
        pos = {x: i + 1 for i, x in enumerate(self.alphabet)}
        return [pos[x] for x in self.word]

    def to_json(self) -> str:
        data = {"alphabet": list(self.alphabet),
                "decoder": [list(p) for p in sorted(self.decoder)],
                "word": list(self.word)}
        if self.vertex_map is not None:
            data["vertex_map"] = list(self.vertex_map)
        return json.dumps(data, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> LetterSystem:
        try:
            data = json.loads(text)
            alphabet = tuple(str(x) for x in data["alphabet"])
            decoder = frozenset((str(x), str(y)) for x, y in data["decoder"])
            word = data["word"]
            word = tuple(str(x) for x in (list(word) if isinstance(word, list) else word))
            vmap = data.get("vertex_map")
            return cls(alphabet, decoder, word, tuple(int(v) for v in vmap) if vmap is not None else None)
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"bad letter system JSON: {exc}") from None


def path_alphabet(r: int) -> tuple[str, ...]:
    return tuple(f"a{i}" for i in range(1, r + 1))


def path_decoder(r: int) -> frozenset[tuple[str, str]]:
    a = path_alphabet(r)
    return frozenset((a[i], a[i + 1]) for i in range(r - 1))


def path_system(indices: Sequence[int], r: int | None = None,
                vertex_map: Sequence[int] | None = None) -> LetterSystem:
    r = max(indices, default=1) if r is None else r
    a = path_alphabet(r)
    return LetterSystem(a, path_decoder(r), tuple(a[i - 1] for i in indices),
                        tuple(vertex_map) if vertex_map is not None else None)


CHAIN = LetterSystem(("a", "b"), frozenset({("a", "b")}), ())


def chain_system(word: str | Sequence[str]) -> LetterSystem:
    return LetterSystem(("a", "b"), frozenset({("a", "b")}), tuple(word))


# -- decoding -------------------------------------------------------------------

def letter_graph(sys: LetterSystem) -> Graph:
    """The letter graph on word positions ``1..len(word)``."""
    w = sys.word
    d = sys.decoder
    return Graph(len(w), frozenset((i + 1, j + 1) for i in range(len(w)) for j in range(i + 1, len(w))
                                   if (w[i], w[j]) in d))


def parikh_graph(alphabet: Sequence[str], word: Sequence[str]) -> Graph:
    """Parikh graph over the ordered alphabet: ``i < j`` adjacent iff
    ``w_i = a_p`` and ``w_j = a_{p+1}``."""
    rank = {x: i for i, x in enumerate(alphabet)}
    if len(rank) != len(alphabet):
        raise ValueError("repeated letter in alphabet")
    for x in word:
        if x not in rank:
            raise ValueError(f"letter {x!r} not in alphabet")
    idx = [rank[x] for x in word]
    return Graph(len(idx), frozenset((i + 1, j + 1) for i in range(len(idx)) for j in range(i + 1, len(idx))
                                     if idx[j] == idx[i] + 1))


def decode_path_word(indices: Sequence[int]) -> Graph:
    n = len(indices)
    return Graph(n, frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
                              if indices[j] == indices[i] + 1))


def _decoded_matches(indices: Sequence[int], verts: Sequence[int], g: Graph) -> bool:
    """Does the path-decoder word, with position i carrying vertex verts[i], induce
    exactly ``g`` restricted to ``verts``?"""
    n = len(indices)
    for i in range(n):
        for j in range(i + 1, n):
            if (indices[j] == indices[i] + 1) != g.has_edge(verts[i], verts[j]):
                return False
    return True


# -- subwords -----------------------------------------------------------------------

def subword_embed(needle: Sequence, haystack: Sequence) -> bool:
    """Is ``needle`` a (not necessarily contiguous) subsequence of ``haystack``?"""
    it = iter(haystack)
    return all(any(x == y for y in it) for x in needle)


# -- chain graphs ---------------------------------------------------------------------

@dataclass(frozen=True)
class ChainWordPair:
    w1: str
    w2: str
    # order1[i] is the vertex at position i+1 of w1; likewise order2
    order1: tuple[int, ...] = field(default=(), compare=False)
    order2: tuple[int, ...] = field(default=(), compare=False)

    def __iter__(self):
        return iter((self.w1, self.w2))


def _chain_word(g: Graph, a_side: list[int], b_side: list[int]) -> tuple[str, list[int]] | None:
    a_sorted = sorted(a_side, key=lambda v: (-g.degree(v), v))
    b_sorted = sorted(b_side, key=lambda v: (g.degree(v), v))
    word = []
    order = []
    ai = 0
    for b in b_sorted:
        while ai < g.degree(b):
            if ai >= len(a_sorted):
                return None
            word.append("a")
            order.append(a_sorted[ai])
            ai += 1
        word.append("b")
        order.append(b)
    for a in a_sorted[ai:]:
        word.append("a")
        order.append(a)
    for i, u in enumerate(order):
        for j in range(i + 1, len(order)):
            v = order[j]
            if ((word[i], word[j]) == ("a", "b")) != g.has_edge(u, v):
                return None
    return "".join(word), order


def chain_words(g: Graph, a_side: Iterable[int]) -> tuple[str, list[int]] | None:
    """The {a,b}-word of a chain graph with ``a_side`` written as ``a``; ``None`` if
    the graph is not a chain graph with that bipartition."""
    a_side = sorted(a_side)
    b_side = [v for v in g.vertices if v not in set(a_side)]
    return _chain_word(g, a_side, b_side)


def encode_chain(g: Graph) -> ChainWordPair:
    """Both {a,b}-words of a connected chain graph (one per choice of a-side)."""
    if g.n < 2 or not g.is_connected():
        raise ValueError("encode_chain needs a connected graph with at least 2 vertices")
    colour = g.bipartition()
    if colour is None:
        raise ValueError("not a chain graph: not bipartite")
    side0 = [v for v in g.vertices if colour[v] == 0]
    side1 = [v for v in g.vertices if colour[v] == 1]
    r1 = _chain_word(g, side0, side1)
    r2 = _chain_word(g, side1, side0)
    if r1 is None or r2 is None:
        raise ValueError("not a chain graph: contains an induced 2K_2")
    return ChainWordPair(r1[0], r2[0], tuple(r1[1]), tuple(r2[1]))


# -- BPG encoder -----------------------------------------------------------------------

def _order_for_levels(g: Graph, comp: Sequence[int], level: dict[int, int]) -> list[int] | None:
    """A vertex order realising ``g[comp]`` as a path-decoder word with the given
    letters, or ``None`` if none exists.

    Only consecutive letters constrain the order: an adjacent pair must read
    lower letter first, a non-adjacent pair higher letter first.
    """
    for u in comp:
        for w in g.adj[u]:
            if abs(level[u] - level[w]) != 1:
                return None
    by_level: dict[int, list[int]] = {}
    for v in comp:
        by_level.setdefault(level[v], []).append(v)
    succ: dict[int, list[int]] = {v: [] for v in comp}
    indeg = {v: 0 for v in comp}
    for lv, xs in by_level.items():
        for y in by_level.get(lv + 1, ()):
            for x in xs:
                if g.has_edge(x, y):
                    succ[x].append(y)
                    indeg[y] += 1
                else:
                    succ[y].append(x)
                    indeg[x] += 1
    heap = [v for v in comp if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == len(comp) else None


def _word_from(order: list[int], level: dict[int, int]) -> list[tuple[int, int]]:
    low = min(level[v] for v in order)
    return [(level[v] - low + 1, v) for v in order]


def _initial_word(g: Graph, comp: list[int]) -> tuple[list[tuple[int, int]], str] | None:
    for s in comp:
        dist = g.bfs_distances(s)
        order = _order_for_levels(g, comp, dist)
        if order is not None:
            return _word_from(order, dist), f"bfs:{s}"
    # complete fallback: every ±1-graded letter assignment of the component
    bfs = sorted(comp, key=lambda v: (g.bfs_distances(comp[0])[v], v))
    level: dict[int, int] = {}

    def assign(i: int) -> list[tuple[int, int]] | None:
        if i == len(bfs):
            order = _order_for_levels(g, comp, level)
            return _word_from(order, level) if order is not None else None
        v = bfs[i]
        options = None
        for w in g.adj[v]:
            if w in level:
                opts = {level[w] - 1, level[w] + 1}
                options = opts if options is None else options & opts
        for x in sorted(options if options is not None else {len(comp) + 1}):
            level[v] = x
            res = assign(i + 1)
            if res is not None:
                return res
            del level[v]
        return None

    res = assign(0)
    return (res, "backtrack") if res is not None else None


@dataclass
class NormalizationTrace:
    moves: list[str] = field(default_factory=list)
    sums: list[int] = field(default_factory=list)


def normalize_path_word(word: list[tuple[int, int]], g: Graph,
                        trace: NormalizationTrace | None = None) -> list[tuple[int, int]]:
    """Apply index-sum-decreasing rewrites until none applies.

    ``word`` is a list of ``(letter, vertex)`` for one connected component.
    Moves: shift every letter down when ``a1`` is absent; move a final
    ``a_t`` (``t >= 3``) to the front as ``a_{t-2}``; move the rightmost
    ``a_t`` (``t >= 3``) with no ``a_{t-1}`` or ``a_{t+1}`` after it to the
    front as ``a_{t-2}``.  Every move is checked by re-decoding; a move that
    would change the graph is skipped.
    """
    verts = [v for _, v in word]

    def valid(w):
        return _decoded_matches([x for x, _ in w], [v for _, v in w], g)

    assert valid(word)
    word = list(word)
    while True:
        s = sum(x for x, _ in word)
        if trace is not None:
            trace.sums.append(s)
        low = min(x for x, _ in word)
        if low > 1:
            word = [(x - 1, v) for x, v in word]
            if trace is not None:
                trace.moves.append("shift")
            continue
        candidates = []
        t_last, v_last = word[-1]
        if t_last >= 3:
            candidates.append(("last", len(word) - 1))
        seen_after: set[int] = set()
        rightmost_checked: set[int] = set()
        for j in range(len(word) - 1, -1, -1):
            t, _ = word[j]
            if t not in rightmost_checked:
                rightmost_checked.add(t)
                if t >= 3 and (t - 1) not in seen_after and (t + 1) not in seen_after:
                    candidates.append(("rightmost", j))
            seen_after.add(t)
        applied = False
        for name, j in candidates:
            t, v = word[j]
            new = [(t - 2, v)] + word[:j] + word[j + 1:]
            if valid(new):
                word = new
                applied = True
                if trace is not None:
                    trace.moves.append(f"{name}:a{t}")
                break
        if not applied:
            break
    assert sorted(v for _, v in word) == sorted(verts)
    return word


def encode_component(g: Graph, comp: list[int], trace: NormalizationTrace | None = None) -> list[tuple[int, int]]:
    if len(comp) == 1:
        return [(1, comp[0])]
    init = _initial_word(g, comp)
    if init is None:
        raise NotBPGError(f"not BPG: component {comp} has no path-decoder word")
    return normalize_path_word(init[0], g, trace)


def encode_bpg(g: Graph) -> LetterSystem:
    """Path-decoder letter system for a BPG, using at most ``n//2 + 1`` letters.

    Raises :class:`NotBPGError` when ``g`` is not a bipartite permutation graph.
    The result's ``vertex_map`` gives the vertex of ``g`` at each word position.
    """
    if not g.is_bipartite():
        raise NotBPGError("not BPG: not bipartite")
    comps = g.components()
    words = [encode_component(g, c) for c in comps]
    offset = 0
    shifted = []
    for w in words:
        shifted.append([(x + offset, v) for x, v in w])
        offset += max(x for x, _ in w) - 1
    full = [p for w in reversed(shifted) for p in w]
    r = max((x for x, _ in full), default=1)
    sysm = path_system([x for x, _ in full], r, [v for _, v in full])
    return sysm


def graph_of_system(sys: LetterSystem) -> Graph:
    """Letter graph relabelled through ``vertex_map`` (identity when absent)."""
    h = letter_graph(sys)
    if sys.vertex_map is None:
        return h
    return h.relabel({i + 1: v for i, v in enumerate(sys.vertex_map)})


# -- exhaustive word searches ---------------------------------------------------------------

def restricted_growth(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Words of length ``n`` using exactly letters ``0..k-1``, first occurrences in order."""
    if n == 0:
        if k == 0:
            yield ()
        return
    word = [0] * n

    def rec(i: int, used: int):
        if n - i < k - used:
            return
        if i == n:
            if used == k:
                yield tuple(word)
            return
        for x in range(min(used + 1, k)):
            word[i] = x
            yield from rec(i + 1, max(used, x + 1))

    yield from rec(0, 0)


LETTERICITY_N_CAP = 8
LETTERICITY_K_CAP = 3


def lettericity_exact(g: Graph, kmax: int = 3) -> int | None:
    """Least ``k <= kmax`` such that ``g`` is a letter graph over ``k`` letters.

    Exhaustive over all decoders and all words (letters in first-occurrence
    order).  For each word the edge counts and degree sequences of all
    ``2^(k*k)`` decoders are computed at once; only decoders matching those
    invariants get an isomorphism test.
    """
    check_cap(g.n, LETTERICITY_N_CAP, "lettericity_exact")
    if kmax > LETTERICITY_K_CAP:
        check_cap(kmax, LETTERICITY_K_CAP, "lettericity_exact alphabet")
    n = g.n
    if n == 0:
        return 0 if kmax >= 0 else None
    target = canonical_code(g)
    target_deg = np.sort(np.array(g.degrees()))
    iu, ju = np.triu_indices(n, 1)
    for k in range(1, kmax + 1):
        npairs = k * k
        masks = np.arange(1 << npairs, dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(npairs)[None, :]) & 1).astype(np.int64)
        for word in restricted_growth(n, k):
            w = np.array(word)
            ptype = w[iu] * k + w[ju]
            counts = np.bincount(ptype, minlength=npairs)
            good = np.nonzero(bits @ counts == g.m)[0]
            if good.size == 0:
                continue
            edge_on = bits[good][:, ptype]
            deg = np.zeros((good.size, n), dtype=np.int64)
            np.add.at(deg, (slice(None), iu), edge_on)
            np.add.at(deg, (slice(None), ju), edge_on)
            deg.sort(axis=1)
            for idx in np.nonzero((deg == target_deg[None, :]).all(axis=1))[0]:
                on = edge_on[idx]
                h = Graph(n, frozenset((int(a) + 1, int(b) + 1) for a, b, e in zip(iu, ju, on) if e))
                if canonical_code(h) == target:
                    return k
    return None


def path_words(n: int, r: int, exact_top: bool = False) -> Iterator[list[int]]:
    """Path-decoder words of length ``n`` over ``a1..ar`` that use ``a1``, one per
    class of words equal up to swapping adjacent non-consecutive letters.

    Such swaps never change the decoded graph (up to relabelling), so
    representatives with every commuting adjacent pair in increasing order
    suffice.  With ``exact_top`` the word must also use ``ar``.
    """
    word: list[int] = []

    def rec(has_one: bool, has_top: bool):
        if len(word) == n:
            if has_one and (has_top or not exact_top):
                yield list(word)
            return
        for x in range(1, r + 1):
            if word:
                p = word[-1]
                if p > x and p - x != 1:
                    continue
            word.append(x)
            yield from rec(has_one or x == 1, has_top or x == r)
            word.pop()

    yield from rec(False, False)


ENUM_BPG_CAP = 8


def enumerate_bpg(n: int) -> Iterator[Graph]:
    """All ``n``-vertex BPGs up to isomorphism, from path-decoder words over
    ``n//2 + 1`` letters.  Yields canonical representatives in code order."""
    check_cap(n, ENUM_BPG_CAP, "enumerate_bpg")
    if n == 0:
        yield Graph(0)
        return
    r = n // 2 + 1
    codes = set()
    seen_labelled = set()
    for w in path_words(n, r):
        h = decode_path_word(w)
        if h.edges in seen_labelled:
            continue
        seen_labelled.add(h.edges)
        codes.add(canonical_code(h))
    for code in sorted(codes):
        yield graph_from_code(code)


def min_path_alphabet(g: Graph, rmax: int | None = None) -> int | None:
    """Least number of letters in a path-decoder (Parikh) representation, by
    exhaustive word search."""
    check_cap(g.n, 8, "min_path_alphabet")
    if g.n == 0:
        return 1
    target = canonical_code(g)
    rmax = g.n // 2 + 1 if rmax is None else rmax
    for r in range(1, rmax + 1):
        for w in path_words(g.n, r, exact_top=True):
            h = decode_path_word(w)
            if h.m == g.m and canonical_code(h) == target:
                return r
    return None
