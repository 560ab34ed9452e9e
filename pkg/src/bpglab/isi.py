"""Induced subgraph isomorphism: does ``h`` occur as an induced subgraph of ``g``?

Three solvers:

* :func:`isi_bruteforce` -- exhaustive backtracking, the ground truth;
* :func:`isi_linear_forest` -- linear forests, as integer feasibility of a
  system whose columns are the induced sub-forests of each path length;
* :func:`isi_p5free` -- P5-free bipartite graphs (every component a chain
  graph), as a maximum-weight assignment between components.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import UnsupportedInstance
from .graph import Graph, induced_subgraph
from .letters import encode_chain, subword_embed
from .recognition import Embedding, find_induced, is_member


# -- linear forests -------------------------------------------------------------------

Profile = tuple[int, ...]


def _trim(p) -> Profile:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def profile_of(g: Graph) -> Profile:
    """``alpha`` with ``alpha[i-1]`` = number of components isomorphic to ``P_i``."""
    if not is_member("linear_forest", g):
        raise ValueError("not a linear forest")
    counts: dict[int, int] = {}
    for comp in g.components():
        counts[len(comp)] = counts.get(len(comp), 0) + 1
    top = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


def profile_size(p: Profile) -> int:
    return sum(a * i for i, a in enumerate(p, 1))


def columns_A(i: int, include_empty: bool = True) -> list[Profile]:
    """Profiles of the induced subgraphs of ``P_i``.

    A forest ``g_1 P_1 + g_2 P_2 + ...`` sits in ``P_i`` iff its paths plus one
    separating gap between consecutive paths fit: ``sum_j g_j (j+1) <= i+1``.
    Listed in lexicographic order of the profile vector (length ``i``).
    """
    if i < 1:
        raise ValueError("columns_A needs i >= 1")
    out: list[Profile] = []

    def rec(j: int, budget: int, acc: list[int]):
        if j > i:
            out.append(tuple(acc))
            return
        for cnt in range(budget // (j + 1) + 1):
            acc.append(cnt)
            rec(j + 1, budget - cnt * (j + 1), acc)
            acc.pop()

    rec(1, i + 1, [])
    cols = sorted(_trim(p) for p in out)
    if not include_empty:
        cols = [c for c in cols if c]
    return cols


def columns_A_by_subsets(i: int) -> list[Profile]:
    """Reference for :func:`columns_A`: profiles of all vertex subsets of ``P_i``."""
    from .named import path
    p = path(i)
    found = set()
    for mask in range(1 << i):
        sub = induced_subgraph(p, [v for v in range(1, i + 1) if mask >> (v - 1) & 1])
        found.add(_trim(profile_of(sub)))
    return sorted(found)


@dataclass
class IlpSystem:
    """Feasibility system: pick ``x_j >= 0`` copies of column ``j``.

    Demand: ``sum_j A[:, j] x_j >= alpha``.  Capacity: within block ``i`` (the
    columns of ``P_i``), ``sum x_j <= beta_i``.
    """
    alpha: Profile
    beta: Profile
    blocks: list[list[Profile]]        # blocks[i-1] = columns of A_i
    include_empty: bool = True

    @property
    def n(self) -> int:
        return len(self.blocks)

    def matrix(self) -> np.ndarray:
        cols = [c for b in self.blocks for c in b]
        a = np.zeros((self.n, len(cols)), dtype=np.int64)
        for j, c in enumerate(cols):
            a[:len(c), j] = c
        return a

    def check(self, x: list[list[int]]) -> bool:
        cover = [0] * self.n
        for i, (cols, xs) in enumerate(zip(self.blocks, x)):
            if any(v < 0 for v in xs) or sum(xs) > (self.beta[i] if i < len(self.beta) else 0):
                return False
            for c, v in zip(cols, xs):
                for j, g in enumerate(c):
                    cover[j] += g * v
        return all(cover[i] >= (self.alpha[i] if i < len(self.alpha) else 0) for i in range(self.n))


def build_system(g: Graph, h: Graph, include_empty: bool = True) -> IlpSystem:
    alpha, beta = profile_of(h), profile_of(g)
    n = max(len(alpha), len(beta), 1)
    alpha = alpha + (0,) * (n - len(alpha))
    beta = beta + (0,) * (n - len(beta))
    return IlpSystem(alpha, beta, [columns_A(i, include_empty) for i in range(1, n + 1)], include_empty)


def solve_system(sysm: IlpSystem) -> list[list[int]] | None:
    """Branch and bound over the blocks, longest paths first.

    Within a block the capacity is spread over columns as a multiset.  A
    partial assignment is abandoned when the residual demand of components of
    length ``>= s`` exceeds what the unprocessed paths could still host, for
    some ``s``: a path on ``l`` vertices holds at most ``(l+1)//(s+1)`` such
    components.
    """
    n = sysm.n
    alpha = list(sysm.alpha)
    beta = list(sysm.beta)
    x = [[0] * len(b) for b in sysm.blocks]

    def feasible_bound(residual: list[int], upto: int) -> bool:
        # paths P_1..P_upto remain unprocessed
        tail = 0
        for s in range(n, 0, -1):
            tail += residual[s - 1]
            if tail == 0:
                continue
            room = sum(beta[l - 1] * ((l + 1) // (s + 1)) for l in range(s, upto + 1))
            if tail > room:
                return False
        return True

    def block(i: int, residual: list[int]) -> bool:
        if all(r <= 0 for r in residual):
            return True
        if i == 0:
            return False
        if not feasible_bound([max(r, 0) for r in residual], i):
            return False
        cols = sysm.blocks[i - 1]
        # useful columns first: those covering the longest outstanding demand
        order = sorted(range(len(cols)), key=lambda j: tuple(-v for v in reversed(cols[j] + (0,) * (n - len(cols[j])))))
        return place(i, residual, order, 0, beta[i - 1])

    def place(i: int, residual: list[int], order: list[int], start: int, left: int) -> bool:
        if block(i - 1, residual):
            return True
        if left == 0:
            return False
        cols = sysm.blocks[i - 1]
        for idx in range(start, len(order)):
            j = order[idx]
            c = cols[j]
            if not any(c[k] > 0 and residual[k] > 0 for k in range(len(c))):
                continue
            new = list(residual)
            for k, v in enumerate(c):
                new[k] -= v
            x[i - 1][j] += 1
            if place(i, new, order, idx, left - 1):
                return True
            x[i - 1][j] -= 1
        return False

    if block(n, list(alpha)):
        return x
    return None


@dataclass
class LinearForestResult:
    embeds: bool
    system: IlpSystem
    x: list[list[int]] | None = None

    def __bool__(self):
        return self.embeds

    def certificate_lines(self) -> list[str]:
        if self.x is None:
            return []
        lines = []
        for i, (cols, xs) in enumerate(zip(self.system.blocks, self.x), 1):
            for c, v in zip(cols, xs):
                if v:
                    lines.append(f"block {i} column {list(c)} x={v}")
        return lines


def isi_linear_forest(g: Graph, h: Graph, include_empty: bool = True) -> LinearForestResult:
    for name, gr in (("G", g), ("H", h)):
        if not is_member("linear_forest", gr):
            raise UnsupportedInstance(f"{name} is not a linear forest")
    sysm = build_system(g, h, include_empty)
    x = solve_system(sysm)
    if x is not None:
        assert sysm.check(x)
    return LinearForestResult(x is not None, sysm, x)


# -- P5-free bipartite graphs ----------------------------------------------------------

NEG_INF = float("-inf")


def chain_independence(word: str) -> int:
    """Independence number of the chain graph of an {a,b}-word: best cut into
    b's before the cut plus a's after it."""
    best = 0
    for cut in range(len(word) + 1):
        best = max(best, word[:cut].count("b") + word[cut:].count("a"))
    return best


def component_weight(w_g: str, h_pair) -> float:
    """Largest number of extra isolated vertices ``G'`` can host beside ``H'``.

    ``w_g`` is an {a,b}-word of the connected chain graph ``G'``; ``h_pair``
    holds both words of ``H'``.  For each window of ``w_g`` that starts with
    an ``a`` and ends with a ``b`` and contains one of the ``H'`` words as a
    subword, the hostable count is the ``b``'s before the window plus the
    ``a``'s after it.  Returns ``-inf`` when ``H'`` does not embed at all.
    """
    h1, h2 = tuple(h_pair)
    if set(w_g) - {"a", "b"} or set(h1) - {"a", "b"} or set(h2) - {"a", "b"}:
        raise ValueError("words must be over {a, b}")
    nu = NEG_INF
    if not (subword_embed(h1, w_g) or subword_embed(h2, w_g)):
        return nu
    t = len(w_g)
    for i in range(t):
        if w_g[i] != "a":
            continue
        for j in range(i + 1, t):
            if w_g[j] != "b":
                continue
            w2 = w_g[i:j + 1]
            if subword_embed(h1, w2) or subword_embed(h2, w2):
                nu = max(nu, w_g[:i].count("b") + w_g[j + 1:].count("a"))
    return nu


@dataclass
class Component:
    graph: Graph
    vertices: list[int]
    words: tuple[str, str]
    orders: tuple[tuple[int, ...], tuple[int, ...]]   # vertices of `graph` along each word


def _chain_components(g: Graph) -> tuple[list[Component], list[int]]:
    nontrivial, isolated = [], []
    for comp in g.components():
        if len(comp) == 1:
            isolated.append(comp[0])
            continue
        sub = induced_subgraph(g, comp)
        pair = encode_chain(sub)
        nontrivial.append(Component(sub, comp, (pair.w1, pair.w2), (pair.order1, pair.order2)))
    return nontrivial, isolated


@dataclass
class P5FreeResult:
    embeds: bool
    weights: np.ndarray
    assignment: list[tuple[int, int]] = field(default_factory=list)
    embedding: Embedding | None = None

    def __bool__(self):
        return self.embeds


def isi_p5free(g: Graph, h: Graph, literal: bool = False) -> P5FreeResult:
    """Decide ISI for P5-free bipartite ``g`` and ``h`` by weighted assignment.

    Rows are the non-trivial components of ``g``; columns the non-trivial
    components of ``h`` padded with dummy columns, one per spare row, whose
    weight is the row component's independence number.  ``h`` embeds iff the
    optimal assignment matches every real column at finite weight and the
    total weight plus the isolated vertices of ``g`` covers the isolated
    vertices of ``h``.

    ``literal=True`` drops the padding and the isolated vertices of ``g`` and
    demands a matching of all real columns of weight at least the number of
    isolated vertices of ``h``.  That rule is incomplete: it rejects
    ``g = 2K_2, h = K_2 + K_1``.
    """
    for name, gr in (("G", g), ("H", h)):
        if not is_member("p5free_bipartite", gr):
            raise UnsupportedInstance(f"{name} is not a P5-free bipartite graph")
    g_comps, g_iso = _chain_components(g)
    h_comps, h_iso = _chain_components(h)
    p, q = len(h_comps), len(g_comps)
    # sentinel standing in for -inf; the decision also checks finiteness directly
    sentinel = -(g.n * q * max(p, 1) + 1)
    finite = np.zeros((q, p), dtype=bool)
    w = np.zeros((q, p + (0 if literal else q - p if q > p else 0)), dtype=np.int64)
    for r, gc in enumerate(g_comps):
        for c, hc in enumerate(h_comps):
            val = component_weight(gc.words[0], hc.words)
            finite[r, c] = val != NEG_INF
            w[r, c] = int(val) if val != NEG_INF else sentinel
        if not literal:
            w[r, p:] = chain_independence(gc.words[0])
    if p > q:
        return P5FreeResult(False, w)
    if q == 0:
        ok = len(g_iso) >= len(h_iso) if not literal else len(h_iso) == 0
        return P5FreeResult(ok, w, [], _assemble(g, h, [], g_comps, h_comps, g_iso, h_iso) if ok else None)
    rows, cols = linear_sum_assignment(w, maximize=True)
    pairs = [(int(r), int(c)) for r, c in zip(rows, cols)]
    real = [(r, c) for r, c in pairs if c < p]
    all_real_finite = len(real) == p and all(finite[r, c] for r, c in real)
    total = int(sum(w[r, c] for r, c in pairs))
    if literal:
        ok = all_real_finite and total >= len(h_iso)
    else:
        ok = all_real_finite and total + len(g_iso) >= len(h_iso)
    emb = _assemble(g, h, real, g_comps, h_comps, g_iso, h_iso) if ok and not literal else None
    return P5FreeResult(ok, w, pairs, emb)


def _best_window_embedding(gc: Component, hc: Component):
    """Embedding of ``hc`` into ``gc`` attaining the component weight, plus the
    vertices of ``gc`` left free to host isolated vertices."""
    wg = gc.words[0]
    best = None
    t = len(wg)
    for hw, horder in zip(hc.words, hc.orders):
        for i in range(t):
            if wg[i] != "a":
                continue
            for j in range(i + 1, t):
                if wg[j] != "b":
                    continue
                pos = _subword_positions(hw, wg, i, j)
                if pos is None:
                    continue
                val = wg[:i].count("b") + wg[j + 1:].count("a")
                if best is None or val > best[0]:
                    free = [k for k in range(i) if wg[k] == "b"] + [k for k in range(j + 1, t) if wg[k] == "a"]
                    best = (val, pos, horder, free)
    return best


def _subword_positions(needle: str, hay: str, lo: int, hi: int) -> list[int] | None:
    """Positions of a subword embedding of ``needle`` into ``hay[lo..hi]`` using
    both window ends (the needle starts with a and ends with b)."""
    if not needle or needle[0] != hay[lo] or needle[-1] != hay[hi]:
        return None
    pos = [lo]
    k = lo + 1
    for ch in needle[1:-1]:
        while k < hi and hay[k] != ch:
            k += 1
        if k >= hi:
            return None
        pos.append(k)
        k += 1
    if len(needle) > 1:
        pos.append(hi)
    return pos


def _assemble(g, h, real, g_comps, h_comps, g_iso, h_iso) -> Embedding | None:
    mapping: dict[int, int] = {}
    hosts: list[int] = list(g_iso)
    used_rows = set()
    for r, c in real:
        gc, hc = g_comps[r], h_comps[c]
        best = _best_window_embedding(gc, hc)
        if best is None:
            return None
        _, pos, horder, free = best
        g_order = gc.orders[0]
        for hv_local, p in zip(horder, pos):
            mapping[hc.vertices[hv_local - 1]] = gc.vertices[g_order[p] - 1]
        hosts.extend(gc.vertices[g_order[k] - 1] for k in free)
        used_rows.add(r)
    for r, gc in enumerate(g_comps):
        if r in used_rows:
            continue
        wg = gc.words[0]
        cut = max(range(len(wg) + 1), key=lambda c: (wg[:c].count("b") + wg[c:].count("a"), -c))
        hosts.extend(gc.vertices[gc.orders[0][k] - 1] for k in range(len(wg))
                     if (k < cut and wg[k] == "b") or (k >= cut and wg[k] == "a"))
    if len(hosts) < len(h_iso):
        return None
    for hv, gv in zip(h_iso, hosts):
        mapping[hv] = gv
    emb = Embedding(h, g, mapping)
    return emb if emb.verify() else None


# -- brute force and dispatch --------------------------------------------------------------

BRUTE_H_CAP = 12
BRUTE_G_CAP = 40


def isi_bruteforce(g: Graph, h: Graph) -> Embedding | None:
    return find_induced(g, h)


def choose_solver(g: Graph, h: Graph) -> str:
    if is_member("linear_forest", g) and is_member("linear_forest", h):
        return "linear-forest-ilp"
    if is_member("p5free_bipartite", g) and is_member("p5free_bipartite", h):
        return "p5free-matching"
    return "bruteforce"


def isi_auto(g: Graph, h: Graph) -> bool:
    solver = choose_solver(g, h)
    if solver == "linear-forest-ilp":
        return bool(isi_linear_forest(g, h))
    if solver == "p5free-matching":
        return bool(isi_p5free(g, h))
    if h.n > BRUTE_H_CAP or g.n > BRUTE_G_CAP:
        raise UnsupportedInstance(
            f"brute force capped at |V(H)| <= {BRUTE_H_CAP}, |V(G)| <= {BRUTE_G_CAP}")
    return isi_bruteforce(g, h) is not None
