import random

import numpy as np
import pytest

from bpglab import named
from bpglab.errors import UnsupportedInstance
from bpglab.graph import Graph, delete_vertex, disjoint_union, induced_subgraph
from bpglab.isi import (build_system, choose_solver, columns_A, columns_A_by_subsets, component_weight,
                        isi_auto, isi_bruteforce, isi_linear_forest, isi_p5free, profile_of)
from bpglab.letters import encode_chain, enumerate_bpg
from bpglab.parameters import max_independent_set_size
from bpglab.recognition import all_induced, is_member
from bpglab.universal import linear_forests, universal_bpg, universal_chain

P, E = named.path, named.empty


def U(*gs):
    return disjoint_union(gs)


def test_profile_of():
    assert profile_of(U(P(3), P(3))) == (0, 0, 2)
    assert profile_of(U(P(2), E(2))) == (2, 1)
    for bad in (named.cycle(4), named.star(3)):
        with pytest.raises(ValueError):
            profile_of(bad)


def test_columns_examples():
    assert columns_A(1) == [(), (1,)]
    assert sorted(columns_A(3)) == sorted([(), (1,), (2,), (0, 1), (0, 0, 1)])
    assert (1, 1) in columns_A(4)


@pytest.mark.parametrize("i", range(1, 11))
def test_columns_characterization(i):
    cols = columns_A(i)
    assert cols == columns_A_by_subsets(i)
    assert len(cols) <= 2 ** i
    assert columns_A(i, include_empty=False) == [c for c in cols if c]


def test_linear_forest_examples():
    r = isi_linear_forest(U(P(3), P(3)), U(P(2), E(2)))
    assert r and r.system.check(r.x)
    picked = sorted((i, c) for i, (cols, xs) in enumerate(zip(r.system.blocks, r.x), 1)
                    for c, v in zip(cols, xs) for _ in range(v) if c)
    assert picked == [(3, (0, 1)), (3, (2,))]
    assert not isi_linear_forest(P(4), E(3))
    r = isi_linear_forest(P(4), Graph(0))
    assert r and all(v == 0 for xs in r.x for v in xs)
    with pytest.raises(UnsupportedInstance):
        isi_linear_forest(named.cycle(4), P(2))


def test_ilp_matrix_shape():
    s = build_system(P(4), P(2))
    a = s.matrix()
    assert a.shape == (4, sum(len(b) for b in s.blocks))
    assert (a >= 0).all()


def _lf_catalogue(n):
    return {k: list(linear_forests(k)) for k in range(0, n + 1)}


@pytest.mark.parametrize("include_empty", [True, False])
def test_linear_forest_oracle_small(include_empty):
    cat = _lf_catalogue(7)
    for n in range(1, 8):
        for g in cat[n]:
            for m in range(n + 1):
                for h in cat[m]:
                    assert bool(isi_linear_forest(g, h, include_empty)) == (isi_bruteforce(g, h) is not None)


def _cw_oracle(g, h):
    best = float("-inf")
    for emb in all_induced(g, h):
        closed = set(emb.image())
        for v in emb.image():
            closed |= g.adj[v]
        rest = [v for v in g.vertices if v not in closed]
        best = max(best, max_independent_set_size(induced_subgraph(g, rest)) if rest else 0)
    return best


def test_component_weight_examples():
    p4 = encode_chain(P(4)).w1
    assert p4 == "abab"
    k2 = encode_chain(P(2))
    assert component_weight(p4, k2) == 1
    assert component_weight("abbb", k2) == 0
    assert component_weight(p4, ("ababa", "ababa")) == float("-inf")
    with pytest.raises(ValueError):
        component_weight("abc", k2)


def _connected_chains(max_n):
    out = []
    for n in range(2, max_n + 1):
        for g in enumerate_bpg(n):
            if g.is_connected() and is_member("chain", g):
                out.append(g)
    return out


def test_component_weight_oracle():
    chains = _connected_chains(8)
    small = [h for h in chains if h.n <= 5]
    for g in chains:
        wg = encode_chain(g).w1
        for h in small:
            if h.n > g.n:
                continue
            assert component_weight(wg, encode_chain(h)) == _cw_oracle(g, h), (g, h)


def test_p5free_examples():
    assert isi_p5free(named.matching(2), U(P(2), E(1)))
    assert not isi_p5free(named.matching(2), U(P(2), E(1)), literal=True)
    assert not isi_p5free(U(named.star(3), P(2)), U(named.star(2), E(2)))
    r = isi_p5free(universal_chain(3), U(P(4), E(1)))
    assert r and r.embedding.verify()
    with pytest.raises(UnsupportedInstance):
        isi_p5free(P(5), P(2))


def _p5_catalogue(max_n):
    return {n: [g for g in enumerate_bpg(n) if is_member("p5free_bipartite", g)] for n in range(1, max_n + 1)}


def test_p5free_oracle_small():
    cat = _p5_catalogue(6)
    for n in cat:
        for g in cat[n]:
            for m in range(1, n + 1):
                for h in cat[m]:
                    r = isi_p5free(g, h)
                    assert bool(r) == (isi_bruteforce(g, h) is not None)
                    if r:
                        assert r.embedding is not None and r.embedding.verify()
                        assert r.embedding.source == h and r.embedding.target == g


def test_weights_have_sentinel_and_dummies():
    g = U(named.matching(2), E(1))
    h = U(P(2), E(1))
    r = isi_p5free(g, h)
    w = np.asarray(r.weights)
    assert w.shape[0] == w.shape[1] == 2
    assert (w[:, 1] == 1).all()  # dummy column: independence number of K_2


def test_bruteforce_examples():
    assert isi_bruteforce(P(3), P(2)) is not None
    emb = isi_bruteforce(named.cycle(4), E(2))
    assert emb is not None and abs(emb.map[1] - emb.map[2]) == 2
    assert isi_bruteforce(named.star(3), P(4)) is None


def test_dispatch():
    assert choose_solver(P(5), P(2)) == "linear-forest-ilp"
    assert choose_solver(universal_chain(3), named.cycle(4)) == "p5free-matching"
    assert choose_solver(universal_bpg(4), named.sun3()) == "bruteforce"
    assert isi_auto(universal_bpg(4), named.sun3()) is False
    with pytest.raises(UnsupportedInstance):
        isi_auto(universal_bpg(7), universal_bpg(4))


def test_monotone_under_vertex_deletion():
    rnd = random.Random(7)
    lf = _lf_catalogue(8)
    p5 = _p5_catalogue(7)
    for _ in range(150):
        n = rnd.randint(2, 8)
        g = rnd.choice(lf[n])
        h = rnd.choice(lf[rnd.randint(1, n)])
        if isi_linear_forest(g, h) and h.n > 1:
            for v in h.vertices:
                assert isi_linear_forest(g, delete_vertex(h, v))
        n = rnd.randint(2, 7)
        g = rnd.choice(p5[n])
        h = rnd.choice(p5[rnd.randint(2, n)])
        if isi_p5free(g, h):
            for v in h.vertices:
                assert isi_p5free(g, delete_vertex(h, v))
