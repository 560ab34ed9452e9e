"""Acceptance checks, one test and one printed verdict line per criterion.

Verdict lines bypass output capture, so they show up in any pytest run.
"""

import time

import pytest

from bpglab import named
from bpglab.canon import canonical_code, enumerate_graphs, is_isomorphic
from bpglab.graph import delete_vertex, disjoint_union
from bpglab.isi import isi_bruteforce, isi_linear_forest, isi_p5free
from bpglab.letters import encode_bpg, enumerate_bpg, graph_of_system, lettericity_exact, min_path_alphabet
from bpglab.parameters import build_UwK, distinguishing_number, KGraph, neighbourhood_diversity, WordSource
from bpglab.recognition import find_induced, find_star_forest_pattern, is_member
from bpglab.universal import (chain_pivot_edges, linear_forests, pivot_sequence, rigid_graph,
                              star_forest_fits, star_forests, universal_bpg, universal_chain,
                              universal_star_forest, universal_star_forest_bounded, witness_rnt)

@pytest.fixture
def verdict(capsys):
    def _say(num: int, ok: bool, detail: str):
        line = f"ACCEPTANCE {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        with capsys.disabled():
            print("\n" + line, flush=True)
    return _say



def test_c01_hnn_universality(verdict):
    failures, checked, cross = 0, 0, True
    for n in range(1, 6):
        members = list(enumerate_bpg(n))
        by_filter = {canonical_code(g) for g in enumerate_graphs(n) if is_member("bpg", g)}
        cross &= {canonical_code(g) for g in members} == by_filter
        u = universal_bpg(n)
        for g in members:
            checked += 1
            failures += find_induced(u, g) is None
    ok = failures == 0 and cross
    verdict(1, ok, f"H_(n,n) contains all {checked} BPGs on n=1..5 vertices; "
                   f"failures={failures}; word vs filtered catalogues agree={cross}")
    assert ok


def test_c02_lettericity_bound(verdict):
    failures, checked = 0, 0
    for n in range(1, 9):
        for g in enumerate_bpg(n):
            checked += 1
            s = encode_bpg(g)
            if not (s.is_path_decoder() and s.size <= n // 2 + 1 and graph_of_system(s) == g):
                failures += 1
    ok = failures == 0
    verdict(2, ok, f"encode_bpg round-trips {checked} BPGs (n<=8) within floor(n/2)+1 letters; failures={failures}")
    assert ok


def test_c03_path_lettericity(verdict):
    paths = [lettericity_exact(named.path(s), kmax=3) for s in range(4, 8)]
    two_k2 = lettericity_exact(named.matching(2), kmax=3)
    parikh = min_path_alphabet(named.matching(2))
    ok = paths == [2, 3, 3, 3] and two_k2 == 2
    verdict(3, ok, f"lettericity P4..P7 = {paths} (want [2, 3, 3, 3]); 2K2 = {two_k2} (want 2), "
                   f"its path-decoder alphabet = {parikh}")
    assert ok


def test_c04_ilp_oracle(verdict):
    t = time.perf_counter()
    cat = {k: list(linear_forests(k)) for k in range(0, 10)}
    pairs, bad = 0, 0
    for n in range(1, 10):
        for g in cat[n]:
            for m in range(0, n + 1):
                for h in cat[m]:
                    pairs += 1
                    bad += bool(isi_linear_forest(g, h)) != (isi_bruteforce(g, h) is not None)
    dt = time.perf_counter() - t
    ok = bad == 0 and dt < 600
    verdict(4, ok, f"ILP vs brute force on {pairs} linear-forest pairs (|G|<=9): disagreements={bad}, {dt:.1f}s")
    assert ok


def test_c05_matching_oracle(verdict):
    cat = {n: [g for g in enumerate_bpg(n) if is_member("p5free_bipartite", g)] for n in range(1, 9)}
    pairs, bad, bad_cert = 0, 0, 0
    for n in range(1, 9):
        for g in cat[n]:
            for m in range(1, 8):
                for h in cat[m]:
                    pairs += 1
                    r = isi_p5free(g, h)
                    bad += bool(r) != (isi_bruteforce(g, h) is not None)
                    if r and not (r.embedding is not None and r.embedding.verify()):
                        bad_cert += 1
    g, h = named.matching(2), disjoint_union([named.path(2), named.empty(1)])
    padded, literal = bool(isi_p5free(g, h)), bool(isi_p5free(g, h, literal=True))
    ok = bad == 0 and bad_cert == 0 and padded and not literal
    verdict(5, ok, f"assignment route vs brute force on {pairs} P5-free pairs: disagreements={bad}, "
                   f"bad embeddings={bad_cert}; 2K2 vs K2+K1: padded={padded}, literal={literal}")
    assert ok


def test_c06_star_forest_universal(verdict):
    bad_analytic, bad_oracle, bad_size, checked = 0, 0, 0, 0
    for n in range(1, 11):
        u = universal_star_forest(n)
        bad_size += u.n != sum(n // i + 1 for i in range(1, n + 1))
        for g in star_forests(n):
            checked += 1
            sizes = [len(c) - 1 for c in g.components()]
            bad_analytic += not star_forest_fits(sizes, n)
            bad_oracle += find_induced(u, g) is None
    ok = bad_analytic == bad_oracle == bad_size == 0
    verdict(6, ok, f"F*(n), n=1..10: {checked} star forests; analytic misses={bad_analytic}, "
                   f"oracle misses={bad_oracle}, vertex-count mismatches={bad_size}")
    assert ok


def test_c07_bounded_star_forest_universal(verdict):
    checked, bad = 0, 0
    for k in (2, 3):
        for n in range(1, 7):
            u = universal_star_forest_bounded(k, n)
            for g in star_forests(n):
                if find_star_forest_pattern(g, k, k) is not None:
                    continue
                checked += 1
                bad += find_induced(u, g) is None
    ok = bad == 0
    verdict(7, ok, f"(k-1)S_n + nS_(k-1), k=2,3, n<=6: {checked} kS_k-free star forests, failures={bad}")
    assert ok


def test_c08_pivot_sequence(verdict):
    results = {}
    for n in range(3, 9):
        seq = pivot_sequence(universal_chain(n), chain_pivot_edges(n))
        results[n] = all(g.is_bipartite() for g in seq) and is_isomorphic(seq[-1], named.path(2 * n))
    ok = all(results.values())
    verdict(8, ok, f"pivots a_i b_i (i=2..n-1) turn Z_n into P_2n, bipartite throughout: {results}")
    assert ok


def test_c09_witnesses(verdict):
    q_bad = []
    for t in range(1, 7):
        w = rigid_graph(t)
        g = w.graph
        if not (g.n == 4 * t + 10 and is_member("bpg", g) and g.distance(w.x[0], w.y[0]) == t + 2):
            q_bad.append(t)
    r_bad = []
    for n, t in ((40, 2), (60, 3), (80, 4)):
        w = witness_rnt(n, t)
        g = w.graph
        dists = {g.distance(x, y) for x in w.x for y in w.y}
        if not (g.n <= n and find_star_forest_pattern(g, 3, 6) is None and dists == {t + 2}):
            r_bad.append((n, t))
    ok = not q_bad and not r_bad
    verdict(9, ok, f"Q_t t=1..6 (size 4t+10, BPG, d(x,y)=t+2) failures={q_bad}; "
                   f"R_(n,t) (size<=n, 3S_6-free, d=t+2) failures={r_bad}")
    assert ok


def test_c10_forbidden_minimality(verdict):
    graphs = {"S222": named.spider(2, 2, 2), "Sun3": named.sun3(), "Phi": named.phi(),
              "C5": named.cycle(5), "C6": named.cycle(6), "C7": named.cycle(7)}
    exceptions = []
    for name, g in graphs.items():
        for mode in ("forbidden", "constructive"):
            if is_member("bpg", g, mode=mode):
                exceptions.append((name, mode, "accepted"))
            for v in g.vertices:
                if not is_member("bpg", delete_vertex(g, v), mode=mode):
                    exceptions.append((name, mode, f"-{v} rejected"))
    ok = not exceptions
    verdict(10, ok, f"6 forbidden graphs rejected, every one-vertex deletion accepted, both recognizers; "
                    f"exceptions={exceptions}")
    assert ok


def _criterion_11():
    nd_m = {m: neighbourhood_diversity(named.matching(m)) for m in range(1, 6)}
    dist_m = {m: distinguishing_number(named.matching(m)) for m in range(1, 6)}
    nd_z = {n: neighbourhood_diversity(universal_chain(n)) for n in range(1, 7)}
    sources = [WordSource(("a",), "", "a"), WordSource(("a", "b"), "", "ab"),
               WordSource(("a", "b", "c"), "ca", "abb")]
    uwk = all(build_UwK(s, KGraph(len(s.alphabet)), n) == named.path(n) for s in sources for n in range(1, 9))
    return nd_m, dist_m, nd_z, uwk


def test_c11_parameter_spot_values(verdict):
    nd_m, dist_m, nd_z, uwk = _criterion_11()
    misses = [n for n, v in nd_z.items() if v != 2 * n]
    exact = (all(v == m for m, v in nd_m.items()) and all(v == 1 for v in dist_m.values()) and uwk)
    ok = exact and not misses
    detail = (f"nd(mK2)={list(nd_m.values())}, dist(mK2)={list(dist_m.values())}, "
              f"nd(Z_n) n=1..6={list(nd_z.values())}, U(w,empty K)=P_N for N<=8: {uwk}")
    if misses:
        detail += f"; nd(Z_n)=2n fails at n={misses} (Z_1=K_2 has one similarity class; unattainable as stated)"
    verdict(11, ok, detail)
    # the attainable part must hold exactly
    assert exact and misses in ([], [1])


@pytest.mark.xfail(strict=True, reason="nd(Z_1)=nd(K_2)=1; the stated value 2n=2 cannot hold")
def test_c11_nd_z1_as_stated():
    assert neighbourhood_diversity(universal_chain(1)) == 2
