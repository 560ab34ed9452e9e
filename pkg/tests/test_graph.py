import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bpglab import named
from bpglab.canon import enumerate_graphs, is_isomorphic
from bpglab.errors import GraphFormatError
from bpglab.graph import (Graph, delete_vertex, disjoint_union, induced_subgraph, local_complement,
                          pivot, pivot_net_effect, read_graph, read_graphs, write_graph, write_graphs)
from bpglab.letters import chain_system, letter_graph
from bpglab.parameters import graph_metrics


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def test_from_edges_normalizes():
    g = Graph.from_edges(3, [(2, 1), (3, 2)])
    assert g.edges == {(1, 2), (2, 3)}
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])


def test_matrix_roundtrip():
    g = named.sun3()
    assert Graph.from_matrix(np.array(g.matrix)) == g
    assert not g.matrix.flags.writeable


@pytest.mark.parametrize("family,params,n,m", [
    ("spider", (2, 2, 2), 7, 6),
    ("sun3", (), 7, 7),
    ("phi", (), 7, 8),
    ("hgraph", (5,), 9, 8),
    ("hgraph", (1,), 5, 4),
    ("star", (4,), 5, 4),
    ("cycle", (5,), 5, 5),
    ("complete-bipartite", (2, 3), 5, 6),
    ("matching", (3,), 6, 3),
])
def test_named_sizes(family, params, n, m):
    g = named.make_named(family, *params)
    assert (g.n, g.m) == (n, m)


def test_hgraph_one_is_k14():
    assert is_isomorphic(named.hgraph(1), named.star(4))


@pytest.mark.parametrize("family,params", [("cycle", (2,)), ("spider", (0, 1, 1)), ("nope", ()), ("path", (1, 2))])
def test_named_rejects(family, params):
    with pytest.raises(ValueError):
        named.make_named(family, *params)


def test_sun3_phi_bipartite():
    assert named.sun3().is_bipartite() and named.phi().is_bipartite()


def test_disjoint_union():
    k2 = named.path(2)
    two = disjoint_union([k2, k2])
    assert (two.n, two.m) == (4, 2) and len(two.components()) == 2
    assert disjoint_union([named.path(3)]) == named.path(3)
    fstar = disjoint_union([named.star(4), named.star(2), named.star(1), named.star(1)])
    assert fstar.n == 12


def test_induced_subgraph():
    p4 = named.path(4)
    assert induced_subgraph(p4, {1, 2}) == named.path(2)
    assert induced_subgraph(named.cycle(4), {1, 3}).m == 0
    assert induced_subgraph(p4, {1, 3, 4}) == Graph.from_edges(3, [(2, 3)])
    assert induced_subgraph(p4, p4.vertices) == p4
    assert induced_subgraph(p4, []) == Graph(0)
    with pytest.raises(ValueError):
        induced_subgraph(p4, {5})


def test_delete_vertex_relabels():
    assert delete_vertex(named.path(4), 2) == Graph.from_edges(3, [(2, 3)])


def test_isomorphism_examples():
    p4 = named.path(4)
    assert is_isomorphic(p4, p4.relabel({1: 3, 2: 1, 3: 4, 4: 2}))
    assert not is_isomorphic(p4, named.star(3))
    assert is_isomorphic(letter_graph(chain_system("abab")), p4)


def test_metrics_examples():
    m = graph_metrics(named.path(4))
    assert (m.path_number, m.mis) == (3, 2)
    assert graph_metrics(named.cycle(5)).path_number == 4
    m = graph_metrics(named.matching(2))
    assert len(m.components) == 2 and m.mis == 2
    assert m.distances[1][3] == math.inf and m.distances[1][2] == 1


def test_local_complement_examples():
    p3 = named.path(3)
    assert local_complement(p3, 2) == named.complete(3)
    assert local_complement(named.complete(3), 1).m == 2
    with pytest.raises(ValueError):
        local_complement(p3, 4)


def test_pivot_examples():
    assert is_isomorphic(pivot(named.path(4), 2, 3), named.cycle(4))
    with pytest.raises(ValueError):
        pivot(named.path(4), 1, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_pivot_invariants_exhaustive(n):
    for g in enumerate_graphs(n):
        for v in g.vertices:
            assert local_complement(local_complement(g, v), v) == g
        for u, v in g.edges:
            p = pivot(g, u, v)
            assert p.has_edge(u, v)
            assert pivot(p, u, v) == g
            if g.is_bipartite():
                assert p.is_bipartite()
                swap = {w: w for w in g.vertices} | {u: v, v: u}
                assert p == pivot_net_effect(g, u, v).relabel(swap)
                assert is_isomorphic(p, pivot_net_effect(g, u, v))


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_text_roundtrip(g):
    assert read_graph(write_graph(g, "c")) == g


def test_text_stream():
    gs = [named.path(3), Graph(0), named.cycle(4)]
    text = write_graphs(gs)
    assert read_graphs(text) == gs


def test_writer_sorts_edges():
    assert write_graph(Graph.from_edges(3, [(2, 3), (1, 3)])) == "p 3\ne 1 3\ne 2 3\n"


@pytest.mark.parametrize("text", [
    "e 1 2\n",
    "p 3\ne 1 4\n",
    "p 3\ne 1 1\n",
    "p 3\ne 1 2\ne 2 1\n",
    "p 3\nx 1 2\n",
    "p -1\n",
    "",
    "p 2\np 2\n",
])
def test_reader_rejects(text):
    with pytest.raises(GraphFormatError):
        read_graph(text)
