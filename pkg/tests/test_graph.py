from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from wordrep.errors import InputError
from wordrep.graph import (CoBipartition, all_cobipartitions, build_graph, cobipartite_partition,
                           complement, complete_graph, cycle_graph, find_induced, find_induced_cycle,
                           generate_family, induced_subgraph, is_isomorphic, local_complement,
                           local_complement_seq)

C6BAR = generate_family("CoC2k", 3)


def test_build_graph_basics():
    c4 = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert c4.sorted_edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]
    k1 = build_graph(1, [])
    assert len(k1) == 1 and not k1.edges


def test_co_c6_structure():
    assert len(C6BAR.edges) == 9
    for tri in ({1, 3, 5}, {2, 4, 6}):
        assert all(C6BAR.has_edge(a, b) for a, b in combinations(tri, 2))
    for a, b in ((1, 4), (2, 5), (3, 6)):
        assert C6BAR.has_edge(a, b)
    assert complement(cycle_graph(6)) == C6BAR


@pytest.mark.parametrize("edges, msg", [
    ([(1, 1)], "loop"),
    ([(1, 2), (2, 1)], "repeated"),
    ([(1, 5)], "outside"),
])
def test_build_graph_rejects(edges, msg):
    with pytest.raises(InputError, match=msg):
        build_graph(3, edges)


def test_complement_k3_is_empty():
    assert not complement(complete_graph(3)).edges


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_induced_subgraph_examples():
    h = induced_subgraph(C6BAR, {1, 3, 4, 5})
    assert h.sorted_edges() == [(1, 3), (1, 4), (1, 5), (3, 5)]
    assert induced_subgraph(C6BAR, C6BAR.vertices) == C6BAR
    assert len(induced_subgraph(C6BAR, ())) == 0


def test_partition_examples():
    p = cobipartite_partition(C6BAR)
    assert p == CoBipartition((1, 3, 5), (2, 4, 6))
    p = cobipartite_partition(complete_graph(5))
    assert p == CoBipartition((1, 2, 3, 4, 5), ())
    bad = cobipartite_partition(cycle_graph(5))
    assert not bad and len(bad.odd_cycle) == 5


@given(graphs(max_n=6))
def test_partition_is_valid_or_odd_cycle(g):
    p = cobipartite_partition(g)
    co = complement(g)
    if p:
        assert p.is_valid_for(g)
        assert p in all_cobipartitions(g)
    else:
        cyc = p.odd_cycle
        assert len(cyc) % 2 == 1
        assert all(co.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_local_complement_examples():
    path = local_complement(complete_graph(3), 1)
    assert path.sorted_edges() == [(1, 2), (1, 3)]


@given(graphs(min_n=1))
def test_local_complement_involution(g):
    v = min(g.vertices)
    assert local_complement(local_complement(g, v), v) == g


def test_find_induced_examples():
    emb = find_induced(C6BAR, complete_graph(3))
    assert sorted(emb.values()) == [1, 3, 5]
    assert find_induced(cycle_graph(4), complete_graph(3)) is None
    g = local_complement_seq(generate_family("G1"), (7, 6))
    emb = find_induced(g, generate_family("W5"))
    assert emb is not None and len(emb) == 6


@given(graphs(max_n=6), graphs(max_n=4))
def test_find_induced_embedding_is_induced(host, pattern):
    emb = find_induced(host, pattern)
    if emb is None:
        return
    assert len(set(emb.values())) == len(pattern)
    for a, b in combinations(pattern.order, 2):
        assert pattern.has_edge(a, b) == host.has_edge(emb[a], emb[b])


def test_find_induced_cycle_in_complement():
    assert find_induced_cycle(cycle_graph(6), 6) is not None
    assert find_induced_cycle(complete_graph(6), 4) is None


def test_families():
    g1 = generate_family("G1")
    assert len(g1) == 7
    for side in ((1, 2, 3), (4, 5, 6, 7)):
        assert all(g1.has_edge(a, b) for a, b in combinations(side, 2))
    w5 = generate_family("W5")
    hubs = [v for v in w5.order if w5.degree(v) == 5]
    assert len(hubs) == 1
    assert is_isomorphic(w5.remove_vertex(hubs[0]), cycle_graph(5))
    assert len(generate_family("Y6")) == 7
    with pytest.raises(InputError):
        generate_family("CoC2k", 2)
    with pytest.raises(InputError):
        generate_family("nope")
