from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from wordrep.binmatrix import BinaryMatrix, Biorder
from wordrep.errors import InputError
from wordrep.graph import Graph, build_graph, complete_graph, generate_family
from wordrep.orientations import (Orientation, check_violation, classify_row_vertices,
                                  find_violation, is_semi_transitive, orientation_from_biorder,
                                  search_semi_transitive, transitive_orientation)
from wordrep.recognizer import cg, generate_gs


def orient(n, arcs) -> Orientation:
    return Orientation(build_graph(n, arcs), frozenset(arcs))


def brute_semi_transitive(o: Orientation) -> bool:
    """Acyclic, and every directed path whose ends are joined by an arc is
    fully transitive."""
    succ = {v: set() for v in o.base.vertices}
    for u, v in o.arcs:
        succ[u].add(v)

    def paths(start):
        stack = [(start,)]
        while stack:
            p = stack.pop()
            yield p
            for w in succ[p[-1]]:
                if w == start:
                    yield p + (w,)
                elif w not in p:
                    stack.append(p + (w,))

    for v in o.base.vertices:
        for p in paths(v):
            if p[-1] == p[0] and len(p) > 1:
                return False
            if len(p) >= 4 and (p[0], p[-1]) in o.arcs:
                if any((p[i], p[j]) not in o.arcs for i, j in combinations(range(len(p)), 2)):
                    return False
    return True


def test_minimal_shortcut():
    o = orient(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    v = find_violation(o)
    assert v.kind == "shortcut" and v.vertices == (1, 2, 3, 4)
    assert check_violation(o, v)


def test_directed_cycle():
    o = orient(3, [(1, 2), (2, 3), (3, 1)])
    v = find_violation(o)
    assert v.kind == "cycle" and v.vertices == (1, 2, 3)


def test_transitive_tournament_is_fine():
    g = complete_graph(6)
    assert find_violation(Orientation(g, frozenset(g.sorted_edges()))) is None


@st.composite
def orientations(draw):
    g = draw(graphs(max_n=6))
    flips = draw(st.lists(st.booleans(), min_size=len(g.edges), max_size=len(g.edges)))
    arcs = [(u, v) if f else (v, u) for (u, v), f in zip(g.sorted_edges(), flips)]
    return Orientation(g, frozenset(arcs))


@settings(max_examples=300)
@given(orientations())
def test_find_violation_matches_definition(o):
    v = find_violation(o)
    assert (v is None) == brute_semi_transitive(o)
    if v is not None:
        assert check_violation(o, v)


def test_orientation_rejects_partial():
    g = build_graph(3, [(1, 2), (2, 3)])
    with pytest.raises(InputError):
        Orientation(g, frozenset([(1, 2)]))


def test_search_examples():
    bip = build_graph(5, [(1, 4), (1, 5), (2, 4), (3, 5)])
    o = search_semi_transitive(bip)
    assert o is not None and is_semi_transitive(o)
    o = search_semi_transitive(generate_family("CoC2k", 3))
    assert o is not None and is_semi_transitive(o)
    assert search_semi_transitive(generate_gs("CG_ZA")) is None


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_transitive_orientation_is_transitive(g):
    o = transitive_orientation(g)
    if o is None:
        return
    arcs = o.arcs
    for a, b in arcs:
        for c, d in arcs:
            if b == c:
                assert (a, d) in arcs


def test_c5_has_no_transitive_orientation():
    c5 = build_graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert transitive_orientation(c5) is None


def _arcs_by_name(o: Orientation, g: Graph, p):
    names = {v: f"r{i + 1}" for i, v in enumerate(p.side_x)}
    names.update({v: f"c{j + 1}" for j, v in enumerate(p.side_y)})
    return {(names[u], names[v]) for u, v in o.arcs}


def test_biorder_example_by_hand():
    m = BinaryMatrix.from_dense([[1, 1], [0, 1]])
    g, p = cg(m)
    o = orientation_from_biorder(g, p, Biorder.build(m, [0, 1], [0, 1]))
    assert _arcs_by_name(o, g, p) == {("r1", "r2"), ("c1", "c2"), ("r1", "c1"),
                                       ("r1", "c2"), ("r2", "c2")}
    assert find_violation(o) is None


def test_biorder_permutation_matrix():
    m = BinaryMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    g, p = cg(m)
    o = orientation_from_biorder(g, p, Biorder.build(m, [0, 1, 2], [0, 1, 2]))
    assert find_violation(o) is None


def test_biorder_case_two():
    m = BinaryMatrix.from_dense([[1, 1, 0], [0, 1, 0], [0, 0, 0]])
    g, p = cg(m)
    o = orientation_from_biorder(g, p, Biorder.build(m, [0, 1, 2], [0, 1, 2]))
    assert find_violation(o) is None
    zero_row, zero_col = p.side_x[2], p.side_y[2]
    for side, sink in ((p.side_x, zero_row), (p.side_y, zero_col)):
        assert all((v, sink) in o.arcs for v in side if v != sink)


def test_biorder_rejects_non_monotone():
    zd = BinaryMatrix.from_dense([[1, 0, 0, 1], [1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 0, 0]])
    g, p = cg(zd)
    with pytest.raises(InputError):
        orientation_from_biorder(g, p, Biorder.build(zd, range(4), range(4)))


def test_classify_rows():
    m = BinaryMatrix.from_dense([[1, 1, 0], [0, 1, 1]])
    assert set(classify_row_vertices(Biorder.build(m, [0, 1], [0, 1, 2])).values()) == {"linear"}
    w = BinaryMatrix.from_sets(3, [[0, 2]])
    assert classify_row_vertices(Biorder.build(w, [0], [0, 1, 2])) == {0: "circular"}
    two = BinaryMatrix.from_sets(3, [[0, 2], [0]])
    with pytest.raises(InputError):
        classify_row_vertices(Biorder.build(two, [0, 1], [0, 1, 2]))
