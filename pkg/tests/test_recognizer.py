import pytest
from hypothesis import given, settings

from conftest import graphs, matrices
from wordrep.binmatrix import BinaryMatrix, generate_pattern, transpose
from wordrep.binmatrix.config import ConfigHit
from wordrep.binmatrix.matrix import PatternId
from wordrep.errors import InputError
from wordrep.graph import (CoBipartition, add_universal_vertex, all_cobipartitions, build_graph,
                           cobipartite_partition, complement, cycle_graph, generate_family,
                           induced_subgraph, is_isomorphic)
from wordrep.orientations import find_violation, search_semi_transitive
from wordrep.recognizer import (GS_MEMBERS, Certificate, biadjacency, cg, extract_certificate,
                                generate_gs, is_cobipartite_permutation, recognize,
                                validate_certificate, witness_orientation)

C6BAR = generate_family("CoC2k", 3)
PERM3 = BinaryMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_biadjacency_examples():
    p = CoBipartition((1, 3, 5), (2, 4, 6))
    m = biadjacency(C6BAR, p)
    assert m.rows == ((1,), (2,), (0,))
    k4 = build_graph(4, [(a, b) for a in range(1, 5) for b in range(a + 1, 5)])
    assert biadjacency(k4, CoBipartition((1, 2, 3, 4), ())).col_count == 0
    g, q = cg(generate_pattern("ZA"))
    assert biadjacency(g, q) == generate_pattern("ZA")
    with pytest.raises(InputError):
        biadjacency(C6BAR, CoBipartition((1, 2), (3, 4, 5, 6)))


def test_cg_identity():
    g, p = cg(BinaryMatrix.from_dense([[1, 0], [0, 1]]))
    assert g.sorted_edges() == [(1, 2), (1, 3), (2, 4), (3, 4)]
    assert p == CoBipartition((1, 2), (3, 4))


@given(matrices())
def test_cg_round_trips(m):
    g, p = cg(m)
    assert biadjacency(g, p) == m
    assert is_isomorphic(g, cg(transpose(m))[0])


@given(graphs(max_n=7))
def test_cg_of_biadjacency_is_isomorphic(g):
    p = cobipartite_partition(g)
    if p:
        assert is_isomorphic(cg(biadjacency(g, p))[0], g)


def test_generate_gs_examples():
    assert len(generate_gs("CG_MIkStar", 3)) == 7
    co = generate_gs("CG_coMIkStar", 3)
    assert is_isomorphic(co, add_universal_vertex(C6BAR))
    assert len(generate_gs("CG_ZA")) == 8
    with pytest.raises(InputError):
        generate_gs("CG_MIkStar", 2)
    with pytest.raises(InputError):
        generate_gs("CG_nope")


def test_recognize_examples():
    v = recognize(generate_gs("CG_ZA"))
    assert not v.semi_transitive
    assert v.certificate.family == "CG(ZA)"
    assert v.certificate.vertices == tuple(range(1, 9))
    v = recognize(C6BAR)
    assert v.semi_transitive and find_violation(v.witness) is None
    assert not recognize(generate_gs("CG_MIkStar", 3)).semi_transitive
    with pytest.raises(InputError, match="odd cycle"):
        recognize(cycle_graph(5))


def test_witness_routes():
    g, p = cg(PERM3)
    o, note = witness_orientation(g, p)
    assert note.startswith("case-1") and find_violation(o) is None
    m = BinaryMatrix.from_dense([[1, 1, 0], [0, 1, 0], [0, 0, 0]])
    g, p = cg(m)
    o, note = witness_orientation(g, p)
    assert note == "case-2" and find_violation(o) is None


def test_witness_case_three():
    # an all-1 row and an all-1 column: the all-1 row vertex is universal
    m = BinaryMatrix.from_dense([[1, 1, 1], [1, 0, 0], [1, 1, 0], [1, 0, 1]])
    g, p = cg(m)
    o, note = witness_orientation(g, p)
    assert note == "case-3" and find_violation(o) is None
    assert all((1, u) in o.arcs for u in g.adj[1])


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_decision_is_partition_invariant(g):
    if not cobipartite_partition(g):
        return
    answers = set()
    for p in all_cobipartitions(g):
        v = recognize(g, partition=p)
        answers.add(v.semi_transitive)
        if v.semi_transitive:
            assert v.witness is not None and find_violation(v.witness) is None
    assert len(answers) == 1


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_recognize_matches_oracle(m):
    g, _ = cg(m)
    v = recognize(g)
    assert v.semi_transitive == (search_semi_transitive(g) is not None)
    if v.certificate is not None:
        assert validate_certificate(g, v.certificate)
        h = induced_subgraph(g, v.certificate.vertices)
        assert not recognize(h).semi_transitive


@settings(max_examples=40, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_hereditary(m):
    g, _ = cg(m)
    if not recognize(g, witness=False).semi_transitive:
        return
    for v in g.order:
        assert recognize(g.remove_vertex(v), witness=False).semi_transitive


def test_certificate_labels_by_isomorphism():
    zc = generate_pattern("ZC")
    g, p = cg(zc)
    cert = extract_certificate(g, p, ConfigHit(PatternId("ZC"), (0, 1, 2), (0, 1, 2, 3, 4)))
    assert cert.family == "CG(ZB)" and len(cert.vertices) == 8
    g, p = cg(generate_pattern("MIkStar", 3))
    cert = extract_certificate(g, p, ConfigHit(PatternId("MIkStar", 3), (0, 1, 2), (0, 1, 2, 3)))
    assert cert.family == "CG(MIkStar)" and cert.k == 3 and len(cert.vertices) == 7


@pytest.mark.parametrize("member, k", [(m, k) for m in GS_MEMBERS
                                       for k in ((3, 4) if m.endswith("MIkStar") else (None,))])
def test_forbidden_members_are_minimal(member, k):
    g = generate_gs(member, k)
    v = recognize(g)
    assert not v.semi_transitive and validate_certificate(g, v.certificate)
    for x in g.order:
        w = recognize(g.remove_vertex(x))
        assert w.semi_transitive and find_violation(w.witness) is None


def test_permutation_examples():
    ok, cert = is_cobipartite_permutation(C6BAR)
    assert not ok and cert == Certificate(cert.vertices, "CoC2k", 3)
    assert is_cobipartite_permutation(C6BAR.remove_vertex(6)) == (True, None)
    ok, cert = is_cobipartite_permutation(generate_family("G1"))
    assert not ok and cert.family == "G1"
    assert validate_certificate(generate_family("G1"), cert)


def test_complement_of_cobipartite_is_bipartite():
    p = cobipartite_partition(C6BAR)
    co = complement(C6BAR)
    for side in (p.side_x, p.side_y):
        assert not any(co.has_edge(a, b) for a in side for b in side if a < b)
