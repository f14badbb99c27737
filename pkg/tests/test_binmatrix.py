from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import matrices
from wordrep.binmatrix import (BinaryMatrix, Biorder, PatternId, add_empty_column, bracelet_orbit,
                               bracelets, canonical_form, check_cco_biorder,
                               check_monotone_circular, contains_configuration, delete_column,
                               fcco_members, find_fcco, find_forbidden, find_mik_star,
                               generate_pattern, has_circular_ones, has_consecutive_ones, is_cco,
                               mik, row_complement, search_cco_biorder, transpose)
from wordrep.binmatrix.matrix import is_circular_interval, is_linear_interval
from wordrep.errors import BudgetError, InputError
from wordrep.graph import add_universal_vertex, cobipartite_partition, generate_family, is_isomorphic
from wordrep.recognizer import biadjacency, cg, generate_gs
from wordrep.sweeps import brute_circular_ones, brute_dcircular

ZA = generate_pattern("ZA")
ZD = generate_pattern("ZD")
PERM3 = BinaryMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def brute_consecutive_ones(m):
    for order in permutations(range(m.col_count)):
        pos = {c: i for i, c in enumerate(order)}
        if all(is_linear_interval(r, pos) for r in m.row_sets):
            return True
    return False


def test_matrix_validation():
    with pytest.raises(InputError):
        BinaryMatrix(1, 2, ((0, 5),))
    with pytest.raises(InputError):
        BinaryMatrix(1, 3, ((2, 1),))


def test_row_complement_of_za():
    co = row_complement(ZA, "1111")
    assert co.col_sets[3] == frozenset(range(4))
    assert co == generate_pattern("coZA")


def test_add_empty_column_gives_mik_star():
    assert add_empty_column(mik(3)) == generate_pattern("MIkStar", 3)
    assert generate_pattern("MIkStar", 3).rows == ((0, 1), (1, 2), (0, 2))


@given(matrices())
def test_transpose_involution(m):
    assert transpose(transpose(m)) == m


@given(matrices())
def test_canonical_form_invariance(m):
    rows = list(reversed(range(m.row_count)))
    cols = list(reversed(range(m.col_count)))
    assert canonical_form(m.submatrix(rows, cols)) == canonical_form(m)


def test_patterns():
    assert ZA.to_dense() == [[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 0, 0]]
    assert len(fcco_members()) == 12
    cg_co_za, _ = cg(generate_pattern("coZA"))
    assert is_isomorphic(cg_co_za, add_universal_vertex(generate_family("G1")))
    with pytest.raises(InputError):
        PatternId("MIk", 2)
    with pytest.raises(InputError):
        PatternId("nope")


def test_bracelets():
    assert bracelets(3) == ["000", "111"]
    assert bracelets(4) == ["0000", "0001", "0011", "0101", "0111", "1111"]
    for k in (5, 6, 7):
        for s in bracelets(k):
            assert s == min(bracelet_orbit(s))
    with pytest.raises(InputError):
        bracelets(2)


def test_consecutive_ones_examples():
    assert has_consecutive_ones(PERM3) is not None
    order = has_consecutive_ones(ZA)
    pos = {c: i for i, c in enumerate(order)}
    assert all(is_linear_interval(r, pos) for r in ZA.row_sets)
    assert has_consecutive_ones(mik(3)) is None


def test_circular_ones_examples():
    assert has_circular_ones(generate_pattern("MIkStar", 3)) is None
    assert has_circular_ones(mik(3)) is not None
    two = BinaryMatrix.from_dense([[1, 0], [0, 1], [1, 1]])
    assert has_circular_ones(two) is not None


@settings(max_examples=200)
@given(matrices(max_rows=5, max_cols=5))
def test_ones_orders_agree_with_brute_force(m):
    c1 = has_consecutive_ones(m)
    assert (c1 is not None) == brute_consecutive_ones(m)
    if c1 is not None:
        pos = {c: i for i, c in enumerate(c1)}
        assert all(is_linear_interval(r, pos) for r in m.row_sets)
    co = has_circular_ones(m)
    assert (co is not None) == brute_circular_ones(m)
    if co is not None:
        pos = {c: i for i, c in enumerate(co)}
        assert all(is_circular_interval(r, pos, m.col_count) for r in m.row_sets)


def test_contains_configuration_examples():
    assert contains_configuration(ZA, ZA) == ((0, 1, 2, 3), (0, 1, 2, 3))
    g = generate_gs("CG_ZA")
    for v in g.order:
        h = g.remove_vertex(v)
        m = biadjacency(h, cobipartite_partition(h))
        assert contains_configuration(m, ZA) is None
        assert contains_configuration(transpose(m), ZA) is None
    assert contains_configuration(ZA, generate_pattern("ZC")) is None


def test_find_mik_star_examples():
    hit = find_mik_star(generate_pattern("MIkStar", 4))
    assert hit is not None and hit.pattern.k == 4
    hit = find_mik_star(row_complement(generate_pattern("MIkStar", 3), "111"))
    assert hit is not None and hit.pattern.name == "coMIkStar"
    assert find_mik_star(ZA) is None


def test_find_fcco_hits_validate():
    for pid in fcco_members():
        m = generate_pattern(pid)
        hit = find_fcco(m)
        assert hit is not None and hit.validate(m)


def test_monotone_circular_examples():
    single = BinaryMatrix.from_dense([[1, 1, 0]])
    assert check_monotone_circular(single, Biorder.build(single, [0], [0, 1, 2])) == (True, None)
    assert check_monotone_circular(PERM3, Biorder.build(PERM3, [0, 1, 2], [0, 1, 2]))[0]
    ok, why = check_monotone_circular(ZD, Biorder.build(ZD, range(4), range(4)))
    assert not ok and why.startswith("(")
    with pytest.raises(InputError):
        full = BinaryMatrix.from_dense([[1, 1], [1, 0]])
        check_monotone_circular(full, Biorder.build(full, range(2), range(2)))


def test_is_cco_examples():
    assert is_cco(BinaryMatrix.from_dense([[1]]))
    res = is_cco(ZA)
    assert not res and res.hit is not None and res.hit.pattern.name == "ZA"
    assert res.hit.validate(ZA)
    assert is_cco(PERM3)


def test_search_cco_biorder_examples():
    b = search_cco_biorder(BinaryMatrix.from_dense([[1]]))
    assert b.row_order == (0,) and b.col_order == (0,)
    b = search_cco_biorder(PERM3)
    assert b is not None and check_cco_biorder(PERM3, b)[0]
    assert search_cco_biorder(ZA) is None
    with pytest.raises(BudgetError):
        search_cco_biorder(BinaryMatrix.from_sets(8, [[0]]), cap=7)


@settings(max_examples=150, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_cco_equivalences(m):
    res = is_cco(m)
    assert bool(res) == (search_cco_biorder(m) is not None)
    if not res:
        assert res.hit is not None or res.failure in ("rows-circular", "cols-circular")
        if res.hit is not None:
            assert res.hit.validate(m) or res.hit.validate(transpose(m))
    else:
        assert find_forbidden(m) is None


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=4, max_cols=4))
def test_cco_is_transpose_invariant(m):
    assert bool(is_cco(m)) == bool(is_cco(transpose(m)))


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=4, max_cols=5))
def test_dcircular_matches_brute_force(m):
    from wordrep.binmatrix import dcircular_order
    assert (dcircular_order(m) is not None) == brute_dcircular(m)


def test_delete_column():
    assert delete_column(generate_pattern("MIkStar", 3), 3) == mik(3)
