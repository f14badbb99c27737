"""Configuration (submatrix up to row/column permutation) search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from ..errors import InternalError
from ..graph import Graph, find_induced_cycle
from .matrix import BinaryMatrix, PatternId, fcco_members, generate_pattern, row_complement, transpose

DEFAULT_MIK_CAP = 8


@dataclass(frozen=True)
class ConfigHit:
    """`m.submatrix(rows, cols)` equals the pattern exactly, in this order."""

    pattern: PatternId
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def validate(self, m: BinaryMatrix) -> bool:
        return m.submatrix(self.rows, self.cols) == generate_pattern(self.pattern)


def contains_configuration(m: BinaryMatrix, pattern: BinaryMatrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First (rows, cols), in pattern order, whose submatrix equals `pattern`.

    Column subsets are tried in lexicographic order, then column
    arrangements, then the smallest matching row for each pattern row.
    """
    p, q = pattern.row_count, pattern.col_count
    if p > m.row_count or q > m.col_count:
        return None
    want_rows = sorted(len(r) for r in pattern.rows)
    prow = [sum(1 << j for j in r) for r in pattern.rows]
    for cols in combinations(range(m.col_count), q):
        colset = set(cols)
        restricted = [[c for c in r if c in colset] for r in m.rows]
        # cheap multiset filter on row sums before trying arrangements
        sums = sorted((len(x) for x in restricted), reverse=True)
        if any(s < w for s, w in zip(sums, sorted(want_rows, reverse=True))):
            continue
        for arr in permutations(cols):
            pos = {c: k for k, c in enumerate(arr)}
            masks = [sum(1 << pos[c] for c in x) for x in restricted]
            used: set[int] = set()
            chosen = []
            for target in prow:
                hit = next((i for i, mk in enumerate(masks) if mk == target and i not in used), None)
                if hit is None:
                    break
                used.add(hit)
                chosen.append(hit)
            else:
                out = (tuple(chosen), tuple(arr))
                sub = m.submatrix(*out)
                if sub != pattern:
                    raise InternalError("configuration search returned a mismatching submatrix")
                return out
    return None


def find_fcco(m: BinaryMatrix) -> ConfigHit | None:
    """First member of the finite forbidden set occurring in m."""
    for pid in fcco_members():
        loc = contains_configuration(m, generate_pattern(pid))
        if loc is not None:
            return ConfigHit(pid, *loc)
    return None


def _incidence_graph(a: BinaryMatrix, skip_col: int) -> Graph:
    """Rows are vertices 1..R, columns R+1..R+C; rows with a 1 in skip_col and
    skip_col itself are left out."""
    R = a.row_count
    verts, edges = [], []
    for i, r in enumerate(a.rows):
        if skip_col in r:
            continue
        verts.append(i + 1)
        edges.extend((i + 1, R + 1 + c) for c in r if c != skip_col)
    verts.extend(R + 1 + c for c in range(a.col_count) if c != skip_col)
    return Graph.from_edges(verts, edges)


def _find_mik_star_in(a: BinaryMatrix, k: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    R = a.row_count
    for z in range(a.col_count):
        g = _incidence_graph(a, z)
        cyc = find_induced_cycle(g, 2 * k)
        if cyc is None:
            continue
        # rotate to start at a column vertex: c1 r1 c2 r2 ... ck rk
        if cyc[0] <= R:
            cyc = cyc[1:] + cyc[:1]
        cols = [v - R - 1 for v in cyc[0::2]]
        rows = [v - 1 for v in cyc[1::2]]
        return tuple(rows), tuple(cols + [z])
    return None


def find_mik_star(m: BinaryMatrix, cap: int = DEFAULT_MIK_CAP) -> ConfigHit | None:
    """A configuration equal to MI*_k, its row complement, or a transpose of
    either, with k + 1 <= cap.  None means nothing was found within the cap.
    """
    mt = transpose(m)
    variants = [
        (m, "MIkStar", False),
        (row_complement(m), "coMIkStar", False),
        (mt, "MIkStar", True),
        (row_complement(mt), "coMIkStar", True),
    ]
    for k in range(3, cap):
        for a, name, flipped in variants:
            if a.row_count < k or a.col_count < k + 1:
                continue
            loc = _find_mik_star_in(a, k)
            if loc is None:
                continue
            rows, cols = loc
            hit = ConfigHit(PatternId(name, k, flipped), cols, rows) if flipped \
                else ConfigHit(PatternId(name, k), rows, cols)
            if not hit.validate(m):
                raise InternalError(f"MI*_k search produced an invalid hit {hit}")
            return hit
    return None


def find_forbidden(m: BinaryMatrix, mik_cap: int = DEFAULT_MIK_CAP) -> ConfigHit | None:
    hit = find_fcco(m)
    if hit is None:
        hit = find_mik_star(m, mik_cap)
    return hit
