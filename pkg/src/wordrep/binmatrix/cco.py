"""Circularly compatible ones: decision, biorder search and the monotone
circular biorder check."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from ..errors import BudgetError, InputError, InternalError
from .config import ConfigHit, find_fcco, find_mik_star
from .matrix import (BinaryMatrix, Biorder, circular_endpoints, is_circular_interval,
                     transpose)
from .ones import circular_ones_order

DEFAULT_CCO_CAP = 7
DEFAULT_CCO_BUDGET = 5_000_000
# F_CCO search is polynomial but of high degree; skip it for evidence beyond this
EVIDENCE_COL_CAP = 24


def difference_rows(rows: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    """Rows plus every nonempty proper difference s - r of intersecting rows.
    Disjoint pairs give s - r == s and are skipped."""
    by_col: dict[int, list[int]] = defaultdict(list)
    for i, r in enumerate(rows):
        for c in r:
            by_col[c].append(i)
    out = set(rows)
    for i, r in enumerate(rows):
        seen = {i}
        for c in r:
            for j in by_col[c]:
                if j in seen:
                    continue
                seen.add(j)
                s = rows[j]
                d1, d2 = r - s, s - r
                if d1:
                    out.add(frozenset(d1))
                if d2:
                    out.add(frozenset(d2))
    return sorted(out, key=sorted)


def dcircular_order(m: BinaryMatrix) -> list[int] | None:
    """A column order under which every row and every row difference is a
    circular interval, or None."""
    return circular_ones_order(m.col_count, difference_rows(list(m.row_sets)))


def is_dcircular_order(m: BinaryMatrix, col_order: Sequence[int]) -> bool:
    pos = {c: i for i, c in enumerate(col_order)}
    n = m.col_count
    rs = m.row_sets
    return (all(is_circular_interval(r, pos, n) for r in rs)
            and all(is_circular_interval(s - r, pos, n) for r in rs for s in rs))


# --- monotone circular biorders -------------------------------------------------

def _descents_cyclic(seq: Sequence[int]) -> int:
    if len(seq) <= 1:
        return 0
    return sum(1 for i in range(len(seq)) if seq[i] > seq[(i + 1) % len(seq)])


def check_monotone_circular(m: BinaryMatrix, b: Biorder) -> tuple[bool, str | None]:
    """(True, None) if b is a monotone circular biorder of m, else (False, reason)."""
    if any(m.is_trivial_row(r) for r in range(m.row_count)):
        raise InputError("monotone circular biorders are defined for matrices without trivial rows")
    try:
        b = Biorder.build(m, b.row_order, b.col_order)
    except InputError as exc:
        return False, f"not a circular-ones order: {exc}"
    n = m.col_count
    pos = {c: i for i, c in enumerate(b.col_order)}
    rows = list(b.row_order)
    if not rows:
        return True, None
    d = [pos[b.endpoints[r][0]] for r in rows]
    e = [pos[b.endpoints[r][1]] for r in rows]
    f = [b.unwrapped[r] for r in rows]
    if any(d[i] > d[i + 1] for i in range(len(d) - 1)):
        return False, "(i) left endpoints are not monotone"
    # f lives in the doubled column order, where it must be nondecreasing
    if any(f[i] > f[i + 1] for i in range(len(f) - 1)):
        return False, "(ii) unwrapped right endpoints are not monotone"
    if not (f[0] == e[0] + n or (f[0] == e[0] and f[-1] <= e[0] + n)):
        return False, "(iii) endpoint condition fails"
    return True, None


def _candidate_row_orders(m: BinaryMatrix, col_order: Sequence[int], limit: int):
    """Row orders with monotone left endpoints: sorted by d, ties permuted
    (all tie permutations while their product stays under `limit`)."""
    pos = {c: i for i, c in enumerate(col_order)}
    n = m.col_count
    info = []
    for r in range(m.row_count):
        de = circular_endpoints(m.row_sets[r], col_order)
        if de is None:
            return
        d, e = pos[de[0]], pos[de[1]]
        info.append((d, e if d <= e else e + n, r))
    info.sort()
    groups: list[list[int]] = []
    last = None
    for d, f, r in info:
        if d != last:
            groups.append([])
            last = d
        groups[-1].append(r)
    yield [r for g in groups for r in g]
    total = 1
    for g in groups:
        for i in range(2, len(g) + 1):
            total *= i
    if total <= 1 or total > limit:
        return

    def expand(i, acc):
        if i == len(groups):
            yield acc
            return
        for p in permutations(groups[i]):
            yield from expand(i + 1, acc + list(p))

    yield from expand(0, [])


def find_monotone_circular_biorder(m: BinaryMatrix, budget: int = DEFAULT_CCO_BUDGET,
                                   exhaustive_cap: int = DEFAULT_CCO_CAP) -> Biorder | None:
    """A monotone circular biorder of m (no trivial rows), or None.

    Rotations and reflections of a D-circular order are tried first; small
    matrices then fall back to enumerating every column order.  None is
    authoritative only when the exhaustive phase ran.
    """
    if any(m.is_trivial_row(r) for r in range(m.row_count)):
        raise InputError("matrix has trivial rows")
    n = m.col_count
    steps = 0

    def attempt(order):
        nonlocal steps
        for rows in _candidate_row_orders(m, order, limit=720):
            steps += 1
            if steps > budget:
                raise BudgetError(f"monotone circular search exceeded {budget} steps")
            b = Biorder.build(m, rows, order)
            if check_monotone_circular(m, b)[0]:
                return b
        return None

    base = dcircular_order(m)
    if base is None:
        return None
    for seq in (base, base[::-1]):
        for s in range(max(n, 1)):
            b = attempt(seq[s:] + seq[:s])
            if b is not None:
                return b
    if n > exhaustive_cap:
        raise BudgetError(f"{n} columns exceed the exhaustive cap {exhaustive_cap}")

    def tick():
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetError(f"monotone circular search exceeded {budget} steps")

    for order in _dcircular_orders(n, m.row_sets, tick):
        for s in range(n):
            b = attempt(order[s:] + order[:s])
            if b is not None:
                return b
    return None


# --- circularly compatible ones biorders ---------------------------------------

def check_cco_biorder(m: BinaryMatrix, b: Biorder) -> tuple[bool, str | None]:
    cpos = {c: i for i, c in enumerate(b.col_order)}
    rpos = {r: i for i, r in enumerate(b.row_order)}
    if not all(is_circular_interval(r, cpos, m.col_count) for r in m.row_sets):
        return False, "(i) a row is not a circular interval"
    if not all(is_circular_interval(c, rpos, m.row_count) for c in m.col_sets):
        return False, "(ii) a column is not a circular interval"
    nontrivial = [r for r in b.row_order if not m.is_trivial_row(r)]
    ends = [circular_endpoints(m.row_sets[r], b.col_order) for r in nontrivial]
    if _descents_cyclic([cpos[d] for d, _ in ends]) > 1:
        return False, "(iii) left endpoints are not circularly monotone"
    if _descents_cyclic([cpos[e] for _, e in ends]) > 1:
        return False, "(iii) right endpoints are not circularly monotone"
    return True, None


def _dcircular_orders(col_count: int, rows: Sequence[frozenset[int]], tick):
    """Every D-circular column order starting with column 0.

    Orders are grown one column at a time; a prefix survives while each row
    and each row difference, restricted to the prefix, switches between
    members and non-members at most twice.
    """
    if col_count == 0:
        yield []
        return
    sets = [s for s in difference_rows(list(rows)) if 0 < len(s) < col_count]
    traces = [[int(0 in s)] for s in sets]
    order = [0]
    rest = set(range(1, col_count))

    def ok(t):
        return sum(1 for i in range(len(t) - 1) if t[i] != t[i + 1]) <= 2

    def grow():
        tick()
        if not rest:
            yield list(order)
            return
        for c in sorted(rest):
            for t, s in zip(traces, sets):
                t.append(int(c in s))
            if all(ok(t) for t in traces):
                order.append(c)
                rest.discard(c)
                yield from grow()
                rest.add(c)
                order.pop()
            for t in traces:
                t.pop()

    yield from grow()


def search_cco_biorder(m: BinaryMatrix, budget: int = DEFAULT_CCO_BUDGET,
                       cap: int = DEFAULT_CCO_CAP) -> Biorder | None:
    """Exhaustive search for a circularly compatible ones biorder whose two
    orders are also D-circular orders of m and of its transpose.

    Both orders start with index 0; every condition is invariant under
    rotating either order.
    """
    R, C = m.row_count, m.col_count
    if R > cap or C > cap:
        raise BudgetError(f"{R}x{C} exceeds the exhaustive cap {cap}")
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetError(f"CCO biorder search exceeded {budget} nodes")

    row_orders = None
    for corder in _dcircular_orders(C, m.row_sets, tick):
        if row_orders is None:
            row_orders = list(_dcircular_orders(R, m.col_sets, tick))
            if not row_orders:
                return None
        for rorder in row_orders:
            tick()
            b = Biorder.build(m, rorder, corder)
            if check_cco_biorder(m, b)[0]:
                return b
    return None


# --- decision --------------------------------------------------------------------

@dataclass
class CCOResult:
    decision: bool
    row_order: list[int] | None = None   # D-circular order of the transpose
    col_order: list[int] | None = None   # D-circular order of m
    failure: str | None = None           # 'rows-circular', 'cols-circular', 'forbidden', 'dcircular'
    hit: ConfigHit | None = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.decision


def is_cco(m: BinaryMatrix, evidence: bool = True, mik_cap: int | None = None) -> CCOResult:
    """Decide the circularly compatible ones property.

    The decision is the doubly D-circular test (rows plus pairwise row
    differences have circular ones, for m and for its transpose).  On a
    negative answer the evidence is a failed circular-ones test, or a
    forbidden configuration when one can be located.  `mik_cap` bounds the
    parameter of the infinite family searched for evidence (default: every
    k that fits in m).
    """
    col_order = dcircular_order(m)
    row_order = dcircular_order(transpose(m)) if col_order is not None else None
    if col_order is not None and row_order is not None:
        return CCOResult(True, row_order=row_order, col_order=col_order)
    res = CCOResult(False, failure="dcircular")
    if not evidence:
        return res
    if circular_ones_order(m.col_count, m.row_sets) is None:
        res.failure = "rows-circular"
    elif circular_ones_order(m.row_count, m.col_sets) is None:
        res.failure = "cols-circular"
    full_cap = min(m.row_count, m.col_count) + 1
    cap = full_cap if mik_cap is None else min(mik_cap, full_cap)
    if max(m.row_count, m.col_count) <= EVIDENCE_COL_CAP:
        hit = find_fcco(m)
        if hit is None:
            hit = find_mik_star(m, cap)
        if hit is not None:
            res.hit = hit
            if res.failure == "dcircular":
                res.failure = "forbidden"
        elif cap == full_cap:
            raise InternalError("matrix lacks circularly compatible ones but contains no "
                                "forbidden configuration")
        else:
            res.notes.append(f"no forbidden configuration with k < {cap}")
    else:
        res.notes.append("forbidden-configuration search skipped (matrix too large)")
    return res


def is_cco_forbidden(m: BinaryMatrix) -> bool:
    """Circular ones for rows and columns and no finite forbidden configuration."""
    return (circular_ones_order(m.col_count, m.row_sets) is not None
            and circular_ones_order(m.row_count, m.col_sets) is not None
            and find_fcco(m) is None)
