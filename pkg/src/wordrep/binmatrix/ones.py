"""Consecutive-ones and circular-ones orders.

Consecutive ones uses overlap components: inside a component of mutually
overlapping rows the column arrangement is forced up to reversal, so it is
built by refining an ordered list of column classes one row at a time.
Component unions form a laminar family and each nested union sits inside a
single class of its parent, which fixes how the pieces are assembled.

Circular ones reduces to consecutive ones by complementing every row that has
a 1 in some chosen column.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Iterable, Sequence

from ..errors import InternalError
from .matrix import BinaryMatrix, is_circular_interval, is_linear_interval


class _Refiner:
    """Ordered classes of one overlap component, as a doubly linked list."""

    def __init__(self, first_row: frozenset[int]):
        self.members: dict[int, set[int]] = {0: set(first_row)}
        self.class_of: dict[int, int] = {c: 0 for c in first_row}
        self.prev: dict[int, int | None] = {0: None}
        self.next: dict[int, int | None] = {0: None}
        self.head = self.tail = 0
        self._ids = 1

    def _new(self, cols: Iterable[int]) -> int:
        cid = self._ids
        self._ids += 1
        self.members[cid] = set(cols)
        for c in self.members[cid]:
            self.class_of[c] = cid
        return cid

    def _insert_after(self, at: int, cid: int) -> None:
        nxt = self.next[at]
        self.prev[cid], self.next[cid] = at, nxt
        self.next[at] = cid
        if nxt is None:
            self.tail = cid
        else:
            self.prev[nxt] = cid

    def _insert_before(self, at: int, cid: int) -> None:
        prv = self.prev[at]
        self.next[cid], self.prev[cid] = at, prv
        self.prev[at] = cid
        if prv is None:
            self.head = cid
        else:
            self.next[prv] = cid

    def _split(self, cid: int, inside: list[int], inside_after: bool) -> None:
        if len(inside) == len(self.members[cid]):
            return
        self.members[cid].difference_update(inside)
        new = self._new(inside)
        if inside_after:
            self._insert_after(cid, new)
        else:
            self._insert_before(cid, new)

    def add(self, row: frozenset[int]) -> bool:
        hits: dict[int, list[int]] = defaultdict(list)
        fresh = []
        for c in row:
            cid = self.class_of.get(c)
            if cid is None:
                fresh.append(c)
            else:
                hits[cid].append(c)
        if not hits:
            return False
        links = sum(1 for cid in hits if self.next[cid] in hits)
        if links != len(hits) - 1:
            return False
        first = next(cid for cid in hits if self.prev[cid] not in hits)
        last = next(cid for cid in hits if self.next[cid] not in hits)
        full = {cid: len(cs) == len(self.members[cid]) for cid, cs in hits.items()}
        if any(not full[cid] for cid in hits if cid not in (first, last)):
            return False
        if fresh:
            if last == self.tail and (first == last or full[last]):
                self._split(first, hits[first], inside_after=True)
                self._insert_after(self.tail, self._new(fresh))
            elif first == self.head and (first == last or full[first]):
                self._split(last, hits[last], inside_after=False)
                self._insert_before(self.head, self._new(fresh))
            else:
                return False
        else:
            if first == last:
                # cannot happen for a row overlapping an already placed row
                raise InternalError("row falls inside a single class")
            self._split(first, hits[first], inside_after=True)
            self._split(last, hits[last], inside_after=False)
        return True

    def classes(self) -> list[int]:
        out = []
        cid = self.head
        while cid is not None:
            out.append(cid)
            cid = self.next[cid]
        return out


def _overlap_components(rows: list[frozenset[int]]) -> list[list[int]]:
    """Components of the overlap graph, each listed in BFS order."""
    by_col: dict[int, list[int]] = defaultdict(list)
    for i, r in enumerate(rows):
        for c in r:
            by_col[c].append(i)
    adj: list[list[int]] = [[] for _ in rows]
    sizes = [len(r) for r in rows]
    for i, r in enumerate(rows):
        shared: dict[int, int] = defaultdict(int)
        for c in r:
            for j in by_col[c]:
                if j > i:
                    shared[j] += 1
        li = sizes[i]
        for j, inter in shared.items():
            if inter < li and inter < sizes[j]:
                adj[i].append(j)
                adj[j].append(i)
    comps = []
    done = [False] * len(rows)
    for i in range(len(rows)):
        if done[i]:
            continue
        done[i] = True
        order, q = [], deque([i])
        while q:
            u = q.popleft()
            order.append(u)
            for w in adj[u]:
                if not done[w]:
                    done[w] = True
                    q.append(w)
        comps.append(order)
    return comps


def consecutive_ones_order(col_count: int, rows: Iterable[Iterable[int]]) -> list[int] | None:
    """A column order making every row contiguous, or None."""
    original = [frozenset(r) for r in rows]
    work = sorted({r for r in original if 1 < len(r) < col_count}, key=sorted)
    comps = []
    for order in _overlap_components(work):
        ref = _Refiner(work[order[0]])
        for i in order[1:]:
            if not ref.add(work[i]):
                return None
        cls = ref.classes()
        comps.append((ref, cls))
    # assemble along the containment forest of component unions
    idx = sorted(range(len(comps)), key=lambda i: (-len(comps[i][0].class_of), len(comps[i][1])))
    owner: dict[int, tuple[int, int]] = {}
    children: dict[tuple[int, int], list[int]] = defaultdict(list)
    roots = []
    for ci in idx:
        ref = comps[ci][0]
        cols = ref.class_of
        anchor = next(iter(cols))
        par = owner.get(anchor)
        if any(owner.get(c) != par for c in cols):
            raise InternalError("component union is not nested inside a single class")
        if par is None:
            roots.append(ci)
        else:
            children[par].append(ci)
        for c, cid in cols.items():
            owner[c] = (ci, cid)

    order: list[int] = []
    placed: set[int] = set()
    # explicit stack: ('comp', ci) expands a component, ('rest', ci, cid) flushes a class
    stack: list[tuple] = [("comp", ci) for ci in reversed(roots)]
    while stack:
        item = stack.pop()
        if item[0] == "comp":
            ci = item[1]
            ref, cls = comps[ci]
            for cid in reversed(cls):
                stack.append(("rest", ci, cid))
                for ch in reversed(children.get((ci, cid), [])):
                    stack.append(("comp", ch))
        else:
            _, ci, cid = item
            for c in sorted(comps[ci][0].members[cid]):
                if c not in placed:
                    placed.add(c)
                    order.append(c)
    order.extend(c for c in range(col_count) if c not in placed)
    pos = {c: i for i, c in enumerate(order)}
    if len(order) != col_count or not all(is_linear_interval(r, pos) for r in original):
        raise InternalError("consecutive-ones assembly produced an invalid order")
    return order


def circular_ones_order(col_count: int, rows: Sequence[Iterable[int]]) -> list[int] | None:
    """A column order making every row a circular interval, or None.

    Complements the rows through a minimum-degree column so that column
    becomes all-zero, then asks for consecutive ones.
    """
    rows = [frozenset(r) for r in rows]
    if col_count <= 2:
        return list(range(col_count))
    degree = [0] * col_count
    for r in rows:
        for c in r:
            degree[c] += 1
    pivot = min(range(col_count), key=lambda c: (degree[c], c))
    reduced = []
    for r in rows:
        if pivot in r:
            reduced.append(frozenset(c for c in range(col_count) if c not in r))
        else:
            reduced.append(r)
    order = consecutive_ones_order(col_count, reduced)
    if order is None:
        return None
    pos = {c: i for i, c in enumerate(order)}
    if not all(is_circular_interval(r, pos, col_count) for r in rows):
        raise InternalError("circular-ones reduction produced an invalid order")
    return order


def has_consecutive_ones(m: BinaryMatrix) -> list[int] | None:
    return consecutive_ones_order(m.col_count, m.row_sets)


def has_circular_ones(m: BinaryMatrix) -> list[int] | None:
    return circular_ones_order(m.col_count, m.row_sets)


def circular_ones_column_complemented(m: BinaryMatrix, col: int) -> BinaryMatrix:
    """Complement every row with a 1 in `col` (that column becomes all-zero)."""
    rows = [[c for c in range(m.col_count) if c not in r] if col in r else sorted(r)
            for r in m.row_sets]
    return BinaryMatrix.from_sets(m.col_count, rows)
