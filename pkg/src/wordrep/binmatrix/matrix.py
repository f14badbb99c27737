"""Sparse 0/1 matrices, biorders, named patterns and binary bracelets.

Rows and columns are 0-based internally; the text format is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from ..errors import InputError


@dataclass(frozen=True)
class BinaryMatrix:
    row_count: int
    col_count: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.row_count:
            raise InputError(f"expected {self.row_count} rows, got {len(self.rows)}")
        for i, r in enumerate(self.rows):
            if any(not 0 <= c < self.col_count for c in r):
                raise InputError(f"row {i + 1} has a column index outside 1..{self.col_count}")
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                raise InputError(f"row {i + 1} is not strictly sorted")

    @classmethod
    def from_sets(cls, col_count: int, rows: Iterable[Iterable[int]]) -> BinaryMatrix:
        rs = tuple(tuple(sorted(set(r))) for r in rows)
        return cls(len(rs), col_count, rs)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], col_count: int | None = None) -> BinaryMatrix:
        if col_count is None:
            col_count = len(dense[0]) if dense else 0
        return cls.from_sets(col_count, ([j for j, x in enumerate(row) if x] for row in dense))

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.col_count for _ in range(self.row_count)]
        for i, r in enumerate(self.rows):
            for j in r:
                out[i][j] = 1
        return out

    @cached_property
    def row_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rows)

    @cached_property
    def col_sets(self) -> tuple[frozenset[int], ...]:
        cols: list[set[int]] = [set() for _ in range(self.col_count)]
        for i, r in enumerate(self.rows):
            for j in r:
                cols[j].add(i)
        return tuple(frozenset(c) for c in cols)

    @property
    def ones(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return self.row_count + self.col_count + self.ones

    def entry(self, i: int, j: int) -> int:
        return int(j in self.row_sets[i])

    def is_trivial_row(self, i: int) -> bool:
        return len(self.rows[i]) in (0, self.col_count)

    def is_trivial_col(self, j: int) -> bool:
        return len(self.col_sets[j]) in (0, self.row_count)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> BinaryMatrix:
        pos = {c: k for k, c in enumerate(cols)}
        return BinaryMatrix.from_sets(len(cols), ([pos[c] for c in self.rows[r] if c in pos] for r in rows))

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.to_dense())


def transpose(m: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix.from_sets(m.row_count, m.col_sets)


def row_complement(m: BinaryMatrix, mask: Sequence[int] | str | None = None) -> BinaryMatrix:
    """Complement the rows flagged in `mask` (all rows when mask is None)."""
    if mask is None:
        mask = [1] * m.row_count
    if isinstance(mask, str):
        mask = [int(ch) for ch in mask]
    if len(mask) != m.row_count:
        raise InputError(f"mask length {len(mask)} != row count {m.row_count}")
    full = range(m.col_count)
    rows = []
    for flip, r in zip(mask, m.row_sets):
        rows.append([c for c in full if c not in r] if flip else sorted(r))
    return BinaryMatrix.from_sets(m.col_count, rows)


def add_empty_column(m: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix(m.row_count, m.col_count + 1, m.rows)


def delete_column(m: BinaryMatrix, j: int) -> BinaryMatrix:
    keep = [c for c in range(m.col_count) if c != j]
    return m.submatrix(range(m.row_count), keep)


@lru_cache(maxsize=None)
def _column_perm_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each column permutation, the image of every row bitmask."""
    tables = []
    for perm in permutations(range(n)):
        tables.append(tuple(sum(1 << perm[c] for c in range(n) if mask >> c & 1)
                            for mask in range(1 << n)))
    return tuple(tables)


def canonical_form(m: BinaryMatrix) -> tuple:
    """Invariant under row and column permutations (exhaustive over column
    orders; meant for small matrices)."""
    masks = [sum(1 << c for c in r) for r in m.rows]
    if m.col_count <= 6:
        best = min(tuple(sorted(t[x] for x in masks)) for t in _column_perm_tables(m.col_count))
    else:
        best = min(tuple(sorted(sum(1 << perm[c] for c in r) for r in m.rows))
                   for perm in permutations(range(m.col_count)))
    return (m.row_count, m.col_count, best)


# --- circular intervals ------------------------------------------------------

def is_linear_interval(s: Iterable[int], pos: dict[int, int]) -> bool:
    ps = [pos[x] for x in s]
    return not ps or max(ps) - min(ps) + 1 == len(ps)


def is_circular_interval(s: Iterable[int], pos: dict[int, int], n: int) -> bool:
    ps = {pos[x] for x in s}
    if len(ps) in (0, n):
        return True
    starts = sum(1 for p in ps if (p - 1) % n not in ps)
    return starts == 1


def circular_endpoints(s: Iterable[int], order: Sequence[int]) -> tuple[int, int] | None:
    """(d, e) with s == [d, e] circular interval of `order`; None if s is
    empty, full, or not a circular interval."""
    n = len(order)
    members = set(s)
    if not members or len(members) == n:
        return None
    flags = [order[i] in members for i in range(n)]
    starts = [i for i in range(n) if flags[i] and not flags[i - 1]]
    if len(starts) != 1:
        return None
    d = starts[0]
    e = (d + len(members) - 1) % n
    return order[d], order[e]


# --- biorders ----------------------------------------------------------------

@dataclass(frozen=True)
class Biorder:
    """Row order, column order and the circular-interval endpoints (d, e) of
    every nontrivial row.  `unwrapped[r]` is f_r as a position in the doubled
    column order: pos(e) when d <= e, else pos(e) + n."""

    row_order: tuple[int, ...]
    col_order: tuple[int, ...]
    endpoints: dict[int, tuple[int, int]] = field(default_factory=dict, compare=False)
    unwrapped: dict[int, int] = field(default_factory=dict, compare=False)

    @classmethod
    def build(cls, m: BinaryMatrix, row_order: Sequence[int], col_order: Sequence[int]) -> Biorder:
        if sorted(row_order) != list(range(m.row_count)):
            raise InputError("row order is not a permutation of the rows")
        if sorted(col_order) != list(range(m.col_count)):
            raise InputError("column order is not a permutation of the columns")
        pos = {c: i for i, c in enumerate(col_order)}
        n = m.col_count
        endpoints, unwrapped = {}, {}
        for r in range(m.row_count):
            if m.is_trivial_row(r):
                continue
            de = circular_endpoints(m.row_sets[r], col_order)
            if de is None:
                raise InputError(f"row {r + 1} is not a circular interval of the column order")
            d, e = de
            endpoints[r] = de
            unwrapped[r] = pos[e] if pos[d] <= pos[e] else pos[e] + n
        return cls(tuple(row_order), tuple(col_order), endpoints, unwrapped)

    def transposed(self, m: BinaryMatrix) -> Biorder:
        """The same pair of orders read as a biorder of the transpose of m."""
        return Biorder.build(transpose(m), self.col_order, self.row_order)


# --- named patterns ------------------------------------------------------------

_FIXED_PATTERNS = {
    "ZA": [[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 0, 0]],
    "ZB": [[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [1, 0, 1, 0]],
    "ZC": [[1, 1, 1, 0, 0], [0, 1, 1, 1, 0], [0, 0, 1, 0, 0]],
    "ZD": [[1, 0, 0, 1], [1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 0, 0]],
}

BASE_PATTERNS = ("ZA", "ZB", "ZC", "ZD", "coZA", "coZC", "MIk", "MIkStar", "coMIkStar")


@dataclass(frozen=True)
class PatternId:
    name: str
    k: int | None = None
    transposed: bool = False

    def __post_init__(self):
        if self.name not in BASE_PATTERNS:
            raise InputError(f"unknown pattern {self.name!r}")
        if self.name.startswith(("MI", "coMI")):
            if self.k is None or self.k < 3:
                raise InputError(f"{self.name} needs k >= 3")

    def label(self) -> str:
        s = self.name if self.k is None else f"{self.name}({self.k})"
        return s + "^T" if self.transposed else s


def mik(k: int) -> BinaryMatrix:
    """k x k: row i covers columns i, i+1; the last row covers 1 and k."""
    if k < 3:
        raise InputError("MI_k needs k >= 3")
    rows = [[i, i + 1] for i in range(k - 1)] + [[0, k - 1]]
    return BinaryMatrix.from_sets(k, rows)


def generate_pattern(pid: PatternId | str, k: int | None = None, transposed: bool = False) -> BinaryMatrix:
    if isinstance(pid, str):
        pid = PatternId(pid, k, transposed)
    name = pid.name
    if name in _FIXED_PATTERNS:
        m = BinaryMatrix.from_dense(_FIXED_PATTERNS[name])
    elif name in ("coZA", "coZC"):
        m = row_complement(BinaryMatrix.from_dense(_FIXED_PATTERNS[name[2:]]))
    elif name == "MIk":
        m = mik(pid.k)
    elif name == "MIkStar":
        m = add_empty_column(mik(pid.k))
    else:
        m = row_complement(add_empty_column(mik(pid.k)))
    return transpose(m) if pid.transposed else m


def fcco_members() -> list[PatternId]:
    """The twelve finite forbidden matrices: six bases and their transposes."""
    bases = ["ZA", "ZB", "ZC", "ZD", "coZA", "coZC"]
    return [PatternId(b) for b in bases] + [PatternId(b, transposed=True) for b in bases]


# --- bracelets ---------------------------------------------------------------

def bracelet_orbit(s: str) -> set[str]:
    out = set()
    for t in (s, s[::-1]):
        for i in range(len(t)):
            out.add(t[i:] + t[:i])
    return out


def bracelets(k: int) -> list[str]:
    """Binary bracelets of length k (orbit minima under shift and reversal).

    For k == 3 only 000 and 111 are returned: 001 and 011 are excluded from
    the length-3 family of row-complement masks.
    """
    if k < 3:
        raise InputError("bracelets need k >= 3")
    if k == 3:
        return ["000", "111"]
    out = []
    for bits in product("01", repeat=k):
        s = "".join(bits)
        if s == min(bracelet_orbit(s)):
            out.append(s)
    return out
