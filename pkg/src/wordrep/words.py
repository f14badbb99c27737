"""Words over vertex alphabets: alternation, representation checks and
bounded searches for uniform representants."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .errors import BudgetError, InputError, InternalError
from .graph import Graph
from .orientations import DEFAULT_BUDGET, transitive_orientation

Word = tuple[int, ...]

DEFAULT_WORD_CAP = 10
DEFAULT_KMAX = 3


def alternates(w: Sequence[int], x: int, y: int) -> bool:
    """True iff w restricted to {x, y} is xyxy... or yxyx..."""
    if x == y:
        raise InputError("alternation needs two distinct letters")
    sub = [a for a in w if a == x or a == y]
    missing = [a for a in (x, y) if a not in sub]
    if missing:
        raise InputError(f"letter(s) {missing} do not occur in the word")
    return all(sub[i] != sub[i + 1] for i in range(len(sub) - 1))


def restriction(w: Sequence[int], s: Iterable[int]) -> Word:
    keep = set(s)
    return tuple(a for a in w if a in keep)


def represents(w: Sequence[int], g: Graph) -> bool:
    """True iff the alternation relation of w is exactly the edge set of g."""
    letters = set(w)
    missing = sorted(g.vertices - letters)
    extra = sorted(letters - g.vertices)
    if missing or extra:
        raise InputError(f"alphabet mismatch: missing {missing}, extra {extra}")
    seq = list(w)
    order = g.order
    for i, x in enumerate(order):
        for y in order[i + 1:]:
            if alternates(seq, x, y) != g.has_edge(x, y):
                return False
    return True


def is_uniform(w: Sequence[int], k: int) -> bool:
    return all(c == k for c in Counter(w).values())


def _search_uniform(g: Graph, k: int, budget: int) -> tuple[Word | None, int]:
    """First k-uniform representant in search order, plus nodes used.

    The word starts with the smallest vertex (any rotation of a uniform
    representant is one).  A prefix is cut when an adjacent pair already
    fails to alternate, or when two letters are both complete and their
    alternation disagrees with adjacency.
    """
    verts = g.order
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    adj = [[idx[u] for u in g.adj[v]] for v in verts]
    adjset = [set(a) for a in adj]
    count = [0] * n
    last = [-1] * n
    word: list[int] = []
    total = n * k
    nodes = 0

    def closes_ok(x: int) -> bool:
        # x just received its k-th letter; every other complete letter y now
        # has a fixed alternation with x, and for k == 2 so does every y
        if k == 2:
            first = word.index(x)
            inside = Counter(word[first + 1:-1])
            for y in range(n):
                if y != x and y not in adjset[x] and inside[y] == 1:
                    return False
        for y in range(n):
            if y == x or count[y] != k:
                continue
            sub = [a for a in word if a == x or a == y]
            alt = all(sub[i] != sub[i + 1] for i in range(len(sub) - 1))
            if alt != (y in adjset[x]):
                return False
        return True

    def place(x: int) -> bool:
        pos = len(word)
        if count[x] > 0:
            for y in adj[x]:
                if last[y] < last[x]:
                    return False
        word.append(x)
        count[x] += 1
        last[x] = pos
        return True

    def unplace(x: int, prev_last: int) -> None:
        word.pop()
        count[x] -= 1
        last[x] = prev_last

    def rec() -> bool:
        nonlocal nodes
        if len(word) == total:
            return True
        for x in range(n):
            if count[x] == k or (not word and x != 0):
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetError(f"representant search exceeded {budget} nodes")
            prev = last[x]
            if not place(x):
                continue
            if (count[x] < k or closes_ok(x)) and rec():
                return True
            unplace(x, prev)
        return False

    if n == 0:
        return (), 0
    if rec():
        return tuple(verts[i] for i in word), nodes
    return None, nodes


def search_representant(g: Graph, k_max: int = DEFAULT_KMAX, budget: int = DEFAULT_BUDGET,
                        cap: int = DEFAULT_WORD_CAP) -> Word | None:
    """A k-uniform representant with the least k <= k_max, or None.

    None is authoritative for every k up to k_max; running out of budget
    raises BudgetError instead.
    """
    if len(g) > cap:
        raise BudgetError(f"graph has {len(g)} vertices, cap is {cap}")
    if not 1 <= k_max <= 3:
        raise InputError("k_max must be 1, 2 or 3")
    left = budget
    for k in range(1, k_max + 1):
        w, used = _search_uniform(g, k, left)
        left -= used
        if w is not None:
            if not represents(w, g) or not is_uniform(w, k):
                raise InternalError(f"search produced a non-representant {w}")
            return w
    return None


def permutational_representant(g: Graph, budget: int = DEFAULT_BUDGET) -> Word | None:
    """A concatenation of |V(g)| permutations representing g, or None.

    Such a word exists iff g has a transitive orientation: every permutation
    must order each comparable pair the same way, and one linear extension
    per vertex x (the down-set of x, then x, then the rest) puts every
    incomparable pair in both orders.
    """
    o = transitive_orientation(g, budget)
    if o is None:
        return None
    below: dict[int, set[int]] = {v: set() for v in g.vertices}
    indeg = {v: 0 for v in g.vertices}
    succ: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in o.sorted_arcs():
        below[v].add(u)
        succ[u].append(v)
        indeg[v] += 1
    topo = []
    ready = sorted(v for v in g.vertices if indeg[v] == 0)
    while ready:
        u = ready.pop(0)
        topo.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
        ready.sort()
    word: list[int] = []
    for x in g.order:
        down = [v for v in topo if v in below[x]]
        rest = [v for v in topo if v != x and v not in below[x]]
        word.extend(down + [x] + rest)
    w = tuple(word)
    if not represents(w, g) and len(g) > 0:
        raise InternalError("realizer word does not represent the graph")
    return w


def is_permutationally_representable(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return permutational_representant(g, budget) is not None
