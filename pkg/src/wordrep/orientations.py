"""Orientations of simple graphs: semi-transitivity checking, exhaustive
orientation search, transitive orientation, and the orientation induced by a
biorder of the biadjacency matrix of a co-bipartite graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import BudgetError, InputError, InternalError
from .graph import Graph

DEFAULT_ORIENT_CAP = 12
DEFAULT_BUDGET = 2_000_000

Arc = tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    base: Graph
    arcs: frozenset[Arc]

    def __post_init__(self):
        for u, v in self.arcs:
            if (min(u, v), max(u, v)) not in self.base.edges:
                raise InputError(f"arc {u}->{v} is not an edge of the base graph")
        if len(self.arcs) != len(self.base.edges) or \
                len({(min(a), max(a)) for a in self.arcs}) != len(self.arcs):
            raise InputError("orientation must direct every edge exactly once")

    def reversed(self) -> Orientation:
        return Orientation(self.base, frozenset((v, u) for u, v in self.arcs))

    def restrict(self, s: Iterable[int]) -> Orientation:
        from .graph import induced_subgraph
        keep = frozenset(s)
        sub = induced_subgraph(self.base, keep)
        return Orientation(sub, frozenset(a for a in self.arcs if a[0] in keep and a[1] in keep))

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class Violation:
    kind: Literal["cycle", "shortcut"]
    vertices: tuple[int, ...]


def _reach_masks(n: int, out: list[int]) -> list[int] | None:
    """Descendant bitmasks (excluding self) or None when a cycle exists."""
    indeg = [0] * n
    for u in range(n):
        m = out[u]
        while m:
            low = m & -m
            indeg[low.bit_length() - 1] += 1
            m ^= low
    topo = [u for u in range(n) if indeg[u] == 0]
    i = 0
    while i < len(topo):
        u = topo[i]
        i += 1
        m = out[u]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            indeg[w] -= 1
            if indeg[w] == 0:
                topo.append(w)
            m ^= low
    if len(topo) < n:
        return None
    reach = [0] * n
    for u in reversed(topo):
        r = out[u]
        m = out[u]
        while m:
            low = m & -m
            r |= reach[low.bit_length() - 1]
            m ^= low
        reach[u] = r
    return reach


def _bits(m: int) -> Iterable[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _bfs_path(out: list[int], src: int, dst: int, allowed: int) -> list[int]:
    prev = {src: -1}
    q = deque([src])
    while q:
        u = q.popleft()
        if u == dst:
            break
        for w in _bits(out[u] & allowed):
            if w not in prev:
                prev[w] = u
                q.append(w)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def _bfs_dist(out: list[int], src: int, allowed: int) -> dict[int, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in _bits(out[u] & allowed):
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def _shortest_cycle(n: int, out: list[int], labels: tuple[int, ...]) -> tuple[int, ...]:
    best = None
    full = (1 << n) - 1
    for s in range(n):
        dist = _bfs_dist(out, s, full)
        for u, d in dist.items():
            if out[u] >> s & 1:
                cyc = _bfs_path(out, s, u, full)
                key = (len(cyc), [labels[i] for i in cyc])
                if best is None or key < best:
                    best = key
    assert best is not None
    return tuple(best[1])


def find_violation(o: Orientation) -> Violation | None:
    """None iff `o` is semi-transitive.

    Search order: a directed cycle is reported first (shortest, then
    lexicographically least, rotated to start at its smallest vertex).
    Otherwise the shortest shortcut path, ties broken by the lexicographic
    order of its vertex sequence.
    """
    labels = o.base.order
    idx = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    out = [0] * n
    for u, v in o.arcs:
        out[idx[u]] |= 1 << idx[v]
    reach = _reach_masks(n, out)
    if reach is None:
        return Violation("cycle", _shortest_cycle(n, out, labels))
    return _shortcut(n, out, reach, labels)


def _shortcut(n, out, reach, labels) -> Violation | None:
    # For an arc u->v, every path from u to v is transitive iff every pair
    # w ~> w' inside S = {u} + (desc(u) & anc(v)) + {v} is joined by an arc.
    anc = [0] * n
    for u in range(n):
        for w in _bits(reach[u]):
            anc[w] |= 1 << u
    best = None
    for u in range(n):
        for v in _bits(out[u]):
            inner = reach[u] & anc[v]
            if not inner:
                continue
            span = inner | (1 << u) | (1 << v)
            for w in _bits(span):
                bad = reach[w] & span & ~out[w]
                if not bad:
                    continue
                du = _bfs_dist(out, u, span)
                dv_rev = None
                for w2 in _bits(bad):
                    dw = _bfs_dist(out, w, span)
                    length = du[w] + dw[w2]
                    if dv_rev is None:
                        dv_rev = {x: _bfs_dist(out, x, span).get(v) for x in _bits(span)}
                    length += dv_rev[w2]
                    if best is not None and length > best[0]:
                        continue
                    path = (_bfs_path(out, u, w, span)[:-1] + _bfs_path(out, w, w2, span)[:-1]
                            + _bfs_path(out, w2, v, span))
                    key = (len(path) - 1, [labels[i] for i in path])
                    if best is None or key < best:
                        best = key
    if best is None:
        return None
    return Violation("shortcut", tuple(best[1]))


def is_semi_transitive(o: Orientation) -> bool:
    return find_violation(o) is None


def is_transitive(o: Orientation) -> bool:
    arcs = o.arcs
    out: dict[int, set[int]] = {v: set() for v in o.base.vertices}
    for u, v in arcs:
        out[u].add(v)
    return all(w in out[u] for u in out for v in out[u] for w in out[v])


def check_violation(o: Orientation, viol: Violation) -> bool:
    """Independent validation that a reported violation is genuine."""
    arcs = o.arcs
    vs = viol.vertices
    if viol.kind == "cycle":
        return len(vs) >= 3 and all((vs[i], vs[(i + 1) % len(vs)]) in arcs for i in range(len(vs)))
    if len(vs) < 4 or len(set(vs)) != len(vs):
        return False
    if not all((vs[i], vs[i + 1]) in arcs for i in range(len(vs) - 1)):
        return False
    if (vs[0], vs[-1]) not in arcs:
        return False
    return any((vs[i], vs[j]) not in arcs for i in range(len(vs)) for j in range(i + 1, len(vs)))


# --- exhaustive search ------------------------------------------------------

def search_semi_transitive(g: Graph, budget: int = DEFAULT_BUDGET,
                           cap: int = DEFAULT_ORIENT_CAP) -> Orientation | None:
    """A semi-transitive orientation of g, or None (authoritative).

    Backtracks over edge directions; a partial orientation is rejected as soon
    as its assigned arcs close a directed cycle or contain a path u ~> v with
    an arc u -> v through two vertices w ~> w' that are non-adjacent in g.
    Both conditions persist under further assignment, so pruning is sound.
    """
    if len(g) > cap:
        raise BudgetError(f"graph has {len(g)} vertices, cap is {cap}")
    labels = g.order
    idx = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    if not g.edges:
        return Orientation(g, frozenset())
    nonadj = [0] * n
    for i, v in enumerate(labels):
        m = 0
        for j, w in enumerate(labels):
            if j != i and w not in g.adj[v]:
                m |= 1 << j
        nonadj[i] = m
    deg = [g.degree(v) for v in labels]
    edges = sorted(((idx[a], idx[b]) for a, b in g.edges),
                   key=lambda e: (-deg[e[0]] * deg[e[1]], e))
    out = [0] * n
    nodes = 0

    def consistent() -> bool:
        reach = _reach_masks(n, out)
        if reach is None:
            return False
        anc = [0] * n
        for u in range(n):
            for w in _bits(reach[u]):
                anc[w] |= 1 << u
        for u in range(n):
            for v in _bits(out[u]):
                span = (reach[u] & anc[v]) | (1 << u) | (1 << v)
                if span.bit_count() < 4:
                    continue
                for w in _bits(span):
                    if reach[w] & span & nonadj[w]:
                        return False
        return True

    def assign(i: int) -> bool:
        nonlocal nodes
        if i == len(edges):
            return True
        a, b = edges[i]
        # reversal symmetry: the first edge is fixed a -> b
        choices = ((a, b),) if i == 0 else ((a, b), (b, a))
        for s, t in choices:
            nodes += 1
            if nodes > budget:
                raise BudgetError(f"orientation search exceeded {budget} nodes")
            out[s] |= 1 << t
            if consistent() and assign(i + 1):
                return True
            out[s] &= ~(1 << t)
        return False

    if not assign(0):
        return None
    arcs = frozenset((labels[u], labels[v]) for u in range(n) for v in _bits(out[u]))
    o = Orientation(g, arcs)
    if find_violation(o) is not None:
        raise InternalError("orientation search returned an invalid orientation")
    return o


def transitive_orientation(g: Graph, budget: int = DEFAULT_BUDGET) -> Orientation | None:
    """A transitive orientation of g, or None when g is not a comparability graph.

    Backtracking with forcing: an arc a -> b forces a -> c for every neighbour
    c of a not adjacent to b, and c -> b for every neighbour c of b not
    adjacent to a; a -> b -> c forces a -> c (and fails if ac is not an edge).
    """
    direction: dict[tuple[int, int], bool] = {}  # (u,v) with u<v -> True means u->v
    nodes = 0

    def key(u, v):
        return (u, v) if u < v else (v, u)

    def is_arc(u, v):
        k = key(u, v)
        d = direction.get(k)
        return d is not None and d == (u < v)

    def force(u, v, trail) -> bool:
        stack = [(u, v)]
        while stack:
            a, b = stack.pop()
            k = key(a, b)
            want = a < b
            d = direction.get(k)
            if d is not None:
                if d != want:
                    return False
                continue
            direction[k] = want
            trail.append(k)
            for c in g.adj[a]:
                if c != b and c not in g.adj[b]:
                    stack.append((a, c))
            for c in g.adj[b]:
                if c != a and c not in g.adj[a]:
                    stack.append((c, b))
            for c in g.adj[b]:
                if c != a and is_arc(b, c):
                    if c not in g.adj[a]:
                        return False
                    stack.append((a, c))
            for c in g.adj[a]:
                if c != b and is_arc(c, a):
                    if c not in g.adj[b]:
                        return False
                    stack.append((c, b))
        return True

    edges = g.sorted_edges()

    def solve(i: int) -> bool:
        nonlocal nodes
        while i < len(edges) and edges[i] in direction:
            i += 1
        if i == len(edges):
            return True
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            nodes += 1
            if nodes > budget:
                raise BudgetError(f"transitive orientation search exceeded {budget} nodes")
            trail: list = []
            if force(a, b, trail) and solve(i + 1):
                return True
            for k in trail:
                del direction[k]
        return False

    if not solve(0):
        return None
    arcs = frozenset((u, v) if d else (v, u) for (u, v), d in direction.items())
    o = Orientation(g, arcs)
    if not is_transitive(o):
        raise InternalError("transitive orientation check failed")
    return o


# --- orientation from a biorder ---------------------------------------------

def classify_row_vertices(b) -> dict[int, str]:
    """Tag each nontrivial row 'linear' (d <= e) or 'circular' (e < d), and
    check that every linear row precedes every circular row in the row order."""
    pos = {c: i for i, c in enumerate(b.col_order)}
    tags: dict[int, str] = {}
    seen_circular = None
    for r in b.row_order:
        if r not in b.endpoints:
            continue
        d, e = b.endpoints[r]
        tag = "linear" if pos[d] <= pos[e] else "circular"
        if tag == "circular":
            seen_circular = r
        elif seen_circular is not None:
            raise InputError(f"linear row {r} follows circular row {seen_circular}: "
                             "biorder is not monotone circular")
        tags[r] = tag
    return tags


def orient_by_biorder(g: Graph, p, b) -> Orientation:
    """Apply the biorder orientation rules without validating the biorder."""
    rows, cols = p.side_x, p.side_y
    arcs: set[Arc] = set()
    ro = [rows[i] for i in b.row_order]
    co = [cols[j] for j in b.col_order]
    for i in range(len(ro)):
        for j in range(i + 1, len(ro)):
            arcs.add((ro[i], ro[j]))
    for i in range(len(co)):
        for j in range(i + 1, len(co)):
            arcs.add((co[i], co[j]))
    cpos = {c: i for i, c in enumerate(b.col_order)}
    for r_idx in b.row_order:
        rv = rows[r_idx]
        if r_idx not in b.endpoints:
            # trivial row: all-1 rows point at every column, all-0 rows have no cross arcs
            for c_idx in b.col_order:
                if g.has_edge(rv, cols[c_idx]):
                    arcs.add((rv, cols[c_idx]))
            continue
        d, e = b.endpoints[r_idx]
        pd, pe = cpos[d], cpos[e]
        for c_idx in b.col_order:
            cv, pc = cols[c_idx], cpos[c_idx]
            if pd <= pe:
                inside = pd <= pc <= pe
                if inside:
                    arcs.add((rv, cv))
            elif pc <= pe:
                inside = True
                arcs.add((cv, rv))
            elif pc >= pd:
                inside = True
                arcs.add((rv, cv))
            else:
                inside = False
            if inside != g.has_edge(rv, cv):
                raise InputError(f"row {r_idx} is not the circular interval "
                                 f"[{d}, {e}] of the column order")
    return Orientation(g, frozenset(arcs))


def orientation_from_biorder(g: Graph, p, b) -> Orientation:
    """Orientation induced by a monotone circular biorder (no trivial rows), or
    by a consecutive-ones biorder whose all-0 row and all-0 column come last.
    Other matrices with trivial rows get the same rules, and an InputError if
    the result is not semi-transitive.  Every result is checked before it is
    returned."""
    from .binmatrix import check_monotone_circular
    from .recognizer import biadjacency

    m = biadjacency(g, p)
    trivial = [r for r in range(m.row_count) if m.is_trivial_row(r)]
    zero_rows = [r for r in range(m.row_count) if not m.rows[r]]
    zero_cols = [c for c in range(m.col_count) if not m.col_sets[c]]
    guaranteed = True
    if not trivial:
        ok, why = check_monotone_circular(m, b)
        if not ok:
            raise InputError(f"biorder is not monotone circular: {why}")
        classify_row_vertices(b)
    elif not zero_rows or not zero_cols:
        # no construction is guaranteed here; the rules are applied and checked
        guaranteed = False
    else:
        if b.row_order[-1] not in zero_rows or b.col_order[-1] not in zero_cols:
            raise InputError("all-0 row and all-0 column must come last")
        cpos = {c: i for i, c in enumerate(b.col_order)}
        spans = []
        for r in b.row_order:
            if r not in b.endpoints:
                continue
            d, e = b.endpoints[r]
            if cpos[d] > cpos[e]:
                raise InputError(f"row {r} is not a linear interval of the column order")
            spans.append((cpos[d], cpos[e]))
        for (d1, e1), (d2, e2) in zip(spans, spans[1:]):
            if d1 > d2 or e1 > e2:
                raise InputError("row endpoints are not monotone along the row order")
    o = orient_by_biorder(g, p, b)
    viol = find_violation(o)
    if viol is not None:
        if not guaranteed:
            raise InputError(f"biorder orientation is not semi-transitive: {viol}")
        raise InternalError(f"biorder orientation is not semi-transitive: {viol}")
    return o
