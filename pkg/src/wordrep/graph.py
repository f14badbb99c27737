"""Simple undirected graphs, co-bipartitions, local complementation and small
induced-subgraph search, plus generators for the named families."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import BudgetError, InputError

Edge = tuple[int, int]

DEFAULT_EMBED_CAP = 16


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on integer vertices."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u > v:
                raise InputError(f"edge ({u}, {v}) is not normalized")
            if u not in self.vertices or v not in self.vertices:
                raise InputError(f"edge ({u}, {v}) uses an undeclared vertex")

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
        vs = frozenset(vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            es.add(_norm(u, v))
        return cls(vs, frozenset(es))

    @cached_property
    def adj(self) -> Mapping[int, frozenset[int]]:
        nb: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return {v: frozenset(s) for v, s in nb.items()}

    @cached_property
    def order(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def relabel(self, mapping: Mapping[int, int]) -> Graph:
        return Graph.from_edges((mapping[v] for v in self.vertices),
                                ((mapping[u], mapping[v]) for u, v in self.edges))

    def remove_vertex(self, v: int) -> Graph:
        return induced_subgraph(self, self.vertices - {v})

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={len(self.vertices)}, edges={self.sorted_edges()})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Graph on vertices 1..n with exactly the given edges."""
    if n < 0:
        raise InputError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for u, v in edge_list:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            raise InputError(f"edge ({u}, {v}) is a loop")
        e = _norm(u, v)
        if e in seen:
            raise InputError(f"edge ({u}, {v}) is repeated")
        seen.add(e)
    return Graph(frozenset(range(1, n + 1)), frozenset(seen))


def complement(g: Graph) -> Graph:
    es = [(u, v) for u, v in combinations(g.order, 2) if v not in g.adj[u]]
    return Graph(g.vertices, frozenset(es))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    keep = frozenset(s)
    missing = keep - g.vertices
    if missing:
        raise InputError(f"unknown vertices {sorted(missing)}")
    return Graph(keep, frozenset(e for e in g.edges if e[0] in keep and e[1] in keep))


def union(g1: Graph, g2: Graph) -> Graph:
    return Graph(g1.vertices | g2.vertices, g1.edges | g2.edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint join: requires disjoint vertex sets."""
    if g1.vertices & g2.vertices:
        raise InputError("join needs disjoint vertex sets")
    cross = {_norm(u, v) for u in g1.vertices for v in g2.vertices}
    return Graph(g1.vertices | g2.vertices, g1.edges | g2.edges | frozenset(cross))


def add_universal_vertex(g: Graph, v: int | None = None) -> Graph:
    if v is None:
        v = max(g.vertices, default=0) + 1
    return join(g, Graph(frozenset([v]), frozenset()))


def local_complement(g: Graph, v: int) -> Graph:
    """G * v: toggle every edge inside N(v)."""
    if v not in g.vertices:
        raise InputError(f"unknown vertex {v}")
    nb = sorted(g.adj[v])
    toggled = {_norm(a, b) for a, b in combinations(nb, 2)}
    return Graph(g.vertices, g.edges ^ frozenset(toggled))


def local_complement_seq(g: Graph, seq: Iterable[int]) -> Graph:
    for v in seq:
        g = local_complement(g, v)
    return g


# --- co-bipartition -------------------------------------------------------

@dataclass(frozen=True)
class CoBipartition:
    side_x: tuple[int, ...]
    side_y: tuple[int, ...]

    def swapped(self) -> CoBipartition:
        return CoBipartition(self.side_y, self.side_x)

    def is_valid_for(self, g: Graph) -> bool:
        xs, ys = set(self.side_x), set(self.side_y)
        if xs & ys or xs | ys != set(g.vertices):
            return False
        if len(xs) != len(self.side_x) or len(ys) != len(self.side_y):
            return False
        return all(g.has_edge(a, b) for side in (self.side_x, self.side_y)
                   for a, b in combinations(side, 2))


@dataclass(frozen=True)
class NotCoBipartite:
    """Failure value: an odd cycle of the complement."""

    odd_cycle: tuple[int, ...]

    def __bool__(self) -> bool:
        return False


def cobipartite_partition(g: Graph) -> CoBipartition | NotCoBipartite:
    """Canonical partition: 2-colour each component of the complement, the
    class holding the component's smallest vertex goes to side_x."""
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    verts = g.order
    for root in verts:
        if root in color:
            continue
        color[root], parent[root], depth[root] = 0, None, 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            nb = g.adj[u]
            for w in verts:
                if w == u or w in nb:
                    continue
                if w not in color:
                    color[w], parent[w], depth[w] = 1 - color[u], u, depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return NotCoBipartite(_odd_cycle(u, w, parent, depth))
    xs = tuple(v for v in verts if color[v] == 0)
    ys = tuple(v for v in verts if color[v] == 1)
    return CoBipartition(xs, ys)


def _odd_cycle(u, w, parent, depth) -> tuple[int, ...]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def all_cobipartitions(g: Graph) -> list[CoBipartition]:
    """Every valid co-bipartition (ordered pair) of g; one per colouring choice
    of each complement component.  Exponential in the component count."""
    base = cobipartite_partition(g)
    if not base:
        return []
    cg = complement(g)
    comps: list[list[int]] = []
    seen: set[int] = set()
    for v in g.order:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in cg.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(comp)
    xs0 = set(base.side_x)
    out = []
    for mask in range(1 << len(comps)):
        xs = set()
        for i, comp in enumerate(comps):
            flip = (mask >> i) & 1
            xs.update(u for u in comp if (u in xs0) != bool(flip))
        out.append(CoBipartition(tuple(sorted(xs)), tuple(v for v in g.order if v not in xs)))
    return out


# --- induced subgraph search ----------------------------------------------

def find_induced(host: Graph, pattern: Graph, cap: int = DEFAULT_EMBED_CAP) -> dict[int, int] | None:
    """Lexicographically first induced embedding pattern -> host, or None."""
    if len(pattern) > cap:
        raise BudgetError(f"pattern has {len(pattern)} vertices, cap is {cap}")
    pv = pattern.order
    hv = host.order
    k, n = len(pv), len(hv)
    if k > n:
        return None
    if k == 0:
        return {}
    pdeg = [pattern.degree(v) for v in pv]
    hdeg = {v: host.degree(v) for v in hv}
    # co-degree bound: a pattern non-neighbour maps to a host non-neighbour
    pco = [k - 1 - d for d in pdeg]
    hco = {v: n - 1 - hdeg[v] for v in hv}
    padj = [[pattern.has_edge(pv[i], pv[j]) for j in range(k)] for i in range(k)]
    image: list[int] = []
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == k:
            return True
        for h in hv:
            if h in used or hdeg[h] < pdeg[i] or hco[h] < pco[i]:
                continue
            nb = host.adj[h]
            if any((image[j] in nb) != padj[i][j] for j in range(i)):
                continue
            image.append(h)
            used.add(h)
            if extend(i + 1):
                return True
            image.pop()
            used.discard(h)
        return False

    if extend(0):
        return dict(zip(pv, image))
    return None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if len(g) != len(h) or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return False
    return find_induced(g, h, cap=max(DEFAULT_EMBED_CAP, len(h))) is not None


def find_induced_cycle(g: Graph, length: int, vertices: Iterable[int] | None = None) -> tuple[int, ...] | None:
    """First chordless cycle of the given length (>= 4), as a vertex sequence
    starting at its smallest vertex."""
    allowed = frozenset(g.vertices if vertices is None else vertices)
    order = [v for v in g.order if v in allowed]
    for start in order:
        path = [start]
        on_path = {start}

        def grow() -> bool:
            last = path[-1]
            for w in sorted(g.adj[last]):
                if w not in allowed or w <= start or w in on_path:
                    continue
                # w may only touch the path at `last`, or at `start` when closing
                touches = [p for p in path[:-1] if p in g.adj[w]]
                closing = len(path) + 1 == length
                if closing:
                    if touches != [start]:
                        continue
                    if path[1] > w:  # each cycle once: second vertex < last
                        continue
                    path.append(w)
                    return True
                if touches:
                    continue
                path.append(w)
                on_path.add(w)
                if grow():
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if length >= 4 and grow():
            return tuple(path)
    return None


# --- named families --------------------------------------------------------
# W5, W7 and Y6 are unlabeled in their source drawing; vertices are numbered
# top-to-bottom, then left-to-right, by their drawn position.

_FIXED_FAMILIES: dict[str, tuple[int, list[Edge]]] = {
    "G1": (7, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
               (3, 4), (3, 5), (3, 6), (2, 5), (1, 4)]),
    "G2": (7, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
               (3, 4), (3, 6), (2, 5), (2, 4)]),
    "G3": (7, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
               (1, 5), (1, 6), (3, 4), (3, 6), (2, 5), (2, 4)]),
    # hub 4, rim 1-2-5-6-3
    "W5": (6, [(4, 1), (4, 2), (4, 3), (4, 5), (4, 6),
               (1, 2), (2, 5), (5, 6), (6, 3), (3, 1)]),
    # hub 4, rim 1-3-6-8-7-5-2
    "W7": (8, [(4, 1), (4, 2), (4, 3), (4, 5), (4, 6), (4, 7), (4, 8),
               (1, 3), (3, 6), (6, 8), (8, 7), (7, 5), (5, 2), (2, 1)]),
    "Y6": (7, [(7, 4), (7, 6), (7, 5), (4, 3), (6, 3), (5, 2), (4, 2), (3, 1), (2, 1)]),
}

FAMILY_NAMES = ("CoC2k", "G1", "G2", "G3", "W5", "W7", "Y6")


@dataclass(frozen=True)
class FamilyId:
    name: str
    k: int | None = field(default=None)

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise InputError(f"unknown family {self.name!r}")
        if self.name == "CoC2k" and (self.k is None or self.k < 3):
            raise InputError("CoC2k needs k >= 3")

    def label(self) -> str:
        return f"{self.name}(k={self.k})" if self.name == "CoC2k" else self.name


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(1, n + 1), 2))


def generate_family(fid: FamilyId | str, k: int | None = None) -> Graph:
    if isinstance(fid, str):
        fid = FamilyId(fid, k)
    if fid.name == "CoC2k":
        return complement(cycle_graph(2 * fid.k))
    n, edges = _FIXED_FAMILIES[fid.name]
    return build_graph(n, edges)
