"""Exhaustive equivalence sweeps and the recognition benchmark.

Each sweep returns a SweepReport; a sweep passes when it checked at least one
case and found no discrepancy.
"""

from __future__ import annotations

import math
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Iterable, Sequence

from .binmatrix import (BinaryMatrix, Biorder, canonical_form, check_monotone_circular,
                        circular_ones_order, find_forbidden, is_cco, is_circular_interval,
                        is_dcircular_order, search_cco_biorder)
from .errors import BudgetError
from .graph import (all_cobipartitions, find_induced, generate_family, induced_subgraph,
                    is_isomorphic, local_complement_seq)
from .orientations import find_violation, search_semi_transitive
from .recognizer import (GS_MEMBERS, cg, generate_gs, is_cobipartite_permutation, recognize,
                         validate_certificate)
from .words import represents, search_representant

SEED = 20240917


@dataclass
class SweepReport:
    name: str
    checked: int = 0
    discrepancies: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.discrepancies

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in sorted(self.details.items()))
        return (f"{status} {self.name}: checked={self.checked} "
                f"discrepancies={len(self.discrepancies)} time={self.elapsed:.1f}s{extra}")


def _timed(fn: Callable[[SweepReport], None], name: str) -> SweepReport:
    rep = SweepReport(name)
    t0 = time.perf_counter()
    fn(rep)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _map(fn, items: Sequence, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=8))


# --- matrix universes --------------------------------------------------------------

def all_matrices(rows: int, cols: int) -> Iterable[BinaryMatrix]:
    for bits in product((0, 1), repeat=rows * cols):
        yield BinaryMatrix.from_sets(cols, ([c for c in range(cols) if bits[r * cols + c]]
                                            for r in range(rows)))


def canonical_classes(rows: int, cols: int) -> list[BinaryMatrix]:
    """One representative per row/column-permutation class, in sorted key order."""
    seen = {}
    for m in all_matrices(rows, cols):
        seen.setdefault(canonical_form(m), m)
    out = []
    for key in sorted(seen):
        r, c, masks = key
        out.append(BinaryMatrix.from_sets(c, ([j for j in range(c) if x >> j & 1] for x in masks)))
    return out


def row_multisets(rows: int, cols: int, nontrivial: bool = False) -> Iterable[BinaryMatrix]:
    """Matrices up to row permutation (row sets chosen with repetition)."""
    masks = [x for x in range(1 << cols) if not nontrivial or 0 < x < (1 << cols) - 1]
    for combo in combinations_with_replacement(masks, rows):
        yield BinaryMatrix.from_sets(cols, ([j for j in range(cols) if x >> j & 1] for x in combo))


def random_matrices(count: int, rows: int, cols: int, seed: int = SEED) -> list[BinaryMatrix]:
    rng = random.Random(seed)
    return [BinaryMatrix.from_sets(cols, ([c for c in range(cols) if rng.random() < 0.5]
                                          for _ in range(rows))) for _ in range(count)]


# --- brute-force oracles ------------------------------------------------------------

def brute_circular_ones(m: BinaryMatrix) -> bool:
    n = m.col_count
    if n <= 2:
        return True
    for rest in permutations(range(1, n)):
        pos = {c: i for i, c in enumerate((0,) + rest)}
        if all(is_circular_interval(r, pos, n) for r in m.row_sets):
            return True
    return False


def brute_dcircular(m: BinaryMatrix) -> bool:
    return any(is_dcircular_order(m, order) for order in permutations(range(m.col_count)))


def brute_monotone_circular(m: BinaryMatrix) -> bool:
    for corder in permutations(range(m.col_count)):
        pos = {c: i for i, c in enumerate(corder)}
        if not all(is_circular_interval(r, pos, m.col_count) for r in m.row_sets):
            continue
        for rorder in permutations(range(m.row_count)):
            if check_monotone_circular(m, Biorder.build(m, rorder, corder))[0]:
                return True
    return False


# --- per-case checks (module level so worker processes can run them) ----------------

def _check_recognition(m: BinaryMatrix) -> list[str]:
    g, _ = cg(m)
    tag = f"rows={[list(r) for r in m.rows]}"
    v = recognize(g)
    oracle = search_semi_transitive(g)
    out = []
    if v.semi_transitive != (oracle is not None):
        out.append(f"{tag}: recognize={v.semi_transitive} oracle={oracle is not None}")
    out += _witness_problems(g, v, tag)
    return out


def _witness_problems(g, v, tag: str) -> list[str]:
    out = []
    if v.semi_transitive:
        if v.witness is None:
            out.append(f"{tag}: no witness")
        elif find_violation(v.witness) is not None:
            out.append(f"{tag}: witness has a violation")
    else:
        c = v.certificate
        if c is None:
            out.append(f"{tag}: no certificate")
        elif not validate_certificate(g, c):
            out.append(f"{tag}: certificate {c.label()} not isomorphic")
        elif recognize(induced_subgraph(g, c.vertices), witness=False).semi_transitive:
            out.append(f"{tag}: certificate {c.label()} re-recognized as positive")
    return out


def _check_cco(m: BinaryMatrix) -> list[str]:
    a = bool(is_cco(m, evidence=False))
    b = search_cco_biorder(m) is not None
    c = (circular_ones_order(m.col_count, m.row_sets) is not None
         and circular_ones_order(m.row_count, m.col_sets) is not None
         and find_forbidden(m) is None)
    if a == b == c:
        return []
    return [f"rows={[list(r) for r in m.rows]}: is_cco={a} biorder={b} no-forbidden={c}"]


def _check_tucker(m: BinaryMatrix) -> list[str]:
    fast = circular_ones_order(m.col_count, m.row_sets) is not None
    if fast != brute_circular_ones(m):
        return [f"rows={[list(r) for r in m.rows]} cols={m.col_count}: tucker={fast}"]
    return []


def _check_mco(m: BinaryMatrix) -> list[str]:
    a, b = brute_dcircular(m), brute_monotone_circular(m)
    if a != b:
        return [f"rows={[list(r) for r in m.rows]}: dcircular={a} monotone={b}"]
    return []


def _check_circle(m: BinaryMatrix) -> list[str]:
    g, _ = cg(m)
    perm, cert = is_cobipartite_permutation(g)
    circle = g.is_complete() or search_representant(g, k_max=2, budget=10**8) is not None
    out = []
    if perm != circle:
        out.append(f"rows={[list(r) for r in m.rows]}: permutation={perm} circle={circle}")
    if cert is not None and not validate_certificate(g, cert):
        out.append(f"rows={[list(r) for r in m.rows]}: certificate {cert.label()} invalid")
    return out


def _collect(rep: SweepReport, results: Iterable[list[str]]) -> None:
    for problems in results:
        rep.checked += 1
        rep.discrepancies.extend(problems)


# --- sweeps ---------------------------------------------------------------------------

def sweep_recognition(jobs: int = 1) -> SweepReport:
    """recognize agrees with exhaustive orientation search on every graph
    built from a 4x4 matrix; witnesses and certificates are validated."""
    return _timed(lambda rep: _collect(rep, _map(_check_recognition, canonical_classes(4, 4), jobs)),
                  "recognition-vs-orientation-oracle")


def sweep_cco(jobs: int = 1, random_count: int = 1000) -> SweepReport:
    def run(rep):
        cases = canonical_classes(4, 4) + random_matrices(random_count, 5, 5)
        _collect(rep, _map(_check_cco, cases, jobs))
    return _timed(run, "cco-equivalence")


def sweep_tucker(jobs: int = 1) -> SweepReport:
    def run(rep):
        cases = [m for r in range(1, 5) for c in range(1, 6) for m in row_multisets(r, c)]
        _collect(rep, _map(_check_tucker, cases, jobs))
    return _timed(run, "tucker-circular-ones")


def sweep_mco(jobs: int = 1) -> SweepReport:
    def run(rep):
        cases = [m for r in range(1, 5) for c in range(2, 5) for m in row_multisets(r, c, True)]
        _collect(rep, _map(_check_mco, cases, jobs))
    return _timed(run, "dcircular-vs-monotone-circular")


def gs_small_members() -> list[tuple[str, int | None]]:
    out: list[tuple[str, int | None]] = []
    for member in GS_MEMBERS:
        if member.endswith("MIkStar"):
            out += [(member, 3), (member, 4)]
        else:
            out.append((member, None))
    return out


def sweep_minimality() -> SweepReport:
    def run(rep):
        for member, k in gs_small_members():
            g = generate_gs(member, k)
            name = member if k is None else f"{member}({k})"
            v = recognize(g)
            rep.checked += 1
            rep.discrepancies += _witness_problems(g, v, name)
            if v.semi_transitive:
                rep.discrepancies.append(f"{name}: recognized as semi-transitive")
            for x in g.order:
                h = g.remove_vertex(x)
                w = recognize(h)
                rep.checked += 1
                if not w.semi_transitive:
                    rep.discrepancies.append(f"{name} - {x}: not semi-transitive")
                rep.discrepancies += _witness_problems(h, w, f"{name} - {x}")
    return _timed(run, "forbidden-family-minimality")


def rotations_and_reversals(w: Sequence[int]) -> set[tuple[int, ...]]:
    out = set()
    for t in (tuple(w), tuple(reversed(w))):
        for i in range(len(t)):
            out.add(t[i:] + t[:i])
    return out


def automorphisms(g) -> list[dict[int, int]]:
    verts = g.order
    out = []
    for perm in permutations(verts):
        mp = dict(zip(verts, perm))
        if all((min(mp[u], mp[v]), max(mp[u], mp[v])) in g.edges for u, v in g.edges):
            out.append(mp)
    return out


def two_uniform_representants(g) -> list[tuple[int, ...]]:
    """Every 2-uniform representant (exhaustive; tiny graphs only)."""
    letters = [v for v in g.order for _ in range(2)]
    return sorted({w for w in set(permutations(letters)) if represents(w, g)})


def sweep_word_fixture() -> SweepReport:
    def run(rep):
        c6 = generate_family("CoC2k", 3)
        h = induced_subgraph(c6, c6.closed_neighborhood(1))
        target = (3, 5, 4, 1, 4, 3, 5, 1)
        found = search_representant(h, k_max=2)
        rep.checked += 1
        if found is None or found not in rotations_and_reversals(target):
            rep.discrepancies.append(f"H: search returned {found}")
        words = two_uniform_representants(h)
        classes = {min(rotations_and_reversals(w)) for w in words}
        autos = automorphisms(h)
        auto_classes = {min(min(rotations_and_reversals(tuple(a[x] for x in w))) for a in autos)
                        for w in words}
        rep.details.update(classes_rot_rev=len(classes), classes_with_automorphisms=len(auto_classes),
                           automorphisms=len(autos))
        rep.checked += 1
        if not represents(target, h):
            rep.discrepancies.append("the fixture word does not represent H")
        rep.checked += 1
        try:
            none = search_representant(c6, k_max=2)
        except BudgetError as exc:
            rep.discrepancies.append(f"C6 complement: budget exhausted ({exc})")
        else:
            if none is not None:
                rep.discrepancies.append(f"C6 complement: found {none}")
    return _timed(run, "two-uniform-word-fixture")


LOCAL_COMPLEMENT_FIXTURES = (("G1", (7, 6), "W5"), ("G2", (7, 1), "Y6"), ("G3", (1, 2, 3), "Y6"))


def sweep_local_complement() -> SweepReport:
    def run(rep):
        for base, seq, target in LOCAL_COMPLEMENT_FIXTURES:
            g = local_complement_seq(generate_family(base), seq)
            emb = find_induced(g, generate_family(target))
            rep.checked += 1
            if emb is None:
                rep.discrepancies.append(f"{base}*{'*'.join(map(str, seq))}: no induced {target}")
            elif not is_isomorphic(induced_subgraph(g, emb.values()), generate_family(target)):
                rep.discrepancies.append(f"{base}: embedding of {target} does not check")
    return _timed(run, "local-complementation-fixtures")


def _check_partitions(m: BinaryMatrix) -> list[str]:
    g, _ = cg(m)
    tag = f"rows={[list(r) for r in m.rows]}"
    out, answers = [], set()
    for p in all_cobipartitions(g):
        v = recognize(g, partition=p)
        answers.add(v.semi_transitive)
        out += _witness_problems(g, v, f"{tag} partition={p.side_x}|{p.side_y}")
    if len(answers) > 1:
        out.append(f"{tag}: decision depends on the partition")
    return out


def sweep_witnesses(jobs: int = 1) -> SweepReport:
    """Every co-bipartition of every 4x4 graph: same decision, and the
    emitted witness or certificate validates."""
    return _timed(lambda rep: _collect(rep, _map(_check_partitions, canonical_classes(4, 4), jobs)),
                  "witness-validity-all-partitions")


def sweep_circle(jobs: int = 1) -> SweepReport:
    def run(rep):
        _collect(rep, _map(_check_circle, canonical_classes(4, 4), jobs))
    return _timed(run, "circle-equals-permutation")


SWEEPS: dict[str, Callable[..., SweepReport]] = {
    "recognition": sweep_recognition,
    "cco": sweep_cco,
    "tucker": sweep_tucker,
    "mco": sweep_mco,
    "minimality": sweep_minimality,
    "words": sweep_word_fixture,
    "local-complement": sweep_local_complement,
    "circle": sweep_circle,
    "witnesses": sweep_witnesses,
}
PARALLEL_SWEEPS = {"recognition", "cco", "tucker", "mco", "circle", "witnesses"}


# --- benchmark ------------------------------------------------------------------------

BENCH_SIZES = (10**3, 10**4, 10**5, 10**6)


def interval_instance(size: int, rng: random.Random, mean_len: int = 6) -> BinaryMatrix:
    """Square matrix of about the given size whose rows are intervals with
    nondecreasing left and right endpoints, then shuffled on both sides.
    Such matrices have circularly compatible ones."""
    n = max(2, size // (2 + mean_len))
    lefts = sorted(rng.randrange(n) for _ in range(n))
    rows, right = [], -1
    for d in lefts:
        right = min(n - 1, max(right, d + rng.randint(1, 2 * mean_len - 1) - 1))
        rows.append(range(d, right + 1))
    rperm, cperm = list(range(n)), list(range(n))
    rng.shuffle(rperm)
    rng.shuffle(cperm)
    return BinaryMatrix.from_sets(n, ([cperm[c] for c in rows[r]] for r in rperm))


@dataclass
class BenchRow:
    size: int
    rows: int
    cols: int
    ones: int
    ns: int
    decision: bool


def bench(sizes: Sequence[int] = BENCH_SIZES, seed: int = SEED, repeats: int = 1) -> list[BenchRow]:
    rng = random.Random(seed)
    out = []
    for s in sizes:
        m = interval_instance(s, rng)
        best = None
        for _ in range(repeats):
            t0 = time.perf_counter_ns()
            decision = bool(is_cco(m, evidence=False))
            dt = time.perf_counter_ns() - t0
            best = dt if best is None else min(best, dt)
        out.append(BenchRow(m.size, m.row_count, m.col_count, m.ones, best, decision))
    return out


def fit_exponent(rows: Sequence[BenchRow]) -> float:
    """Slope of log(time) against log(size)."""
    xs = [math.log(r.size) for r in rows]
    ys = [math.log(max(r.ns, 1)) for r in rows]
    return statistics.linear_regression(xs, ys).slope
