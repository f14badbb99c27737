"""Plain-text formats for graphs, matrices, words, orientations and verdicts."""

from __future__ import annotations

from typing import Sequence

from .binmatrix import BinaryMatrix
from .errors import InputError
from .graph import Graph, build_graph
from .orientations import Orientation
from .recognizer import Certificate, Verdict


def _strip(text: str) -> list[str]:
    return [line.split("#", 1)[0].rstrip() for line in text.splitlines()]


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in line.split()]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {line.strip()!r}") from None


def parse_graph(text: str) -> Graph:
    lines = [(i + 1, ln) for i, ln in enumerate(_strip(text)) if ln.strip()]
    if not lines:
        raise InputError("empty graph file")
    lineno, head = lines[0]
    hdr = _ints(head, lineno)
    if len(hdr) != 2 or min(hdr) < 0:
        raise InputError(f"line {lineno}: header must be 'n m'")
    n, m = hdr
    edges = []
    for lineno, ln in lines[1:]:
        pair = _ints(ln, lineno)
        if len(pair) != 2:
            raise InputError(f"line {lineno}: edge must be 'u v'")
        edges.append((pair[0], pair[1]))
    if len(edges) != m:
        raise InputError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def _check_labels(g: Graph) -> None:
    if g.vertices != frozenset(range(1, len(g) + 1)):
        raise InputError("the text format needs vertices labelled 1..n; relabel first")


def format_graph(g: Graph) -> str:
    _check_labels(g)
    out = [f"{len(g)} {len(g.edges)}"]
    out += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> BinaryMatrix:
    """'m n' header, then one line per row with its 1-based column indices.
    Comment-only lines are skipped; blank lines are empty rows."""
    raw = text.splitlines()
    body = []
    header = None
    for i, line in enumerate(raw):
        if line.lstrip().startswith("#"):
            continue
        content = line.split("#", 1)[0]
        if header is None:
            if not content.strip():
                continue
            header = (i + 1, _ints(content, i + 1))
            continue
        body.append((i + 1, content))
    if header is None:
        raise InputError("empty matrix file")
    lineno, hdr = header
    if len(hdr) != 2 or min(hdr) < 0:
        raise InputError(f"line {lineno}: header must be 'm n'")
    m, n = hdr
    # trailing blank lines beyond the announced rows are ignored
    while len(body) > m and not body[-1][1].strip():
        body.pop()
    if len(body) < m:
        body += [(lineno, "")] * (m - len(body))
    if len(body) != m:
        raise InputError(f"header announces {m} rows, found {len(body)}")
    rows = []
    for ln, content in body:
        cols = _ints(content, ln)
        if any(not 1 <= c <= n for c in cols):
            raise InputError(f"line {ln}: column index outside 1..{n}")
        if any(cols[j] >= cols[j + 1] for j in range(len(cols) - 1)):
            raise InputError(f"line {ln}: column indices must be strictly increasing")
        rows.append([c - 1 for c in cols])
    return BinaryMatrix.from_sets(n, rows)


def format_matrix(m: BinaryMatrix) -> str:
    out = [f"{m.row_count} {m.col_count}"]
    out += [" ".join(str(c + 1) for c in r) for r in m.rows]
    return "\n".join(out) + "\n"


def parse_word(text: str) -> tuple[int, ...]:
    words = [ln for ln in _strip(text) if ln.strip()]
    if len(words) != 1:
        raise InputError("a word is one line of whitespace-separated vertex ids")
    return tuple(_ints(words[0], 1))


def format_word(w: Sequence[int]) -> str:
    return " ".join(map(str, w)) + "\n"


def format_orientation(o: Orientation) -> str:
    _check_labels(o.base)
    out = [f"{len(o.base)} {len(o.base.edges)}"]
    out += [f"{u} -> {v}" for u, v in o.sorted_arcs()]
    return "\n".join(out) + "\n"


def parse_orientation(text: str) -> Orientation:
    lines = [(i + 1, ln) for i, ln in enumerate(_strip(text)) if ln.strip()]
    if not lines:
        raise InputError("empty orientation file")
    n, m = _ints(lines[0][1], lines[0][0])
    arcs = []
    for lineno, ln in lines[1:]:
        parts = ln.split("->")
        if len(parts) != 2:
            raise InputError(f"line {lineno}: arc must be 'u -> v'")
        u, v = (_ints(p, lineno) for p in parts)
        if len(u) != 1 or len(v) != 1:
            raise InputError(f"line {lineno}: arc must be 'u -> v'")
        arcs.append((u[0], v[0]))
    if len(arcs) != m:
        raise InputError(f"header announces {m} arcs, found {len(arcs)}")
    g = build_graph(n, arcs)
    return Orientation(g, frozenset(arcs))


def format_certificate(c: Certificate) -> str:
    k = "-" if c.k is None else str(c.k)
    return f"CERTIFICATE family={c.family} k={k} vertices={','.join(map(str, c.vertices))}\n"


def format_verdict(v: Verdict, notes: bool = True) -> str:
    text = ("SEMI-TRANSITIVE" if v.semi_transitive else "NOT-SEMI-TRANSITIVE") + "\n"
    if v.witness is not None:
        text += "WITNESS\n" + format_orientation(v.witness)
    if v.certificate is not None:
        text += format_certificate(v.certificate)
    if notes:
        text += "".join(f"NOTE {n}\n" for n in v.notes)
    return text
