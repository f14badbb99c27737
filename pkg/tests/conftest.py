from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from wordrep.binmatrix import BinaryMatrix
from wordrep.graph import Graph, build_graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def matrices(draw, max_rows: int = 4, max_cols: int = 4, min_rows: int = 1, min_cols: int = 1) -> BinaryMatrix:
    r = draw(st.integers(min_rows, max_rows))
    c = draw(st.integers(min_cols, max_cols))
    dense = draw(st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return BinaryMatrix.from_dense(dense, c)
