"""Command-line front end.

Exit codes: 0 ok, 1 negative answer where a positive one was asked for
(verify-word, failing sweeps), 2 input error, 3 budget or cap exceeded,
4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import sweeps
from .binmatrix import (BASE_PATTERNS, PatternId, bracelets, generate_pattern,
                        search_cco_biorder)
from .errors import BudgetError, InputError, InternalError
from .graph import FAMILY_NAMES, CoBipartition, Graph, generate_family
from .orientations import DEFAULT_BUDGET, DEFAULT_ORIENT_CAP, search_semi_transitive
from .recognizer import (GS_MEMBERS, cg, generate_gs, is_cobipartite_permutation, recognize)
from .textio import (format_certificate, format_graph, format_matrix, format_orientation,
                     format_verdict, format_word, parse_graph, parse_matrix, parse_word)
from .words import DEFAULT_KMAX, represents, search_representant

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> tuple[Graph, CoBipartition | None]:
    """The input graph, with the matrix's own partition when given a matrix."""
    if args.graph and args.matrix:
        raise InputError("give either --graph or --matrix, not both")
    if args.graph:
        return parse_graph(_read(args.graph)), None
    if args.matrix:
        return cg(parse_matrix(_read(args.matrix)))
    raise InputError("an input is required: --graph FILE or --matrix FILE")


def _need_authoritative(args, what: str) -> None:
    if args.authoritative:
        raise BudgetError(what)


def cmd_recognize(args) -> int:
    g, p = _load(args)
    v = recognize(g, budget=args.budget, partition=p)
    sys.stdout.write(format_verdict(v))
    if v.semi_transitive and v.witness is None:
        _need_authoritative(args, "no witness within budget")
    return EXIT_OK


def cmd_orient(args) -> int:
    g, p = _load(args)
    v = recognize(g, certificate=False, budget=args.budget, partition=p)
    if not v.semi_transitive:
        sys.stdout.write("NOT-SEMI-TRANSITIVE\n")
        return EXIT_OK
    if v.witness is None:
        sys.stdout.write("SEMI-TRANSITIVE\n" + "".join(f"NOTE {n}\n" for n in v.notes))
        _need_authoritative(args, "no witness within budget")
        return EXIT_OK
    sys.stdout.write(format_orientation(v.witness))
    return EXIT_OK


def cmd_certify(args) -> int:
    g, p = _load(args)
    if args.circle:
        ok, cert = is_cobipartite_permutation(g, cap=args.cap or 16)
        sys.stdout.write("PERMUTATION\n" if ok else "NOT-PERMUTATION\n")
        if cert is not None:
            sys.stdout.write(format_certificate(cert))
        return EXIT_OK
    v = recognize(g, witness=False, budget=args.budget, partition=p)
    sys.stdout.write(format_verdict(v))
    if not v.semi_transitive and v.certificate is None:
        _need_authoritative(args, "no certificate found")
    return EXIT_OK


def cmd_verify_word(args) -> int:
    g, _ = _load(args)
    if not args.word:
        raise InputError("--word is required")
    text = _read(args.word) if os.path.isfile(args.word) else args.word
    w = parse_word(text)
    if represents(w, g):
        sys.stdout.write("REPRESENTS\n")
        return EXIT_OK
    sys.stdout.write("DOES-NOT-REPRESENT\n")
    return EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    if args.kind == "cco":
        if not args.matrix:
            raise InputError("the cco oracle needs --matrix")
        m = parse_matrix(_read(args.matrix))
        b = search_cco_biorder(m, budget=args.budget, cap=args.cap or 7)
        if b is None:
            sys.stdout.write("NONE\n")
        else:
            sys.stdout.write("BIORDER\n")
            sys.stdout.write("rows " + " ".join(str(r + 1) for r in b.row_order) + "\n")
            sys.stdout.write("cols " + " ".join(str(c + 1) for c in b.col_order) + "\n")
        return EXIT_OK
    g, _ = _load(args)
    if args.kind == "orientation":
        o = search_semi_transitive(g, budget=args.budget, cap=args.cap or DEFAULT_ORIENT_CAP)
        sys.stdout.write("NONE\n" if o is None else format_orientation(o))
    else:
        w = search_representant(g, k_max=args.kmax, budget=args.budget, cap=args.cap or 10)
        sys.stdout.write("NONE\n" if w is None else format_word(w))
    return EXIT_OK


def cmd_gen(args) -> int:
    name = args.family
    if not name:
        raise InputError("--family is required")
    if name in FAMILY_NAMES:
        sys.stdout.write(format_graph(generate_family(name, args.k)))
    elif name in GS_MEMBERS:
        sys.stdout.write(format_graph(generate_gs(name, args.k)))
    elif name in BASE_PATTERNS:
        sys.stdout.write(format_matrix(generate_pattern(PatternId(name, args.k, args.transpose))))
    elif name == "bracelets":
        if args.k is None:
            raise InputError("bracelets need --k")
        sys.stdout.write("".join(s + "\n" for s in bracelets(args.k)))
    else:
        known = ", ".join(FAMILY_NAMES + GS_MEMBERS + BASE_PATTERNS + ("bracelets",))
        raise InputError(f"unknown family {name!r}; known: {known}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    names = args.suites or list(sweeps.SWEEPS)
    unknown = [n for n in names if n not in sweeps.SWEEPS]
    if unknown:
        raise InputError(f"unknown suite(s) {unknown}; known: {', '.join(sweeps.SWEEPS)}")
    ok = True
    for name in names:
        fn = sweeps.SWEEPS[name]
        rep = fn(jobs=args.jobs) if name in sweeps.PARALLEL_SWEEPS else fn()
        print(rep.line(), flush=True)
        for d in rep.discrepancies[:20]:
            print(f"  {d}")
        ok &= rep.passed
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_bench(args) -> int:
    sizes = args.sizes or list(sweeps.BENCH_SIZES)
    rows = sweeps.bench(sizes, seed=args.seed, repeats=args.repeats)
    slope = sweeps.fit_exponent(rows) if len(rows) >= 2 else float("nan")
    if args.format == "csv":
        print("size,rows,cols,ones,ns,decision")
        for r in rows:
            print(f"{r.size},{r.rows},{r.cols},{r.ones},{r.ns},{int(r.decision)}")
        print(f"# exponent={slope:.3f}")
    else:
        for r in rows:
            print(f"size={r.size:>8} rows={r.rows:>7} cols={r.cols:>7} ones={r.ones:>8} "
                  f"time={r.ns / 1e9:9.3f}s decision={'yes' if r.decision else 'no'}")
        print(f"exponent {slope:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordrep",
        description="Word-representability of co-bipartite graphs via circularly compatible ones.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("--graph", help="graph file ('-' for stdin)")
            p.add_argument("--matrix", help="matrix file; the graph is CG(M) with its own partition")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
        p.add_argument("--cap", type=int, default=None, help="size cap for exhaustive searches")
        p.add_argument("--authoritative", action="store_true",
                       help="exit 3 instead of omitting a witness or certificate")

    p = sub.add_parser("recognize", help="decide semi-transitivity and attach a witness")
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("orient", help="print a semi-transitive orientation")
    common(p)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("certify", help="print a forbidden induced subgraph")
    common(p)
    p.add_argument("--circle", action="store_true",
                   help="certify the circle / permutation property instead")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-word", help="check that a word represents a graph")
    common(p)
    p.add_argument("--word", help="word inline ('3 5 4 1') or a file")
    p.set_defaults(func=cmd_verify_word)

    p = sub.add_parser("oracle", help="run an exhaustive search")
    common(p)
    p.add_argument("--kind", choices=("orientation", "word", "cco"), default="orientation")
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a named graph, pattern or bracelet list")
    p.add_argument("--family", help="graph family, forbidden member, pattern or 'bracelets'")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--transpose", action="store_true", help="transpose a generated pattern")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="run the exhaustive equivalence suites")
    p.add_argument("suites", nargs="*", help=f"subset of: {', '.join(sweeps.SWEEPS)}")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="time the decision on generated yes-instances")
    p.add_argument("--sizes", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=sweeps.SEED)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; runs serially")
    p.add_argument("--format", choices=("text", "csv"), default="csv")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"error: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalError as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
