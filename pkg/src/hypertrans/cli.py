"""Command-line front end.

Data goes to stdout, progress and diagnostics to stderr.  Exit codes:
0 success, 1 a finding or violation, 2 bad input.
"""

from __future__ import annotations

import argparse
import io
import sys
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from typing import Iterator, Sequence, TextIO

from .core import format_hypergraph, parse_hypergraph
from .errors import ContractViolation, InputError, ParseError
from .extremal import Tag, classify, gen_E, gen_T
from .multigraph import (chromatic_index_exact, edge_color_shannon, format_multigraph, make_shannon,
                         max_matching, parse_multigraph, shannon_bound)
from .reduction import to_conflict_multigraph
from .transversal import cm_bound, format_fraction, meets_bound_with_equality, tau_exact
from .verify import SweepConfig, theorem1_sweep, theorem2_sweep, vizing_sweep

EXIT_OK, EXIT_FINDING, EXIT_INPUT = 0, 1, 2


class _Fail(Exception):
    def __init__(self, message: str):
        super().__init__(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(f"{path}: {exc.strerror}") from None


@contextmanager
def _output(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8")
    except OSError as exc:
        raise _Fail(f"{path}: {exc.strerror}") from None
    with fh:
        yield fh


def _hypergraph(path: str):
    try:
        return parse_hypergraph(_read(path))
    except ParseError as exc:
        raise _Fail(f"{path}:{exc}") from None


def _multigraph(path: str):
    try:
        return parse_multigraph(_read(path))
    except ParseError as exc:
        raise _Fail(f"{path}:{exc}") from None


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


# -- subcommands -----------------------------------------------------------

def cmd_tau(args) -> int:
    _, H = _hypergraph(args.file)
    tau, T = tau_exact(H)
    with _output(args.output) as out:
        out.write(f"{tau}\n{' '.join(map(str, T.vertices))}\n")
    return EXIT_OK


def cmd_bound(args) -> int:
    _, H = _hypergraph(args.file)
    q = cm_bound(H, args.k)
    print(f"{format_fraction(q)} equality={_bool(meets_bound_with_equality(H, args.k))}")
    return EXIT_OK


def cmd_classify(args) -> int:
    _, H = _hypergraph(args.file)
    cls = classify(H, args.k)
    print(cls.describe())
    if cls.tau is not None:
        _, T = tau_exact(H)
        print("witness " + " ".join(map(str, T.vertices)))
    return EXIT_FINDING if cls.tag is Tag.THEOREM_VIOLATION else EXIT_OK


def cmd_reduce(args) -> int:
    _, H = _hypergraph(args.file)
    C = to_conflict_multigraph(H, args.k)
    lines = [f"{i} : {w}" for i, w in sorted(C.witness.items())]
    with _output(args.output) as out:
        out.write(format_multigraph(C.graph))
        if args.witness is None:
            out.writelines(f"# {line}\n" for line in lines)
    if args.witness is not None:
        with _output(args.witness) as out:
            out.writelines(f"{line}\n" for line in lines)
    return EXIT_OK


def cmd_color(args) -> int:
    G = _multigraph(args.file)
    if G.size == 0:
        print("colors=0 bound=0 within_bound=true")
        return EXIT_OK
    top = shannon_bound(G.max_degree)
    coloring = edge_color_shannon(G)
    if args.exact:
        chi, coloring = chromatic_index_exact(G)
    used = coloring.used_colors()
    ok = coloring.is_proper() and used <= top
    head = f"colors={used} bound={top} within_bound={_bool(ok)}"
    if args.exact:
        head += f" chromatic_index={chi}"
    print(head)
    for (u, v), cols in sorted(coloring.colors.items()):
        print(f"{u} {v} " + " ".join(map(str, cols)))
    return EXIT_OK if ok else EXIT_FINDING


def cmd_match(args) -> int:
    G = _multigraph(args.file)
    M = max_matching(G)
    print(f"size={len(M)}")
    for u, v in M.pairs:
        print(f"{u} {v}")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "shannon":
        d = args.d if args.d is not None else args.k
        if d is None:
            raise _Fail("gen shannon needs -d or -k")
        text = format_multigraph(make_shannon(d))
    else:
        if args.k is None:
            raise _Fail(f"gen {args.family} needs -k")
        H = gen_E(args.k) if args.family == "ek" else gen_T(args.k)
        text = format_hypergraph(H, args.k)
    with _output(args.output) as out:
        out.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    def progress(count: int) -> None:
        print(f"# {count} instances", file=sys.stderr, flush=True)

    common = {"checkpoint": args.checkpoint, "progress": progress, "workers": args.workers}
    if args.theorem == "t1":
        if args.k is None or args.nmax is None or args.mmax is None:
            raise _Fail("verify t1 needs -k, --nmax and --mmax")
        cfg = SweepConfig(args.k, args.nmax, args.mmax, allow_multi_edges=args.multi is not None,
                          max_multiplicity=args.multi or 2, time_budget=args.budget)
        report = theorem1_sweep(cfg, exact=args.exact, **common)
    else:
        if args.d is None or args.vmax is None or args.mmax is None:
            raise _Fail(f"verify {args.theorem} needs -d, --vmax and --mmax")
        sweep = theorem2_sweep if args.theorem == "t2" else vizing_sweep
        report = sweep(args.d, args.vmax, args.mmax, time_budget=args.budget, **common)
    sys.stdout.write(report.render())
    return EXIT_OK if report.violations == 0 else EXIT_FINDING


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypertrans", description="Hypergraph transversal toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name: str, helptext: str, needs_k: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file", help="input file, '-' for stdin")
        if needs_k:
            sp.add_argument("-k", type=int, required=True, help="uniformity")
        return sp

    sp = with_file("tau", "transversal number and a witness")
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_tau)
    with_file("bound", "exact bound value and equality", True).set_defaults(func=cmd_bound)
    with_file("classify", "extremal classification", True).set_defaults(func=cmd_classify)
    sp = with_file("reduce", "conflict multigraph and witness map", True)
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--witness", help="write the witness map here instead of as trailing comments")
    sp.set_defaults(func=cmd_reduce)
    sp = with_file("color", "edge colouring within the Shannon bound")
    sp.add_argument("--exact", action="store_true", help="use an optimal colouring")
    sp.set_defaults(func=cmd_color)
    with_file("match", "maximum matching").set_defaults(func=cmd_match)

    sp = sub.add_parser("gen", help="write a standard instance")
    sp.add_argument("family", choices=["ek", "tk", "shannon"])
    sp.add_argument("-k", type=int)
    sp.add_argument("-d", type=int)
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="exhaustive sweep")
    sp.add_argument("theorem", choices=["t1", "t2", "vizing"])
    sp.add_argument("-k", type=int)
    sp.add_argument("-d", type=int)
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--vmax", type=int)
    sp.add_argument("--mmax", type=int)
    sp.add_argument("--multi", type=int, metavar="MAX_MULTIPLICITY")
    sp.add_argument("--budget", type=float, metavar="SECONDS")
    sp.add_argument("--checkpoint", metavar="PATH")
    sp.add_argument("--exact", action="store_true", help="compute tau for every instance")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str], stdin: str = "") -> tuple[int, str, str]:
    """Run one command in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    saved = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = saved
    return code, out.getvalue(), err.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (InputError, ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
