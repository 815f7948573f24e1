"""Command line entry point: ``oddhole {check,oracle,gen,bench,validate}``.

Exit codes: 0 ran with verdict NO (or a non-verdict command succeeded),
10 verdict YES, 2 input not bull-free, 3 parse error, 4 oracle cap
exceeded, 5 validation failure, 64 bad command line.

Machine output (``--machine``) is one line:

    ODD-HOLE <k>: <v1> ... <vk>
    NO-ODD-HOLE
    NOT-BULL-FREE: <t1> <t2> <t3> <p1> <p2>

Vertices are 0-based for graph6 input and 1-based for DIMACS input, i.e.
numbered as in the input file.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import oracle
from .bench import run_bench
from .driver import DetectOptions, InputNotBullFree, detect_odd_hole_bullfree
from .formats import ParseError, is_comment, parse_dimacs, parse_graph6, read_manifest, write_manifest
from .generators import GenSpec, GeneratorError, gen_bullfree, gen_jewel, gen_planted_odd_hole, gen_pyramid, gen_random_graph
from .graph import Graph
from .validation import validate_entries

EXIT_NO = 0
EXIT_YES = 10
EXIT_NOT_BULL_FREE = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_VALIDATION = 5
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii", errors="replace") as fh:
        return fh.read()


def _infer_format(path: str, given: str | None) -> str:
    if given:
        return given
    return "dimacs" if path.lower().endswith((".col", ".dimacs")) else "graph6"


def load_graph(path: str, fmt: str | None = None) -> tuple[Graph, int]:
    """Read the single graph in ``path``; returns it with the vertex offset
    used when printing (1 for DIMACS)."""
    fmt = _infer_format(path, fmt)
    text = _read_text(path)
    if fmt == "dimacs":
        return parse_dimacs(text), 1
    lines = [
        (i, ln.rstrip("\r\n"))
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not is_comment(ln.rstrip("\r\n"))
    ]
    if not lines:
        raise ParseError("no graph in input")
    if len(lines) > 1:
        raise ParseError("expected exactly one graph6 line", line=lines[1][0])
    lineno, line = lines[0]
    try:
        return parse_graph6(line), 0
    except ParseError as exc:
        raise ParseError(exc.reason, exc.offset, lineno) from None


def _hole_line(hole, offset: int) -> str:
    return f"ODD-HOLE {len(hole)}: " + " ".join(str(v + offset) for v in hole)


def _cmd_check(args) -> int:
    g, offset = load_graph(args.file, args.format)
    opts = DetectOptions(verify_bull_free=not args.no_verify_input)
    try:
        verdict = detect_odd_hole_bullfree(g, opts)
    except InputNotBullFree as exc:
        print("NOT-BULL-FREE: " + " ".join(str(v + offset) for v in exc.witness.vertices))
        return EXIT_NOT_BULL_FREE
    if args.machine:
        print(_hole_line(verdict.witness, offset) if verdict.found else "NO-ODD-HOLE")
    else:
        if verdict.found:
            line = _hole_line(verdict.witness, offset)
            print(line if args.witness else line.split(":")[0])
        else:
            print("NO-ODD-HOLE")
        kinds = [e.kind for e in verdict.trace]
        print(
            f"n={g.n} m={g.m}; splits={kinds.count('split')} "
            f"base-cases={kinds.count('base-case')} c5={kinds.count('c5-found')}"
        )
        if "unverified-precondition" in kinds and not verdict.found:
            print("note: bull-freeness was not verified, NO is only meaningful for bull-free input")
    return EXIT_YES if verdict.found else EXIT_NO


def _cmd_oracle(args) -> int:
    g, offset = load_graph(args.file, args.format)
    hole = oracle.oracle_find_odd_hole(g, cap=args.cap)
    if hole is None:
        print("NO-ODD-HOLE")
        return EXIT_NO
    print(_hole_line(hole, offset))
    return EXIT_YES


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _cmd_gen(args) -> int:
    meta = {"kind": args.kind, "seed": args.seed, "n": args.n, "density": args.density, "count": args.count}
    extra = {}
    if args.substitutions is not None:
        extra["substitutions"] = args.substitutions
        meta["substitutions"] = args.substitutions
    if args.path_lengths:
        if len(args.path_lengths) != 3:
            raise GeneratorError("--path-lengths needs three values")
        extra["path_lengths"] = tuple(args.path_lengths)
        meta["path_lengths"] = ",".join(map(str, args.path_lengths))
    if args.f_size is not None:
        extra["f_size"] = args.f_size
        meta["f_size"] = args.f_size
    if args.kind == "planted":
        meta["k"] = args.k

    def one(i: int) -> Graph:
        spec = GenSpec(seed=args.seed + i, n=args.n, density=args.density, piece_max=args.piece_max, **extra)
        if args.kind == "bullfree":
            return gen_bullfree(spec)
        if args.kind == "planted":
            return gen_planted_odd_hole(args.k, spec)
        if args.kind == "pyramid":
            return gen_pyramid(spec)
        if args.kind == "jewel":
            return gen_jewel(spec)
        return gen_random_graph(spec)

    graphs = [one(i) for i in range(args.count)]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            write_manifest(fh, graphs, meta)
    else:
        write_manifest(sys.stdout, graphs, meta)
    return 0


def _cmd_bench(args) -> int:
    report = run_bench(
        args.sizes, seed=args.seed, trials=args.trials, density=args.density,
        verify_bull_free=not args.no_verify_input,
    )
    print("\n".join(report.lines()))
    return 0


def _cmd_validate(args) -> int:
    with open(args.corpus, encoding="ascii", errors="replace") as fh:
        report = validate_entries(read_manifest(fh), cap=args.cap)
    print("\n".join(report.lines()))
    return 0 if report.ok else EXIT_VALIDATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oddhole", description="Odd-hole detection in bull-free graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="run the polynomial-time detector")
    p.add_argument("file", help="graph file, '-' for stdin")
    p.add_argument("--format", choices=["graph6", "dimacs"])
    p.add_argument("--no-verify-input", action="store_true", help="skip the bull-freeness check")
    p.add_argument("--witness", action="store_true", help="list the hole's vertices")
    p.add_argument("--machine", action="store_true", help="print exactly one verdict line")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("oracle", help="brute-force verdict for small graphs")
    p.add_argument("file")
    p.add_argument("--format", choices=["graph6", "dimacs"])
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="write a corpus manifest")
    p.add_argument("kind", choices=["bullfree", "planted", "pyramid", "jewel", "er"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--k", type=int, default=7, help="hole length for 'planted'")
    p.add_argument("--substitutions", type=int)
    p.add_argument("--piece-max", type=int, default=4)
    p.add_argument("--path-lengths", type=_int_list)
    p.add_argument("--f-size", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time the detector on generated bull-free graphs")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--no-verify-input", action="store_true")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("validate", help="run the theorem checks over a corpus")
    p.add_argument("corpus")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=_cmd_validate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"PARSE-ERROR: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"PARSE-ERROR: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except oracle.OracleCapExceeded as exc:
        print(f"ORACLE-CAP-EXCEEDED: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GeneratorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
