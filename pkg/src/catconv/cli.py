"""Command-line entry point.

Exit codes: 0 success, 1 identity check found a counterexample,
2 usage or domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from catconv import bijections, core
from catconv.core import DomainError
from catconv.enumeration import GeneratorConfig, count_k_in_n_bruteforce, generate
from catconv.model import Diagonal, DissectionError, KInN, ParseError, parse, serialize
from catconv.render import five_in_twelve, render_svg
from catconv.verify import IDENTITIES, verify_identity

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _triangulations(k, n):
    if n < 3:
        raise DomainError(f"triangulations need n >= 3, got n={n}")
    return core.catalan(n - 2)


COUNTS = {
    "triangulations": _triangulations,
    "k_in_n": lambda k, n: count_k_in_n_bruteforce(k, n),
    "convolution_lhs": core.convolution_lhs,
    "convolution_rhs": core.convolution_rhs,
    "f_closed": core.f_closed,
    "avg_cycles": core.average_cycles_closed,
}
NEEDS_K = set(COUNTS) - {"triangulations"}


class UsageError(Exception):
    pass


def _text_line(x) -> str:
    D = x.dissection if isinstance(x, KInN) else x
    diags = " ".join(f"{a}-{b}" for a, b in D.diagonals) or "-"
    line = f"n={D.n} diagonals={diags}"
    if isinstance(x, KInN):
        line += " face=" + ",".join(map(str, x.marked_face))
    return line


def _read_input(src: str) -> str:
    if src.lstrip().startswith("{"):
        return src
    if src == "-":
        return sys.stdin.read()
    with open(src, encoding="utf-8") as fh:
        return fh.read()


def cmd_count(args) -> int:
    if args.what in NEEDS_K and args.k is None:
        raise UsageError(f"count {args.what} needs -k")
    value = COUNTS[args.what](args.k, args.n)
    print(value)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.kind == "k_in_n" and args.k is None:
        raise UsageError("enumerate k_in_n needs -k")
    k = args.k if args.kind == "k_in_n" else None
    cfg = GeneratorConfig(n=args.n, k=k, limit=args.limit)
    fmt = serialize if args.format == "json" else _text_line
    out = sys.stdout
    for item in generate(cfg):
        out.write(fmt(item) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    ranges = {
        key: getattr(args, key)
        for key in ("n_min", "n_max", "k_min", "k_max", "q_min", "q_max")
        if getattr(args, key) is not None
    }
    report = verify_identity(args.identity, workers=args.workers, **ranges)
    if args.format == "json":
        print(json.dumps(report.to_obj(), separators=(",", ":")))
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FALSE


def cmd_render(args) -> int:
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    svg = render_svg(parse(text), labels=not args.no_labels)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_figure(args) -> int:
    print(serialize(five_in_twelve()))
    return EXIT_OK


def cmd_decompose(args) -> int:
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    x = parse(text)
    if not isinstance(x, KInN):
        raise UsageError("decompose needs a marked_face")
    if args.vertex is not None:
        d = bijections.vertex_mark_forward(bijections.VertexMarkedKInN(x, args.vertex))
    elif args.diagonal is not None:
        d = bijections.diagonal_mark_forward(bijections.DiagonalMarkedKInN(x, Diagonal(*sorted(args.diagonal))))
    else:
        raise UsageError("decompose needs --vertex or --diagonal")
    print(bijections.dumps(d))
    return EXIT_OK


def cmd_compose(args) -> int:
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    try:
        d = bijections.loads(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed decomposition: {exc}") from exc
    if isinstance(d, bijections.VertexDecomposition):
        x = bijections.vertex_mark_inverse(d)
        print(json.dumps({"marked_vertex": x.marked_vertex, "base": json.loads(serialize(x.base))}, separators=(",", ":")))
    else:
        x = bijections.diagonal_mark_inverse(d)
        print(json.dumps({"marked_diagonal": list(x.marked_diagonal), "base": json.loads(serialize(x.base))}, separators=(",", ":")))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catconv", description="Catalan convolutions and k-in-n polygon dissections.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="print an exact count")
    c.add_argument("what", choices=sorted(COUNTS))
    c.add_argument("-k", type=int)
    c.add_argument("-n", type=int, required=True)
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="list every triangulation or k-in-n dissection")
    e.add_argument("kind", choices=["triangulations", "k_in_n"])
    e.add_argument("-k", type=int)
    e.add_argument("-n", type=int, required=True)
    e.add_argument("--limit", type=int)
    e.add_argument("--format", choices=["json", "text"], default="json")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check an identity on a parameter grid")
    v.add_argument("identity", choices=list(IDENTITIES))
    for name in ("n", "k", "q"):
        v.add_argument(f"--{name}-min", type=int)
        v.add_argument(f"--{name}-max", type=int)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="draw a dissection as SVG")
    r.add_argument("input", help="dissection file, '-' for stdin, or inline JSON")
    r.add_argument("-o", "--output", help="SVG path (default stdout)")
    r.add_argument("--no-labels", action="store_true")
    r.set_defaults(func=cmd_render)

    f = sub.add_parser("figure", help="print the sample 5-in-12 dissection")
    f.set_defaults(func=cmd_figure)

    d = sub.add_parser("decompose", help="apply a marked-vertex or marked-diagonal map")
    d.add_argument("input", help="k-in-n dissection file, '-' for stdin, or inline JSON")
    g = d.add_mutually_exclusive_group()
    g.add_argument("--vertex", type=int)
    g.add_argument("--diagonal", type=int, nargs=2, metavar=("A", "B"))
    d.set_defaults(func=cmd_decompose)

    m = sub.add_parser("compose", help="invert a decomposition printed by 'decompose'")
    m.add_argument("input", help="decomposition file, '-' for stdin, or inline JSON")
    m.set_defaults(func=cmd_compose)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, DissectionError, ParseError, bijections.BijectionError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
