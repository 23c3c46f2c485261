"""Command-line front end: ``twotrans <command> ...``.

Exit status: 0 on success, 1 when a certificate or partition is rejected,
2 on usage, parse or domain errors (message on stderr).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import bounds, graph, reduction
from .errors import BudgetExceeded, ParseError, TwoTransError
from .oracle import DEFAULT_BUDGET, emit_partition, first_violation, parse_partition
from .recognize import has_p3
from .solve import METHODS, solve


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit itself; route through main instead
        raise _Usage(f"{self.prog}: {message}")


def _read_graph(path: str, fmt: str | None) -> graph.Graph:
    if fmt is None:
        fmt = "g6" if path.endswith(".g6") else "el"
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "g6":
        return graph.parse_graph6(data)
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise ParseError("edge list must be ASCII") from None
    return graph.parse_edge_list(text)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _cmd_solve(args, out) -> int:
    g = _read_graph(args.file, args.format)
    res = solve(g, args.method, args.budget)
    for i, comp in enumerate(res.components):
        out.write(f"component {i} {comp.method} tr2 {comp.k}\n")
    out.write(f"tr2 {res.k}\n")
    if args.witness is not None and g.n:
        _write(args.witness, emit_partition(res.witness(g.n), g.n), out)
    return 0


def _cmd_verify(args, out) -> int:
    g = _read_graph(args.file, args.format)
    p = parse_partition(_read_text(args.partition), g.n)
    bad = first_violation(g, p, 1 if args.transitive else 2)
    if bad is None:
        out.write("valid\n")
        return 0
    out.write("invalid %d %d %d\n" % bad)
    return 1


_FAMILIES: dict[str, tuple[int, Callable[..., graph.Graph]]] = {
    "path": (1, graph.path_graph),
    "cycle": (1, graph.cycle_graph),
    "complete": (1, graph.complete_graph),
    "complete-bipartite": (2, graph.complete_bipartite_graph),
    "cmbt": (1, lambda k: graph.generate_cmbt(k).graph),
    "near-complete-bipartite": (1, graph.generate_near_complete_bipartite),
    "random-tree": (2, graph.random_tree),
    "random-split": (2, graph.random_split),
    "random-chain": (2, graph.random_chain),
}


def _cmd_generate(args, out) -> int:
    arity, make = _FAMILIES[args.family]
    if len(args.params) != arity:
        raise _Usage(f"{args.family} takes {arity} integer parameter(s)")
    if args.family == "near-complete-bipartite" and args.params[0] >= 2:
        if graph.near_complete_bipartite_removed(args.params[0]) is None:
            sys.stderr.write(f"warning: t={args.params[0]} leaves no C4 to remove; emitting K_{{2,1}}\n")
    g = make(*args.params)
    text = graph.emit_graph6(g) if args.format == "g6" else graph.emit_edge_list(g)
    _write(args.out, text, out)
    return 0


def _cmd_reduce(args, out) -> int:
    g = _read_graph(args.file, args.format)
    build = reduction.build_chordal_gadget if args.variant == "chordal" else reduction.build_bipartite_gadget
    r = build(g)
    prefix = args.out or str(Path(args.file).with_suffix("")) + f".{args.variant}"
    Path(prefix + ".el").write_text(graph.emit_edge_list(r.gprime), encoding="ascii")
    Path(prefix + ".handles").write_text("".join(f"{name} {v}\n" for name, v in r.handles()), encoding="ascii")
    out.write(f"k {r.k}\nvertices {r.gprime.n}\nedges {r.gprime.m}\n")
    if args.variant == "bipartite":
        stated = reduction.stated_bipartite_vertex_count(g.n, g.m)
        out.write(f"note: 18m+18n+68 = {stated} undercounts the construction by the 2m A/B edge vertices\n")
    out.write(f"wrote {prefix}.el {prefix}.handles\n")
    return 0


def _cmd_bounds(args, out) -> int:
    g = _read_graph(args.file, args.format)
    cf = bounds.closed_form(g)
    out.write(f"delta_bound {bounds.delta_upper_bound(g)}\n")
    out.write(f"has_p3 {str(has_p3(g)).lower()}\n")
    out.write(f"closed_form {'none' if cf is None else cf}\n")
    return 0


def _cmd_certify(args, out) -> int:
    g = _read_graph(args.file, args.format)
    p = parse_partition(_read_text(args.partition), g.n)
    rep = bounds.certify(g, args.k, p)
    out.write(rep.render())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twotrans", description="Exact 2-transitivity of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("el", "g6"), help="graph file format (default: by extension, else el)")

    p = sub.add_parser("solve", parents=[fmt], help="compute Tr2 per component")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget for the brute-force search")
    p.add_argument("--witness", nargs="?", const="-", metavar="FILE", help="write a witness partition (stdout if no FILE)")
    p.add_argument("file")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("verify", parents=[fmt], help="check a partition file")
    p.add_argument("file")
    p.add_argument("partition")
    p.add_argument("--transitive", action="store_true", help="check plain transitivity instead")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("generate", help="emit a graph from a named family")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--format", choices=("el", "g6"), default="el")
    p.set_defaults(run=_cmd_generate)

    p = sub.add_parser("reduce", parents=[fmt], help="build a hardness gadget graph")
    p.add_argument("variant", choices=("chordal", "bipartite"))
    p.add_argument("file")
    p.add_argument("--out", metavar="PREFIX", help="output prefix (default: input stem + variant)")
    p.set_defaults(run=_cmd_reduce)

    p = sub.add_parser("bounds", parents=[fmt], help="degree bound, P3 flag and closed form")
    p.add_argument("file")
    p.set_defaults(run=_cmd_bounds)

    p = sub.add_parser("certify", parents=[fmt], help="check a claimed value and witness")
    p.add_argument("file")
    p.add_argument("partition")
    p.add_argument("k", type=int)
    p.set_defaults(run=_cmd_certify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out)
    except _Usage as exc:
        sys.stderr.write(f"{exc}\n")
    except (TwoTransError, BudgetExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
