"""Command-line front end: ``blowup {spectrum,blowup,verify}``.

Exit codes: 0 success, 1 internal failure, 2 bad input, 3 verification failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .eigen import DEFAULT_TOL, Spectrum, oracle_spectrum
from .formats import GraphFormatError, clean_spectrum, parse_graph, report_to_dict, write_graph6, write_report
from .graph import Graph, blow_up
from .verify import FAMILIES, family_matrix, formula_spectrum, random_suite, verify_blowup

log = logging.getLogger("blowup")

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


def format_spectrum(values, digits: int = 12) -> str:
    return " ".join(f"{x:.{digits}g}" for x in clean_spectrum(values))


def _json_values(values) -> list[float]:
    return [float(x) for x in format_spectrum(values).split()]


def load_input(args: argparse.Namespace) -> tuple[str, Graph]:
    fmt = args.format
    if args.graph is not None:
        graph_id, text = args.graph, args.graph
    elif args.input in (None, "-"):
        graph_id, text = "stdin", sys.stdin.read()
    else:
        path = Path(args.input)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from exc
        graph_id = path.name
        if fmt is None and path.suffix in (".g6", ".graph6"):
            fmt = "graph6"
    try:
        return graph_id, parse_graph(text, fmt)
    except GraphFormatError as exc:
        raise InputError(str(exc)) from exc


def _families(selector: str) -> tuple[str, ...]:
    return FAMILIES if selector == "all" else (selector,)


def _emit_spectra(args, rows: list[tuple[str, Spectrum]], extra: dict | None = None) -> None:
    if args.output == "json":
        payload = {
            "complement": args.complement,
            "spectra": {family: _json_values(spec) for family, spec in rows},
        }
        payload.update(extra or {})
        print(json.dumps(payload, indent=2))
        return
    for family, spec in rows:
        prefix = f"{family}: " if len(rows) > 1 else ""
        print(prefix + format_spectrum(spec))
    for key, value in (extra or {}).items():
        print(f"{key}: {value}")


def cmd_spectrum(args: argparse.Namespace) -> int:
    _, g = load_input(args)
    rows = [(f, oracle_spectrum(family_matrix(g, f, args.complement))) for f in _families(args.family)]
    _emit_spectra(args, rows)
    return EXIT_OK


def cmd_blowup(args: argparse.Namespace) -> int:
    _, g = load_input(args)
    rows = [(f, formula_spectrum(g, args.t, f, args.complement)) for f in _families(args.family)]
    extra = {}
    if args.emit_graph:
        if g.n * args.t <= 62:
            extra["graph6"] = write_graph6(blow_up(g, args.t))
        else:
            log.warning("blow-up has %d vertices; graph6 output limited to 62", g.n * args.t)
    _emit_spectra(args, rows, extra)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.random:
        cases = list(random_suite(args.random, args.seed))
    else:
        cases = [load_input(args)]
    reports = [verify_blowup(g, args.t, args.tol, graph_id) for graph_id, g in cases]

    if args.output == "json":
        if args.random:
            print(json.dumps([report_to_dict(r) for r in reports], indent=2))
        else:
            print(write_report(reports[0]))
    else:
        for r in reports:
            dev = max((f.max_deviation for f in r.families), default=0.0)
            passed = sum(f.passed for f in r.families)
            status = "PASS" if r.overall_pass else "FAIL"
            print(
                f"{status} {r.graph_id} n={r.n} t={r.t} families={passed}/{len(r.families)} "
                f"max_dev={dev:.3e} max_residual={r.eigenvector_residuals:.3e}"
            )
    return EXIT_OK if all(r.overall_pass for r in reports) else EXIT_VERIFY


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blowup",
        description="Spectra of graph blow-ups: closed forms checked against a Jacobi eigensolver.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("input", nargs="?", help="graph file ('-' or omitted: stdin)")
    io_opts.add_argument("-g", "--graph", help="inline graph (graph6 string unless --format says otherwise)")
    io_opts.add_argument("--format", choices=("graph6", "edgelist"),
                         help="input format (default: .g6 -> graph6, else sniffed)")
    io_opts.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    io_opts.add_argument("-o", "--output", choices=("text", "json"), default="text")

    family_opts = argparse.ArgumentParser(add_help=False)
    family_opts.add_argument("--family", choices=FAMILIES + ("all",), default="all")
    family_opts.add_argument("--complement", action="store_true", help="use the complement graph")

    p = sub.add_parser("spectrum", parents=[io_opts, family_opts],
                       help="oracle spectrum of the input graph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("blowup", parents=[io_opts, family_opts],
                       help="closed-form spectrum of the blow-up G^(t)")
    p.add_argument("-t", type=_positive_int, default=2, help="blow-up order")
    p.add_argument("--emit-graph", action="store_true", help="also print the blow-up in graph6")
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("verify", parents=[io_opts],
                       help="check all five closed forms and eigenvectors against the oracle")
    p.add_argument("-t", type=_positive_int, default=2, help="blow-up order")
    p.add_argument("--random", type=_positive_int, metavar="COUNT",
                   help="verify COUNT random graphs instead of an input graph")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"blowup: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:
        log.debug("traceback", exc_info=True)
        print(f"blowup: internal failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
