"""
Command-line interface for webvac

This module provides the `webvac` command: conversions between tableaux,
matchings and webs, exhaustive verification, rendering, and the API server.
It can be run directly with "python -m webvac".

Every subcommand reads and writes the line formats of webvac.core.formats.
A file argument of "-" reads standard input. Results go to standard output and
logs to standard error. Exit status is 0 on success, 1 when a check fails and
2 on bad input.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from webvac import __version__
from webvac.core.config import LOG_LEVELS, get_enumeration_budget, get_log_level
from webvac.core.equivalence import apply_convention_34
from webvac.core.errors import InputError, InternalCheckError, UnsupportedKind
from webvac.core.formats import (
    format_ncm,
    format_report,
    format_tableau,
    format_web,
    parse_any,
    parse_ncm,
    parse_tableau,
    parse_web,
)
from webvac.core.matching import ncm_from_tableau, reflect_ncm, rotated_ncm_of
from webvac.core.render import render
from webvac.core.tableau import count_syt, enumerate_syt, evacuate, evacuate_fast, promote_n
from webvac.core.verify import default_shapes, run_suite
from webvac.core.web import flip_edges, reflect_web, standardize_boundary, web_from_ncm
from webvac.models.matching import MulticoloredNCM
from webvac.models.render import DEFAULT_PALETTE, RenderFormat, RenderKind, RenderSpec
from webvac.models.tableau import Shape, StandardTableau
from webvac.models.web import WebGraph

logger = logging.getLogger("webvac-cli")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.StreamHandler(sys.stderr),
        ],
    )
    logging.getLogger().setLevel(getattr(logging, level.upper()))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(text: str, output: Optional[str] = None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {output}")


def _shape(values: Sequence[int]) -> Shape:
    n, k = values
    if n < 1 or k < 1:
        raise InputError(f"shape must be positive, got {n}x{k}")
    return Shape(n=n, k=k)


def _edge_ids(values: Sequence[str]) -> List[str]:
    return [part for value in values for part in value.split(",") if part]


def _palette(value: str) -> Tuple[str, ...]:
    colors = tuple(c.strip() for c in value.split(",") if c.strip())
    if not colors:
        raise InputError("palette must name at least one color")
    return colors


def _standard_web(t: StandardTableau) -> WebGraph:
    return standardize_boundary(web_from_ncm(ncm_from_tableau(t)))


def cmd_evacuate(args: argparse.Namespace) -> int:
    t = parse_tableau(_read(args.file))
    _write(format_tableau(evacuate_fast(t) if args.fast else evacuate(t)))
    return EXIT_OK


def cmd_promote(args: argparse.Namespace) -> int:
    t = parse_tableau(_read(args.file))
    _write(format_tableau(promote_n(t, args.steps)))
    return EXIT_OK


def cmd_ncm(args: argparse.Namespace) -> int:
    t = parse_tableau(_read(args.file))
    _write(format_ncm(rotated_ncm_of(t) if args.rotated else ncm_from_tableau(t)))
    return EXIT_OK


def cmd_web(args: argparse.Namespace) -> int:
    t = parse_tableau(_read(args.file))
    w = web_from_ncm(ncm_from_tableau(t))
    _write(format_web(w if args.raw else standardize_boundary(w)))
    return EXIT_OK


def cmd_reflect(args: argparse.Namespace) -> int:
    text = _read(args.file)
    if args.kind == "ncm":
        _write(format_ncm(reflect_ncm(parse_ncm(text))))
    else:
        _write(format_web(reflect_web(parse_web(text))))
    return EXIT_OK


def cmd_flip(args: argparse.Namespace) -> int:
    w = parse_web(_read(args.file))
    _write(format_web(flip_edges(w, _edge_ids(args.edges))))
    return EXIT_OK


def cmd_convention(args: argparse.Namespace) -> int:
    w = parse_web(_read(args.file))
    _write(format_web(apply_convention_34(w)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    shapes = [_shape(s) for s in args.shape] if args.shape else default_shapes()
    budget = args.budget if args.budget is not None else get_enumeration_budget()
    reports = run_suite(shapes, budget=budget, workers=args.workers)

    if args.json:
        _write("".join(report.model_dump_json() + "\n" for report in reports))
    else:
        _write(format_report(reports))

    if any(report.error is not None for report in reports):
        return EXIT_INPUT_ERROR
    if not all(report.ok for report in reports):
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else get_enumeration_budget()
    for t in enumerate_syt(_shape(args.shape), budget):
        _write(format_tableau(t))
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    _write(f"{count_syt(_shape(args.shape))}\n")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    if args.scale <= 0:
        raise InputError(f"scale must be positive, got {args.scale}")
    obj = parse_any(_read(args.file))
    kind = RenderKind(args.kind)
    if isinstance(obj, StandardTableau):
        obj = ncm_from_tableau(obj) if kind == RenderKind.NCM else _standard_web(obj)
    elif kind == RenderKind.NCM and not isinstance(obj, MulticoloredNCM):
        raise UnsupportedKind("--kind ncm needs a tableau or matching file")
    elif kind == RenderKind.WEB and not isinstance(obj, WebGraph):
        raise UnsupportedKind("--kind web needs a tableau or web file")

    spec = RenderSpec(
        kind=kind,
        format=RenderFormat(args.format),
        scale=args.scale,
        palette=_palette(args.palette) if args.palette else DEFAULT_PALETTE,
    )
    _write(render(obj, spec), args.output)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from webvac.server import start_server

    try:
        start_server(host=args.host, port=args.port, log_level=args.log_level, reload=args.reload)
    except KeyboardInterrupt:
        logger.info("Server stopped by user")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="webvac",
        description="webvac - evacuation, matchings and webs of rectangular tableaux",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"webvac {__version__}")
    parser.add_argument("--log-level", default=get_log_level(), choices=LOG_LEVELS, help="Log level to use")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, handler: Callable[[argparse.Namespace], int], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.set_defaults(handler=handler)
        return p

    p = command("evacuate", cmd_evacuate, "Evacuate a tableau")
    p.add_argument("file", help="Tableau file, or - for stdin")
    p.add_argument("--fast", action="store_true", help="Rotate and complement instead of sliding")

    p = command("promote", cmd_promote, "Promote a tableau")
    p.add_argument("file", help="Tableau file, or - for stdin")
    p.add_argument("--steps", type=int, default=1, help="Number of promotions")

    p = command("ncm", cmd_ncm, "Multicolored matching of a tableau")
    p.add_argument("file", help="Tableau file, or - for stdin")
    p.add_argument("--rotated", action="store_true", help="Build the rotated matching")

    p = command("web", cmd_web, "Web of a tableau")
    p.add_argument("file", help="Tableau file, or - for stdin")
    p.add_argument("--raw", action="store_true", help="Skip boundary standardization")

    p = command("reflect", cmd_reflect, "Reflect a matching or a web")
    p.add_argument("file", help="Matching or web file, or - for stdin")
    p.add_argument("--kind", choices=["ncm", "web"], required=True, help="Kind of the input")

    p = command("flip", cmd_flip, "Flip edges of a web")
    p.add_argument("file", help="Web file, or - for stdin")
    p.add_argument("--edges", nargs="+", required=True, help="Edge ids such as i3-i7, comma or space separated")

    p = command("convention", cmd_convention, "Rewrite an sl3/sl4 web in its customary form")
    p.add_argument("file", help="Web file, or - for stdin")

    p = command("verify", cmd_verify, "Check every tableau of the given shapes")
    p.add_argument("--shape", nargs=2, type=int, action="append", metavar=("N", "K"),
                   help="Shape to verify; repeatable; omit to verify the default shape set")
    p.add_argument("--budget", type=int, default=None, help="Enumeration budget per shape")
    p.add_argument("--workers", type=int, default=1, help="Worker processes per shape")
    p.add_argument("--json", action="store_true", help="One JSON report per line")

    p = command("enumerate", cmd_enumerate, "List every tableau of a shape")
    p.add_argument("--shape", nargs=2, type=int, required=True, metavar=("N", "K"), help="Shape")
    p.add_argument("--budget", type=int, default=None, help="Enumeration budget")

    p = command("count", cmd_count, "Count the tableaux of a shape")
    p.add_argument("--shape", nargs=2, type=int, required=True, metavar=("N", "K"), help="Shape")

    p = command("render", cmd_render, "Draw a matching or a web")
    p.add_argument("file", help="Tableau, matching or web file, or - for stdin")
    p.add_argument("--kind", choices=[k.value for k in RenderKind], required=True, help="What to draw")
    p.add_argument("--format", choices=[f.value for f in RenderFormat], default="svg", help="Output format")
    p.add_argument("-o", "--output", default="-", help="Output file, or - for stdout")
    p.add_argument("--scale", type=float, default=1.0, help="Scale factor")
    p.add_argument("--palette", default=None, help="Comma-separated colors by arc color")

    p = command("serve", cmd_serve, "Start the API server")
    p.add_argument("--host", default="0.0.0.0", help="Host to bind the server to")
    p.add_argument("--port", type=int, default=8000, help="Port to bind the server to")
    p.add_argument("--reload", action="store_true", help="Enable auto-reload (for development)")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the webvac CLI.

    Args:
        argv: arguments without the program name; defaults to sys.argv[1:]

    Returns:
        int: exit status
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)

    try:
        return args.handler(args)
    except (InputError, OSError) as e:
        logger.debug(f"{args.command} rejected its input", exc_info=True)
        print(f"webvac {args.command}: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InternalCheckError as e:
        logger.error(f"{args.command} failed an internal check: {e}")
        print(f"webvac {args.command}: check failed: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
