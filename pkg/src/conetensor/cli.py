# src/conetensor/cli.py
"""Command-line front end: ``conetensor <command> ...``."""

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .bodies import Polytope
from .cone import Cone
from .config import ConfigManager
from .constants import (
    EXIT_CHECK_FAILED,
    EXIT_DD_LIMIT,
    EXIT_OK,
    EXIT_USAGE,
    REPORT_FORMATS,
    SUITE_ALIASES,
    SUITE_ALL,
    SUITE_NAMES,
    ReportMessages,
)
from .corpus import cone_names, polytope_names
from .documents import dumps, emit_cone, emit_polytope, vectors_to_json
from .exactla import to_fraction
from .exceptions import ConeTensorError, DocumentError, DoubleDescriptionLimitError, RunCancelledError
from .main import (
    FACE_OPS,
    check_backend,
    configure_logging,
    dual_backend,
    face_ops_backend,
    hull_backend,
    lineality_backend,
    rank1_backend,
    rays_backend,
    tensor_backend,
    verify_backend,
)
from .reports import render_json, render_text, write_excel

logger = logging.getLogger(__name__)

VECTOR_TOKEN = re.compile(r"^-\d[\d/]*(,\s*-?\d[\d/]*)*$")


# --- Argument parsing helpers ---
def parse_vector(text: str) -> tuple:
    """``"1,-1,1/2"`` -> exact rational vector; ``""`` is the empty vector."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(to_fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed vector '{text}'") from None


def parse_face(text: str) -> List[int]:
    """Ray indices ``"0,2"``; ``"-"`` or ``""`` is the minimal face."""
    text = text.strip()
    if text in ("", "-"):
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed face '{text}' (expected ray indices like 0,2)") from None


def _output_options(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--format", choices=REPORT_FORMATS, default=default, help="output format (default from settings)")
    parser.add_argument("--output", type=Path, default=default, help="write the result to this file")
    parser.add_argument("-v", "--verbose", action="store_true", default=default or False,
                        help="debug logging and passing checks in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conetensor",
        description="Exact tensor products of polyhedral cones and verification suites.",
    )
    _output_options(parser, None)
    # Accepted after the subcommand too; SUPPRESS keeps an absent option from resetting the top-level value
    common = argparse.ArgumentParser(add_help=False)
    _output_options(common, argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    p = command("dual", "dual cone")
    p.add_argument("cone", help="cone JSON file or bundled name")

    p = command("tensor", "projective (min) or injective (max) tensor cone")
    p.add_argument("--kind", choices=("min", "max"), required=True)
    p.add_argument("left")
    p.add_argument("right")

    p = command("rays", "extremal rays and lineality basis")
    p.add_argument("cone")

    p = command("lineality", "lineality space")
    p.add_argument("cone")

    p = command("check", "proper/generating/simplex flags")
    p.add_argument("cone")

    p = command("face-ops", "orface/andface (min) or scor/scand (max) of two faces")
    p.add_argument("--op", choices=FACE_OPS, required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--m", type=parse_face, default=[], help="ray indices of the left face, '-' for minimal")
    p.add_argument("--n", type=parse_face, default=[], help="ray indices of the right face, '-' for minimal")

    p = command("hull", "convex hull of the tensor products of two polytopes")
    p.add_argument("left")
    p.add_argument("right")

    p = command("rank1", "classify x (x) y against a tensor cone")
    p.add_argument("--kind", choices=("min", "max"), required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("x", type=parse_vector, help="comma-separated entries, e.g. -1,0,1/2")
    p.add_argument("y", type=parse_vector)

    p = command("verify", "run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=list(SUITE_NAMES) + sorted(SUITE_ALIASES) + [SUITE_ALL],
        metavar="SUITE",
        help=f"one of {', '.join(SUITE_NAMES)}, or {SUITE_ALL}",
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)

    command("corpus", "list bundled cones and polytopes")
    return parser


def shield_vectors(argv: Sequence[str]) -> List[str]:
    """Prefix a space to vector tokens such as ``-1,0,1`` so argparse reads them as positionals."""
    return [f" {token}" if VECTOR_TOKEN.match(token) else token for token in argv]


# --- Rendering ---
def _vector_lines(title: str, vectors: Sequence[Sequence]) -> List[str]:
    rows = vectors_to_json(vectors)
    if not rows:
        return [f"{title}: none"]
    return [f"{title}:"] + [f"  [{', '.join(str(x) for x in row)}]" for row in rows]


def cone_text(cone: Cone) -> str:
    lines = [str(cone)]
    lines += _vector_lines("rays", cone.rays)
    lines += _vector_lines("lineality", cone.lineality)
    lines += _vector_lines("inequalities", cone.ineqs)
    lines += _vector_lines("equations", cone.eqs)
    return "\n".join(lines) + "\n"


def polytope_text(polytope: Polytope) -> str:
    return "\n".join([str(polytope)] + _vector_lines("vertices", polytope.vertices)) + "\n"


def mapping_text(data: Dict[str, Any]) -> str:
    lines = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, list):
            lines.append(f"{key}:" if value else f"{key}: none")
            lines += [f"  [{', '.join(str(x) for x in row)}]" for row in value]
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {output}")


# --- Commands ---
def _run(args: argparse.Namespace, fmt: str) -> int:
    if fmt == "xlsx" and args.command != "verify":
        raise DocumentError("xlsx output is only available for verify")
    as_json = fmt == "json"

    if args.command in ("dual", "tensor"):
        cone = dual_backend(args.cone) if args.command == "dual" else tensor_backend(args.left, args.right, args.kind)
        _emit(dumps(emit_cone(cone)) if as_json else cone_text(cone), args.output)
        return EXIT_OK

    if args.command == "face-ops":
        cone = face_ops_backend(args.left, args.right, args.op, args.m, args.n)
        _emit(dumps(emit_cone(cone)) if as_json else cone_text(cone), args.output)
        return EXIT_OK

    if args.command in ("rays", "lineality", "check"):
        backend = {"rays": rays_backend, "lineality": lineality_backend, "check": check_backend}[args.command]
        data = backend(args.cone)
        _emit(dumps(data) if as_json else mapping_text(data), args.output)
        return EXIT_OK

    if args.command == "hull":
        polytope = hull_backend(args.left, args.right)
        _emit(dumps(emit_polytope(polytope)) if as_json else polytope_text(polytope), args.output)
        return EXIT_OK

    if args.command == "rank1":
        verdict = rank1_backend(args.left, args.right, args.x, args.y, args.kind)
        _emit(dumps(verdict.to_dict()) if as_json else mapping_text(verdict.to_dict()), args.output)
        return EXIT_OK

    if args.command == "corpus":
        data = {"cones": cone_names(), "polytopes": polytope_names()}
        text = dumps(data) if as_json else f"cones: {', '.join(data['cones'])}\npolytopes: {', '.join(data['polytopes'])}\n"
        _emit(text, args.output)
        return EXIT_OK

    # verify
    result = verify_backend(args.suite, seed=args.seed, workers=args.workers)
    if fmt == "xlsx":
        if args.output is None:
            raise DocumentError("xlsx output needs --output")
        path = write_excel(result.reports, args.output)
        sys.stdout.write(f"{ReportMessages.ALL_PASSED if result.passed else ReportMessages.SOME_FAILED} ({path})\n")
    elif as_json:
        _emit(render_json(result.reports), args.output)
    else:
        _emit(render_text(result.reports, verbose=args.verbose), args.output)
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(shield_vectors(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(logging.DEBUG if args.verbose else logging.INFO)
    fmt = args.format or ConfigManager.load_config().get("default_format", "text")
    if fmt not in REPORT_FORMATS:
        fmt = "text"

    try:
        return _run(args, fmt)
    except DoubleDescriptionLimitError as e:
        logger.error(str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_DD_LIMIT
    except RunCancelledError:
        sys.stderr.write(f"{ReportMessages.CANCELLED}\n")
        return EXIT_CHECK_FAILED
    except ConeTensorError as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
