from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
import sys

from graphcodes.convert import (
    graph_to_stabilizer,
    render_roundtrip,
    roundtrip_check,
    stabilizer_to_graph,
)
from graphcodes.errors import ConsistencyError, GraphCodesError
from graphcodes.graph_code import GraphCode, to_dot
from graphcodes.models import CheckReport, CodeFile, dump_code, load_code_file
from graphcodes.settings import get_settings
from graphcodes.stabilizer import code_parameters, degenerate_part, distance_algebraic
from graphcodes.utils import format_code_parameters
from graphcodes.weyl import (
    distance_kl,
    encode_isometry,
    equivalence_check,
    isometry_check,
    kl_check,
    render_reports,
    stabilizer_eigencheck,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK = 2


def _write_text(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _require_graph(code: CodeFile, command: str) -> GraphCode:
    if code.kind != "graph":
        raise GraphCodesError(
            f"{command} needs a graph code; convert the stabilizer file first "
            "(graphcodes convert FILE --to graph)"
        )
    return code.payload


def _kl_distance_or_none(g: GraphCode) -> int | None:
    try:
        return distance_kl(encode_isometry(g))
    except GraphCodesError as exc:
        if isinstance(exc, ConsistencyError):
            raise
        logger.info("simulator distance skipped: %s", exc)
        return None


def _distance_lines(code: CodeFile) -> list[str]:
    if code.kind == "stabilizer":
        return [f"d={distance_algebraic(code.payload)}"]
    g = code.payload
    lines = [f"d={distance_algebraic(graph_to_stabilizer(g))}"]
    simulated = _kl_distance_or_none(g)
    if simulated is not None:
        lines.append(f"d_kl={simulated}")
    return lines


def cmd_info(args: argparse.Namespace) -> int:
    code = load_code_file(args.path)
    if code.kind == "graph":
        g = code.payload
        s = graph_to_stabilizer(g)
        n, k = code_parameters(s)
        lines = [
            f"graph code, p={g.p}, {format_code_parameters(n, k)}",
            f"vertices: {g.n_inputs} input, {g.n_aux} auxiliary, {g.n_outputs} output",
            f"dim S={s.dim}, degenerate dim {degenerate_part(s).dim}",
        ]
    else:
        s = code.payload
        n, k = code_parameters(s)
        lines = [
            f"stabilizer, p={s.p}, {format_code_parameters(n, k)}, "
            f"degenerate dim {degenerate_part(s).dim}",
            f"dim S={s.dim}",
        ]
    if args.distance:
        lines.extend(_distance_lines(code))
    _write_text(None, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    code = load_code_file(args.path)
    if code.kind == args.to:
        raise GraphCodesError(f"{args.path} already holds a {args.to} code")
    if code.kind == "graph":
        converted = graph_to_stabilizer(code.payload)
        if not args.no_check and graph_to_stabilizer(stabilizer_to_graph(converted)) != converted:
            raise ConsistencyError("re-conversion does not reproduce the stabilizer space")
    else:
        converted = stabilizer_to_graph(code.payload, check=not args.no_check)
    _write_text(args.output, dump_code(converted))
    if not args.no_check:
        print("round trip OK: re-conversion reproduces the stabilizer space", file=sys.stderr)
    return EXIT_OK


def _emit_reports(reports: list[CheckReport], as_json: bool) -> int:
    if as_json:
        payload = json.dumps([report.to_dict() for report in reports], sort_keys=True, indent=2)
        _write_text(None, payload + "\n")
    else:
        _write_text(None, render_reports(reports))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_CHECK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _require_graph(load_code_file(args.path), "verify")
    iso = encode_isometry(g)
    reports = [isometry_check(iso), stabilizer_eigencheck(g, iso), kl_check(iso, args.max_weight)]
    if args.equivalence:
        reports.append(equivalence_check(g))
    return _emit_reports(reports, args.json)


def cmd_distance(args: argparse.Namespace) -> int:
    code = load_code_file(args.path)
    _write_text(None, "\n".join(_distance_lines(code)) + "\n")
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    g = _require_graph(load_code_file(args.path), "dot")
    _write_text(args.output, to_dot(g))
    return EXIT_OK


def cmd_roundtrip(args: argparse.Namespace) -> int:
    report = roundtrip_check(load_code_file(args.path).payload)
    if args.json:
        _write_text(None, json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
    else:
        _write_text(None, render_roundtrip(report))
    return EXIT_OK if report.passed else EXIT_CHECK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = _Parser(
        prog="graphcodes",
        description="Convert and verify graph codes and stabilizer codes over GF(p).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    info = commands.add_parser("info", help="print code parameters")
    info.add_argument("path", type=Path)
    info.add_argument("--distance", action="store_true", help="also compute the distance")
    info.set_defaults(handler=cmd_info)

    convert = commands.add_parser("convert", help="convert between graph and stabilizer files")
    convert.add_argument("path", type=Path)
    convert.add_argument("--to", choices=("stabilizer", "graph"), required=True)
    convert.add_argument("-o", "--output", type=Path)
    convert.add_argument("--no-check", action="store_true", help="skip the round-trip check")
    convert.set_defaults(handler=cmd_convert)

    verify = commands.add_parser("verify", help="numerically verify a graph code")
    verify.add_argument("path", type=Path)
    verify.add_argument("--max-weight", type=int, default=2)
    verify.add_argument("--equivalence", action="store_true")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    distance = commands.add_parser("distance", help="print the code distance")
    distance.add_argument("path", type=Path)
    distance.set_defaults(handler=cmd_distance)

    dot = commands.add_parser("dot", help="export a graph code as DOT")
    dot.add_argument("path", type=Path)
    dot.add_argument("-o", "--output", type=Path)
    dot.set_defaults(handler=cmd_dot)

    roundtrip = commands.add_parser("roundtrip", help="convert there and back and compare")
    roundtrip.add_argument("path", type=Path)
    roundtrip.add_argument("--json", action="store_true")
    roundtrip.set_defaults(handler=cmd_roundtrip)

    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    try:
        settings = get_settings()
    except ValueError as exc:
        print(f"error: invalid GRAPHCODES_* settings: {exc}", file=sys.stderr)
        return EXIT_INPUT
    level = logging.DEBUG if args.verbose else settings.log_level
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except ConsistencyError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (GraphCodesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
