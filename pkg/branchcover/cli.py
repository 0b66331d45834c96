"""Command-line front end: check, compile and rewrite fibration files.

    python -m branchcover.cli check FILE [FILE ...]
    python -m branchcover.cli compile FILE [FILE ...] [--emit json|kirby|csv] [--out DIR] [--json]
    python -m branchcover.cli rewrite FILE (--deform N | --resolve A..B) [--out DIR]

Cycle positions on the command line are 1-based and --resolve ranges are inclusive.
Exit codes: 0 ok, 1 not certified or rewrite refused, 2 parse error, 3 divisibility error.
"""
import argparse
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .errors import BranchCoverError, NotCertified, SourceUnreadable
from .pipeline import CoverPipeline
from .schemas.cover import RunReport, stable_json
from .utils.export import ReportExporter
from .utils.logging import logger

EXIT_OK = 0

_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)$")


class Outcome(NamedTuple):
    path: str
    code: int
    output: str


def resolve_range(text: str) -> Tuple[int, int]:
    """'A..B' (1-based, inclusive) -> [start, stop) (0-based)."""
    match = _RANGE_RE.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    a, b = int(match.group(1)), int(match.group(2))
    if not 1 <= a <= b:
        raise argparse.ArgumentTypeError(f"range {text} must satisfy 1 <= A <= B")
    return a - 1, b


def _position(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("cycle positions start at 1")
    return value


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    p = argparse.ArgumentParser(
        prog="branchcover",
        description="Hyperelliptic Lefschetz fibrations as double branched covers.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("files", nargs="+", help="Fibration source files.")
    common.add_argument("--out", help="Write exports to this directory instead of stdout.")
    common.add_argument("--json", action="store_true", help="Print the full run report as JSON.")
    common.add_argument("--workers", type=int, default=4, help="Files processed in parallel.")

    sub.add_parser("check", parents=[common], help="Certify the global monodromy.")

    c = sub.add_parser("compile", parents=[common], help="Emit the branched-cover description.")
    formats = ReportExporter.get_supported_formats()
    c.add_argument(
        "--emit",
        choices=sorted(formats),
        action="append",
        help="Artifacts to emit (repeatable; json when omitted). "
        + "; ".join(f"{name}: {text}" for name, text in sorted(formats.items())),
    )

    r = sub.add_parser("rewrite", parents=[common], help="Deform or resolve separating singular fibers.")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--deform", type=_position, metavar="N", help="Deform the separating cycle at position N.")
    g.add_argument("--resolve", type=resolve_range, metavar="A..B", help="Resolve the chain block A..B.")

    return p.parse_args(argv)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SourceUnreadable(f"cannot read {path}: {e.strerror}") from e


def run_check(pipeline: CoverPipeline, path: str, args: argparse.Namespace) -> Outcome:
    source = _read(path)
    _, certificate, response = pipeline.check(source)
    code = EXIT_OK if certificate.certified else NotCertified.exit_code
    if args.json:
        report = RunReport(digest=response.digest, certificate=response)
        return Outcome(path, code, stable_json(report, exclude={"timings"}))
    return Outcome(path, code, stable_json(response))


def run_compile(pipeline: CoverPipeline, path: str, args: argparse.Namespace) -> Outcome:
    emit = args.emit or ["json"]
    # move logs only exist once the handle complexes are built
    with_moves = "kirby" in emit or "csv" in emit
    report = pipeline.compile(_read(path), emit_kirby=with_moves)

    if args.out:
        exporter = ReportExporter(args.out)
        written: List[str] = []
        stem = Path(path).stem
        for fmt in ("json", "kirby", "csv"):
            if fmt in emit or (fmt == "csv" and with_moves):
                written += exporter.export(report, fmt, stem)
        logger.info(f"{path}: wrote {', '.join(written)}")
        return Outcome(path, EXIT_OK, "")

    if args.json:
        return Outcome(path, EXIT_OK, stable_json(report, exclude={"timings"}))
    parts = []
    if "json" in emit:
        parts.append(stable_json(report.description if report.description is not None else report.relative))
    if "kirby" in emit:
        for name in sorted(report.handle_complexes):
            parts.append(f"# {name}\n{report.handle_complexes[name]}")
    if "csv" in emit:
        parts.append("# moves\n" + ReportExporter.moves_frame(report).to_csv(index=False))
    return Outcome(path, EXIT_OK, "".join(parts))


def run_rewrite(pipeline: CoverPipeline, path: str, args: argparse.Namespace) -> Outcome:
    deform = args.deform - 1 if args.deform is not None else None
    _, response = pipeline.rewrite(_read(path), deform=deform, resolve=args.resolve)
    text = response.source + "\n"
    if args.out:
        written = ReportExporter(args.out).export_source(text, f"{Path(path).stem}.rewritten")
        logger.info(f"{path}: wrote {written}")
        return Outcome(path, EXIT_OK, "")
    return Outcome(path, EXIT_OK, text)


_COMMANDS = {"check": run_check, "compile": run_compile, "rewrite": run_rewrite}


def process(path: str, args: argparse.Namespace) -> Outcome:
    """Run one command on one file, turning library errors into exit codes."""
    try:
        return _COMMANDS[args.command](CoverPipeline(), path, args)
    except BranchCoverError as e:
        logger.error(f"{path}: {type(e).__name__}: {e.message}")
        return Outcome(path, e.exit_code, "")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        outcomes = list(pool.map(lambda f: process(f, args), args.files))

    for outcome in outcomes:
        if outcome.output:
            sys.stdout.write(outcome.output)
    return max(o.code for o in outcomes)


if __name__ == "__main__":
    sys.exit(main())
