"""Main command line tool for the rank-n zeta experiments."""

import argparse
import re
import sys
from pathlib import Path
from typing import List, Optional

from src.errors import CatalogParseError, StructuralError
from src.logger import logger
from src.models._utils import EmitFormat
from src.models.project_paths import ProjectPathsSettings
from src.models.run_settings import RunSettings
from src.shell.catalog import load_catalog
from src.shell.commands import COMMANDS, Runner
from src.shell.report import write_csv, write_json

EXIT_INPUT = 1
EXIT_STRUCTURAL = 2

_RANKS = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_ranks(text: str) -> List[int]:
    """Parse ``A..B`` into the inclusive list of ranks."""
    match = _RANKS.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    low, high = int(match.group(1)), int(match.group(2))
    if low < 1 or high < low:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text!r}")
    return list(range(low, high + 1))


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the tool."""
    parser = argparse.ArgumentParser(
        description="Exact rank-n zeta functions of curves over finite fields"
    )
    parser.add_argument("command", choices=COMMANDS, help="What to compute")
    parser.add_argument("--catalog", type=Path, help="Curve catalog (JSON); defaults to data/catalog.json")
    parser.add_argument("--curve", type=str, metavar="NAME", help="Restrict to one curve of the catalog")

    group = parser.add_mutually_exclusive_group()
    group.add_argument("--rank", type=int, metavar="N", help="Single rank")
    group.add_argument("--ranks", type=parse_ranks, metavar="A..B", help="Inclusive rank range")

    parser.add_argument("--max-rank", type=int, default=4, metavar="N", help="'miracle' links ranks m and m+1 for m up to N")
    parser.add_argument("--precision", type=int, metavar="BITS", help="Working precision in bits")
    parser.add_argument("--tolerance", type=float, metavar="REAL", help="Relative tolerance of verdicts")
    parser.add_argument(
        "--emit",
        type=EmitFormat,
        choices=list(EmitFormat),
        default=EmitFormat.JSON,
        help="json; csv or both also write the zero-scatter table next to the JSON",
    )
    parser.add_argument("--out", type=Path, metavar="PATH", help="JSON output file; stdout if omitted")
    parser.add_argument("--samples", type=int, metavar="N", help="Samples per side of predicate sweeps")
    parser.add_argument("--seed", type=int, metavar="U64", help="Seed of the sampling generators")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Execute the tool and return its exit code."""
    args = build_parser().parse_args(argv)
    settings = RunSettings().with_overrides(
        precision_bits=args.precision,
        tolerance=args.tolerance,
        samples=args.samples,
        seed=args.seed,
    )
    paths = ProjectPathsSettings()
    catalog_path = args.catalog or paths.default_catalog
    ranks = args.ranks or [args.rank or 2]
    if args.command in ("check", "report") and args.rank is None and args.ranks is None:
        ranks = [1, 2, 3]

    try:
        catalog = load_catalog(catalog_path, settings)
    except (CatalogParseError, OSError) as e:
        logger.error(f"Cannot read catalog {catalog_path}: {e}")
        return EXIT_INPUT

    curves = catalog.curves
    if args.curve:
        chosen = catalog.get(args.curve)
        if chosen is None:
            logger.error(f"Curve {args.curve!r} is not in {catalog_path}")
            return EXIT_INPUT
        curves = [chosen]

    runner = Runner(settings)
    try:
        output = runner.run(args.command, curves, ranks, args.max_rank)
    except StructuralError as e:
        logger.error(f"Exact identity violated: {e}")
        return EXIT_STRUCTURAL
    output.ingestion_errors = [str(e) for e in catalog.errors]

    # the JSON report is always written; csv adds the zero-scatter table
    write_json(output, args.out)
    if args.emit != EmitFormat.JSON:
        csv_path = (
            args.out.with_suffix(".csv")
            if args.out
            else paths.reports_folder.joinpath(f"{args.command}.csv")
        )
        write_csv(output, csv_path)

    if output.identity_failures:
        return EXIT_STRUCTURAL
    if catalog.errors:
        return EXIT_INPUT
    return 0


def main() -> None:
    """Entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
