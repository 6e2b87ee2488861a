"""figplots <in.csv> --panel {raw,norm14,norm16} --out <path>"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import FigureJob, SchemaError, __version__, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplots",
        description="Render minimal-measure scatter panels from figure-data CSV",
    )
    parser.add_argument("csv", help="schema=1 figure-data CSV")
    parser.add_argument("--panel", choices=("raw", "norm14", "norm16"), default="raw")
    parser.add_argument("--out", required=True, help="output base path (.png and .svg)")
    parser.add_argument("--linear-x", action="store_true", help="linear instead of log x axis")
    parser.add_argument("--version", action="version", version=__version__)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    job = FigureJob(csv_path=Path(args.csv), out_base=Path(args.out),
                    panel=args.panel, log_x=not args.linear_x)
    try:
        result = render(job)
    except (SchemaError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {result.png_path} and {result.svg_path} ({len(result.points)} points)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
