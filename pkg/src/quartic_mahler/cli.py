"""Command-line interface: enumerate fields, compute M(O_K), verify, emit figure data.

Exit codes: 0 success, 1 verification failure, 2 usage error.  CSV output is
UTF-8 with a header row and a schema comment line, stable across runs and
thread counts.  Long figure-data runs append finished rows to a journal file
next to the output; --resume skips fields already journaled.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import __version__
from .families import (
    CONDITIONAL_IDS,
    UNCONDITIONAL_IDS,
    family_spec,
    report_rows,
    verify_family_bounds,
)
from .fields import (
    IMAGINARY,
    REAL,
    canonicalize_biquadratic,
    classify_cyclic,
    enumerate_biquadratic,
    enumerate_cyclic,
)
from .measure import PrecisionContext, theoretical_bounds
from .rootsofunity import TABLE_EXPECTED, reproduce_tables
from .search import brute_force_min, min_mahler, minimize_over_fields, search_box

SCHEMA_LINE = f"# quartic-mahler v{__version__} schema=1"

FIELD_COLUMNS = ("kind", "signature", "p1", "p2", "p3", "p4", "c", "disc")
FIGURE_COLUMNS = ("disc", "m_min", "m_norm14", "m_norm16",
                  "kind", "signature", "p1", "p2", "p3", "p4")


def _field_params(f) -> tuple:
    if f.kind == "biquadratic":
        return (f.l, f.m, f.n, "")
    return (f.A, f.B, f.C, f.D)


def _parse_ints(text: str, n: int, what: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise ValueError(f"{what} needs {n} comma-separated integers")
    return [int(p) for p in parts]


def _enumerate(kind: str, max_disc: int, signature: str | None):
    signatures = [signature] if signature else [REAL, IMAGINARY]
    out = []
    for sig in signatures:
        if kind in ("biquadratic", "all"):
            out.extend(enumerate_biquadratic(max_disc, sig))
        if kind in ("cyclic", "all"):
            out.extend(enumerate_cyclic(max_disc, sig))
    out.sort(key=lambda f: (f.disc, f.key))
    return out


def _write_rows(path: str | None, columns, rows, fmt: str) -> None:
    if fmt == "json":
        payload = json.dumps([dict(zip(columns, r)) for r in rows], indent=1)
        if path:
            Path(path).write_text(payload + "\n", encoding="utf-8")
        else:
            sys.stdout.write(payload + "\n")
        return
    if fmt == "text":
        cells = [[str(c) for c in columns]] + [[str(v) for v in r] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
                 for row in cells]
        payload = "\n".join(lines) + "\n"
        if path:
            Path(path).write_text(payload, encoding="utf-8")
        else:
            sys.stdout.write(payload)
        return
    out = sys.stdout if not path else open(path, "w", newline="", encoding="utf-8")
    try:
        out.write(SCHEMA_LINE + "\n")
        writer = csv.writer(out)
        writer.writerow(columns)
        writer.writerows(rows)
    finally:
        if path:
            out.close()


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def cmd_compute(args) -> int:
    if bool(args.cyclic) == bool(args.biquadratic):
        print("error: give exactly one of --cyclic A,B,C,D or --biquadratic d1,d2",
              file=sys.stderr)
        return 2
    try:
        if args.cyclic:
            a, b, c, d = _parse_ints(args.cyclic, 4, "--cyclic")
            field = classify_cyclic(a, b, c, d)
        else:
            d1, d2 = _parse_ints(args.biquadratic, 2, "--biquadratic")
            field = canonicalize_biquadratic(d1, d2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ctx = PrecisionContext(bits=args.precision_bits)
    result = min_mahler(field, ctx)
    bounds = theoretical_bounds(field)
    print(f"field: {field}")
    print(f"disc: {field.disc} (c = {field.c})")
    print(f"signature: {field.signature}")
    print(f"minimal measure: {_fmt(result.m_value)}")
    print(f"minimizer (quarter coordinates): {result.quarters}")
    print(f"heuristic phase bound: {_fmt(result.phase1_bound)}")
    print(f"lower bound: {_fmt(bounds.lower)}  upper bound: {_fmt(bounds.upper)}")
    ok = bounds.lower <= result.m_value * (1 + 1e-9) and result.m_value <= bounds.upper * (1 + 1e-9)
    print(f"bounds satisfied: {'yes' if ok else 'NO'}")
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    fields = _enumerate(args.kind, args.max_disc, args.signature)
    rows = [(f.kind, f.signature, *_field_params(f), f.c, f.disc) for f in fields]
    _write_rows(args.out, FIELD_COLUMNS, rows, args.format)
    return 0


def _journal_path(out: str) -> Path:
    return Path(out + ".journal.jsonl")


def cmd_figure_data(args) -> int:
    fields = _enumerate(args.kind, args.max_disc, args.signature)
    done: dict[tuple, float] = {}
    journal = _journal_path(args.out) if args.out else None
    if journal and args.resume and journal.exists():
        for line in journal.read_text(encoding="utf-8").splitlines():
            rec = json.loads(line)
            done[tuple(rec["key"])] = rec["m"]
    todo = [f for f in fields if tuple(map(str, f.key)) not in done]
    ctx = PrecisionContext(bits=args.precision_bits)
    handle = open(journal, "a", encoding="utf-8") if journal else None
    try:
        for result in minimize_over_fields(todo, ctx, processes=args.threads):
            key = tuple(map(str, result.field.key))
            done[key] = result.m_value
            if handle:
                handle.write(json.dumps({"key": list(key), "m": result.m_value}) + "\n")
                handle.flush()
    finally:
        if handle:
            handle.close()
    rows = []
    for f in fields:
        m = done[tuple(map(str, f.key))]
        rows.append((f.disc, _fmt(m), _fmt(m * f.disc ** -0.25), _fmt(m * f.disc ** (-1 / 6)),
                     f.kind, f.signature, *_field_params(f)))
    _write_rows(args.out, FIGURE_COLUMNS, rows, args.format)
    if journal and journal.exists():
        journal.unlink()
    return 0


def _verify_tables(args) -> int:
    rows = reproduce_tables(PrecisionContext(bits=args.precision_bits))
    failures = 0
    for row in rows:
        want_m, want_c = TABLE_EXPECTED[row.k]
        ok = abs(round(row.m_value, 2) - want_m) < 0.005 and abs(round(row.comparison, 2) - want_c) < 0.005
        failures += not ok
        print(f"k={row.k:<3} M={row.m_value:8.2f} (expect {want_m:8.2f})  "
              f"c_K={row.comparison:8.2f} (expect {want_c:8.2f})  {'ok' if ok else 'FAIL'}")
    print(f"{len(rows) - failures}/{len(rows)} table rows match")
    return 1 if failures else 0


def _verify_bounds(args) -> int:
    fields = _enumerate("all", args.max_disc, args.signature)
    ctx = PrecisionContext(bits=args.precision_bits)
    failures = 0
    for r in minimize_over_fields(fields, ctx, processes=args.threads):
        b = theoretical_bounds(r.field)
        ok = b.lower <= r.m_value * (1 + 1e-9) and r.m_value <= b.upper * (1 + 1e-9)
        if not ok:
            failures += 1
            print(f"FAIL {r.field.key}: M={_fmt(r.m_value)} outside "
                  f"[{_fmt(b.lower)}, {_fmt(b.upper)}]")
    print(f"bounds: {len(fields) - failures}/{len(fields)} fields within theoretical bounds")
    return 1 if failures else 0


def _verify_oracle(args) -> int:
    fields = _enumerate(args.kind, args.max_disc, args.signature)
    ctx = PrecisionContext(bits=args.precision_bits)
    failures = 0
    for field in fields:
        engine = min_mahler(field, ctx)
        oracle = brute_force_min(field, search_box(field, engine.phase1_bound), ctx)
        same = (abs(engine.m_value - oracle.m_value) <= 1e-9 * oracle.m_value
                and engine.quarters == oracle.quarters)
        if not same:
            failures += 1
            print(f"FAIL {field.key}: engine {_fmt(engine.m_value)} {engine.quarters} "
                  f"vs oracle {_fmt(oracle.m_value)} {oracle.quarters}")
    print(f"oracle: {len(fields) - failures}/{len(fields)} fields agree")
    return 1 if failures else 0


def _verify_families(args) -> int:
    if args.family:
        ids = [args.family]
    else:
        ids = list(UNCONDITIONAL_IDS)
    failures = 0
    all_rows = []
    for fid in ids:
        if fid in CONDITIONAL_IDS:
            if not args.exponent:
                print(f"error: family {fid} needs --exponent p/q", file=sys.stderr)
                return 2
            p, q = (int(v) for v in args.exponent.split("/"))
            spec = family_spec(fid, p, q)
        else:
            spec = family_spec(fid)
        report = verify_family_bounds(spec, args.kmax)
        all_rows.extend(report_rows(report))
        n = sum(1 for c in report.checks if c.skip_reason is None)
        status = "ok" if report.passed else "FAIL"
        failures += not report.passed
        print(f"{fid}: {n} instances, threshold k={report.threshold_k}, "
              f"observed M/disc^({spec.exponent}) in "
              f"[{report.observed_lower}, {report.observed_upper}]  {status}")
    if args.out:
        cols = list(all_rows[0].keys())
        _write_rows(args.out, cols, [tuple(r[c] for c in cols) for r in all_rows], args.format)
    return 1 if failures else 0


def cmd_verify(args) -> int:
    suite = {
        "tables": _verify_tables,
        "bounds": _verify_bounds,
        "oracle": _verify_oracle,
        "families": _verify_families,
    }.get(args.suite)
    if suite is None:
        print(f"error: unknown suite {args.suite!r}", file=sys.stderr)
        return 2
    return suite(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quartic-mahler",
        description="Minimal Mahler measures of integral generators of Galois quartic fields",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, disc_default=100_000):
        p.add_argument("--max-disc", type=int, default=disc_default,
                       help="discriminant bound (hard cap 2e7)")
        p.add_argument("--signature", choices=(REAL, IMAGINARY), default=None)
        p.add_argument("--kind", choices=("biquadratic", "cyclic", "all"), default="all")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
        p.add_argument("--precision-bits", type=int, default=128)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--resume", action="store_true")

    p = sub.add_parser("compute", help="M(O_K) for one field")
    p.add_argument("--cyclic", help="A,B,C,D")
    p.add_argument("--biquadratic", help="d1,d2 (two radicands)")
    p.add_argument("--precision-bits", type=int, default=128)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", help="list fields up to a discriminant bound")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("figure-data", help="CSV of M(O_K) and normalizations")
    common(p)
    p.set_defaults(func=cmd_figure_data, kind="cyclic", signature=None)
    p.set_defaults(signature=REAL)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("bounds", "families", "tables", "oracle"))
    common(p, disc_default=10_000)
    p.add_argument("--family", default=None, help="family id (default: all unconditional)")
    p.add_argument("--exponent", default=None, help="p/q for conditional families")
    p.add_argument("--kmax", type=int, default=40)
    p.set_defaults(func=cmd_verify)
    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    """Fold values starting with '-' into --opt=value form (e.g. --cyclic -1,2,1,5)."""
    out = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in ("--cyclic", "--biquadratic") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_normalize_argv(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_disc", 0) > 2 * 10**7:
        print("error: --max-disc exceeds the hard cap 2e7", file=sys.stderr)
        return 2
    if getattr(args, "max_disc", 0) > 10**6:
        print("note: discriminant bounds above 1e6 can take a while", file=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
