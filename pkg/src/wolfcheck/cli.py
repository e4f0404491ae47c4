"""Command line driver: ``wolfcheck {verify,tables,g2-check,dump-roots,dump-constants}``.

Exit codes: 0 everything verified, 1 some verdict false or table mismatch,
2 bad input (unknown space, rank bound violated, no admissible delta).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import g2_model, wolf
from .catalog import DEFAULT_CATALOG, DEFAULT_MAX_RANK, SpaceSpec, parse_space
from .chevalley import build_structure_constants
from .errors import ConfigurationError, NoDeltaError
from .roots import build_root_system

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

TABLE_CATALOG = (
    "SU(4)", "SU(5)", "SU(6)", "SU(7)", "SU(8)", "SU(9)",
    "Spin(7)", "Spin(8)", "Spin(9)", "Spin(10)", "Spin(11)", "Spin(12)",
    "Spin(13)", "Spin(14)", "Spin(15)", "Spin(16)", "Spin(17)",
    "G", "FI", "EII", "EVI", "EIX",
)


def _dump(obj, pretty_json: bool = True) -> str:
    return json.dumps(obj, indent=2 if pretty_json else None, sort_keys=True, default=str) + "\n"


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _max_rank(args) -> int | None:
    return None if args.no_rank_cap else args.max_rank


def _report_job(job: tuple[SpaceSpec, int, bool]) -> dict:
    spec, seed, delta_ind = job
    return wolf.full_report(spec, seed=seed, delta_independence=delta_ind).to_json()


def _table_lines(rows: list[dict]) -> list[str]:
    head = f"{'space':<12}{'group':<10}{'type':<6}{'dim M':>12}{'dim N':>12}{'dim H(p)':>12}{'dim K(p)':>12}  H(p)"
    lines = [head, "-" * len(head)]
    for r in rows:
        c, p = r["computed"], r["published"]

        def cell(k):
            want = p.get(k)
            mark = "" if want is None or want == c[k] else f"!={want}"
            return f"{c[k]}{mark}"

        lines.append(
            f"{r['space']:<12}{r['group']:<10}{r['type']:<6}{cell('dim_M'):>12}{cell('dim_N'):>12}"
            f"{cell('dim_Hp'):>12}{cell('dim_Kp'):>12}  {r.get('H(p)') or ''}"
        )
    return lines


def cmd_verify(args) -> int:
    names = list(args.spaces or []) + list(args.space or [])
    if args.all:
        names = list(DEFAULT_CATALOG) + names
    if not names:
        print("verify: give space names or --all", file=sys.stderr)
        return EXIT_INPUT
    try:
        specs = [parse_space(n, max_rank=_max_rank(args)) for n in names]
        for spec in specs:
            # surface the missing-delta case as an input error before any heavy work
            if spec.rtype.family == "C":
                wolf.choose_delta(wolf.decomposition_for(spec.rtype))
    except (ConfigurationError, NoDeltaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    jobs = [(s, args.seed, not args.skip_delta_independence) for s in specs]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_report_job, jobs))
    else:
        reports = [_report_job(j) for j in jobs]
    ok = all(all(r["verdicts"].values()) for r in reports)
    if args.pretty:
        for r in reports:
            status = "PASS" if all(r["verdicts"].values()) else "FAIL"
            print(f"{status} {r['space']} ({r['group']}, {r['type']}) dims={r['dims']}")
            for name, good in r["verdicts"].items():
                if not good:
                    print(f"    {name}: " + "; ".join(r["witnesses"].get(name, [])))
    if args.emit_table:
        rows = [{"space": r["space"], "group": r["group"], "type": r["type"], "computed": r["dims"],
                 "published": r["published_dims"]} for r in reports]
        print("\n".join(_table_lines(rows)))
    if args.json or not args.pretty:
        _write(_dump(reports), args.json)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_tables(args) -> int:
    try:
        specs = [parse_space(n, max_rank=_max_rank(args)) for n in (args.spaces or TABLE_CATALOG)]
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        rows = [wolf.table_row(s) for s in specs]
    except NoDeltaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    ok = all(r["match"] for r in rows)
    if args.json or not args.pretty:
        _write(_dump(rows), args.json)
    if args.pretty:
        print("\n".join(_table_lines(rows)))
    if not ok:
        for r in rows:
            if not r["match"]:
                diff = {k: (r["computed"][k], v) for k, v in r["published"].items()
                        if v is not None and r["computed"][k] != v}
                print(f"mismatch {r['space']}: (computed, published) {diff}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_g2(args) -> int:
    report = g2_model.g2_report(emit_sff=args.emit_sff, emit_brackets=args.emit_brackets)
    ok = all(report["verdicts"].values())
    if args.json or not args.pretty:
        _write(_dump(report), args.json)
    if args.pretty:
        for name, good in report["verdicts"].items():
            print(f"{'PASS' if good else 'FAIL'} {name}")
        if args.emit_brackets:
            print("\n".join(report["brackets"]))
        if args.emit_sff:
            for row in report["sff_values"]:
                print(f"h({row['X']}, {row['Y']}) = {row['h']}")
    if not ok:
        first = next((line for line in g2_model.bracket_table(g2_model.PUBLISHED_TAL) + g2_model.bracket_table()
                      if not line.match), None)
        if first is not None:
            print(f"first mismatching bracket [{first.left}, {first.right}]: "
                  f"printed {first.printed}, computed {first.computed}", file=sys.stderr)
        else:
            bad = [k for k, good in report["verdicts"].items() if not good]
            print(f"failed: {', '.join(bad)}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dump_roots(args) -> int:
    try:
        rs = build_root_system(args.type)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(_dump(rs.to_json(), not args.compact), args.json)
    return EXIT_OK


def cmd_dump_constants(args) -> int:
    try:
        rs = build_root_system(args.type)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = {"type": rs.type.name, "constants": build_structure_constants(rs).to_json()}
    _write(_dump(doc, not args.compact), args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wolfcheck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, pretty=True):
        sp.add_argument("--json", metavar="PATH", help="write the JSON report to PATH instead of stdout")
        if pretty:
            sp.add_argument("--pretty", action="store_true", help="human-readable output")

    def ranks(sp):
        sp.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK,
                        help=f"cap on classical ranks (default {DEFAULT_MAX_RANK})")
        sp.add_argument("--no-rank-cap", action="store_true", help="lift the classical rank cap")

    v = sub.add_parser("verify", help="run every construction and verifier for the given spaces")
    v.add_argument("spaces", nargs="*", help="space names, e.g. EIX, SU(5), 'G2(C^5)', B4")
    v.add_argument("--space", action="append", help="a space name (repeatable)")
    v.add_argument("--all", action="store_true", help="the default catalog A3..A6, B3..B5, D4, D5, G2, F4, E6, E7, E8")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled Jacobi checks on large algebras")
    v.add_argument("--jobs", type=int, default=1, help="verify spaces in parallel processes")
    v.add_argument("--emit-table", action="store_true", help="also print the dimension table")
    v.add_argument("--skip-delta-independence", action="store_true", help="only check the canonical delta")
    common(v)
    ranks(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="reproduce the dimension tables")
    t.add_argument("spaces", nargs="*", help="restrict to these spaces")
    common(t)
    ranks(t)
    t.set_defaults(func=cmd_tables)

    g = sub.add_parser("g2-check", help="the g2 inside so(7) computation")
    g.add_argument("--emit-sff", action="store_true", help="include all nine second fundamental form values")
    g.add_argument("--emit-brackets", action="store_true", help="include the bracket tables")
    common(g)
    g.set_defaults(func=cmd_g2)

    for name, func, what in (("dump-roots", cmd_dump_roots, "root system"),
                             ("dump-constants", cmd_dump_constants, "structure constants")):
        d = sub.add_parser(name, help=f"print the {what} of a type as JSON")
        d.add_argument("type", help="root system type, e.g. G2, E8, B4")
        d.add_argument("--compact", action="store_true", help="single-line JSON")
        common(d, pretty=False)
        d.set_defaults(func=func)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
