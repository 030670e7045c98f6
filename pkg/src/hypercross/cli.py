"""Command-line front end: table emission, identity verification,
obstruction reports, cross-product evaluation, isomorphism search, the
composition-algebra boundary check, and the falsification sweep.

Output is deterministic for a fixed command line (including --seed), so
the tool is safe to diff in CI. Exit codes: 0 the expected property holds,
1 a verification failed (identity violated, no isomorphism found, or an
unexpected multiplicativity outcome), 2 usage or input-format errors,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cayley_dickson import (
    count_verified_pairs,
    derived_table,
    find_iso,
    hurwitz_boundary_check,
    random_cd_pairs,
)
from .falsify import SWEEP_DIMENSIONS, falsification_sweep
from .identities import g_tensor, obstruction_report, run_suite
from .rationals import format_rational
from .sampling import rng_for_seed
from .tables import (
    ProductTable,
    TableFormatError,
    canonical_table,
    cross,
    dump_table,
    load_table,
)
from .vectors import vector_from_json, vector_to_strings

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

BUILTIN_TABLES = ("cross3", "cross7", "octonion-derived")


class UsageError(ValueError):
    """Bad command-line input: unknown table, malformed vector, bad file."""


def _resolve_table(spec: str) -> ProductTable:
    if spec == "octonion-derived":
        return derived_table()
    if spec in ("cross3", "cross7"):
        return canonical_table(spec)
    path = Path(spec)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read table file {spec!r}: {exc}") from None
    try:
        return load_table(text)
    except TableFormatError as exc:
        raise UsageError(f"table file {spec!r}: {exc}") from None


def _parse_vector(text: str, dim: int):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"vector argument is not valid JSON: {exc}") from None
    try:
        v = vector_from_json(obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if v.dim != dim:
        raise UsageError(f"vector has dimension {v.dim}, table needs {dim}")
    return v


def _render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# command handlers: each returns (exit_code, output_text)


def _cmd_emit_table(args) -> tuple[int, str]:
    table = _resolve_table(args.table)
    return EXIT_OK, dump_table(table)


def _cmd_cross(args) -> tuple[int, str]:
    table = _resolve_table(args.table)
    a = _parse_vector(args.vector_a, table.dim)
    b = _parse_vector(args.vector_b, table.dim)
    result = vector_to_strings(cross(table, a, b))
    if args.json:
        return EXIT_OK, _render_json({"result": result})
    return EXIT_OK, json.dumps(result) + "\n"


def _cmd_verify(args) -> tuple[int, str]:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    table = _resolve_table(args.table)
    reports = run_suite(table, sample_count=args.samples, seed=args.seed)
    all_hold = all(r.holds for r in reports)
    code = EXIT_OK if all_hold else EXIT_VIOLATION
    if args.json:
        obj = {
            "table": args.table,
            "dimension": table.dim,
            "samples": args.samples,
            "seed": args.seed,
            "all_hold": all_hold,
            "reports": [r.to_json_dict() for r in reports],
        }
        return code, _render_json(obj)
    lines = [
        f"table: {args.table}",
        f"dimension: {table.dim}",
        f"samples: {args.samples}",
        f"seed: {args.seed}",
    ]
    for report in reports:
        lines.append(f"{report.identity}: {report.status}")
        if report.witness is not None:
            lines.append(f"  witness: {json.dumps(report.witness)}")
    lines.append("result: ok" if all_hold else "result: violated")
    return code, "\n".join(lines) + "\n"


def _cmd_obstruction(args) -> tuple[int, str]:
    table = _resolve_table(args.table)
    report = obstruction_report(table)
    code = EXIT_OK if report.holds else EXIT_VIOLATION
    if args.json:
        return code, _render_json(report.to_json_dict())
    lines = [
        f"dimension: {report.dim}",
        f"lhs_sum: {format_rational(report.lhs_sum)}",
        f"rhs_sum: {format_rational(report.rhs_sum)}",
        f"lhs_closed: {format_rational(report.lhs_closed)}",
        f"rhs_closed: {format_rational(report.rhs_closed)}",
        f"poly: {format_rational(report.poly)}",
        f"holds: {_bool_text(report.holds)}",
    ]
    return code, "\n".join(lines) + "\n"


def _cmd_g_tensor(args) -> tuple[int, str]:
    table = _resolve_table(args.table)
    tensor = g_tensor(table)
    items = tensor.nonzero_items()
    independent = tensor.independent_items()
    if args.json:
        obj = {
            "dimension": tensor.dim,
            "nonzero": len(items),
            "independent": len(independent),
            "entries": [
                {"i": i, "j": j, "m": m, "n": n, "g": format_rational(val)}
                for (i, j, m, n), val in items
            ],
        }
        return EXIT_OK, _render_json(obj)
    lines = [
        f"dimension: {tensor.dim}",
        f"nonzero: {len(items)}",
        f"independent: {len(independent)}",
    ]
    for (i, j, m, n), val in items:
        lines.append(f"g[{i},{j},{m},{n}] = {format_rational(val)}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_iso(args) -> tuple[int, str]:
    table_a = _resolve_table(args.table)
    table_b = _resolve_table(args.other)
    if table_a.dim != 7 or table_b.dim != 7:
        raise UsageError("isomorphism search requires two 7-dimensional tables")
    sp = find_iso(table_a, table_b)
    if sp is None:
        if args.json:
            return EXIT_VIOLATION, _render_json({"found": False})
        return EXIT_VIOLATION, "found: false\n"
    verified = count_verified_pairs(table_a, table_b, sp)
    expected = table_a.dim * (table_a.dim - 1) // 2
    if verified != expected:
        raise ArithmeticError(
            f"signed permutation verified on {verified}/{expected} basis pairs"
        )
    if args.json:
        obj = {"found": True, "verified_pairs": verified}
        obj.update(sp.to_json_dict())
        return EXIT_OK, _render_json(obj)
    lines = [
        "found: true",
        f"perm: {json.dumps(list(sp.perm))}",
        f"signs: {json.dumps(list(sp.signs))}",
        f"verified_pairs: {verified}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_cd_check(args) -> tuple[int, str]:
    level = args.level
    if not 0 <= level <= 4:
        raise UsageError("--level must be in 0..4")
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    samples = ()
    if level <= 3:
        samples = random_cd_pairs(rng_for_seed(args.seed), level, args.samples)
    report = hurwitz_boundary_check(level, samples)
    # levels 0..3 are expected multiplicative; level 4 must yield a witness
    expected = report.multiplicative if level <= 3 else not report.multiplicative
    code = EXIT_OK if expected else EXIT_VIOLATION
    if args.json:
        return code, _render_json(report.to_json_dict())
    lines = [
        f"level: {report.level}",
        f"dimension: {report.dim}",
        f"multiplicative: {_bool_text(report.multiplicative)}",
        f"checked_pairs: {report.checked_pairs}",
    ]
    if report.witness is not None:
        lines.append(f"witness: {json.dumps(report.witness)}")
    return code, "\n".join(lines) + "\n"


def _cmd_falsify(args) -> tuple[int, str]:
    if args.candidates < 1 or args.samples < 1:
        raise UsageError("--candidates and --samples must be at least 1")
    certificates = falsification_sweep(
        per_dimension=args.candidates,
        seed=args.seed,
        sample_count=args.samples,
    )
    if args.json:
        obj = {
            "dimensions": list(SWEEP_DIMENSIONS),
            "candidates_per_dimension": args.candidates,
            "seed": args.seed,
            "all_rejected": True,
            "certificates": [c.to_json_dict() for c in certificates],
        }
        return EXIT_OK, _render_json(obj)
    lines = [
        "dimensions: " + ", ".join(str(d) for d in SWEEP_DIMENSIONS),
        f"candidates_per_dimension: {args.candidates}",
        f"seed: {args.seed}",
    ]
    for cert in certificates:
        lines.append(
            f"n={cert.dimension} #{cert.index:03d} {cert.kind}: "
            f"rejected by {cert.rejected_by}"
        )
    lines.append(f"result: all {len(certificates)} candidates rejected")
    return EXIT_OK, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parser and dispatch


def _add_common(sub, table: bool = True):
    if table:
        sub.add_argument(
            "--table",
            required=True,
            help=f"builtin table ({', '.join(BUILTIN_TABLES)}) or a JSON table file",
        )
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercross",
        description="Construct, verify, and falsify generalized vector cross products "
        "in exact rational arithmetic.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("emit-table", help="write a table in canonical JSON")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_emit_table)

    sub = commands.add_parser("cross", help="evaluate a cross product of two vectors")
    _add_common(sub)
    sub.add_argument("vector_a", help='first vector, e.g. \'["1","0","0"]\'')
    sub.add_argument("vector_b", help='second vector, e.g. \'["0","1/2","0"]\'')
    sub.set_defaults(handler=_cmd_cross)

    sub = commands.add_parser("verify", help="run the full identity suite on a table")
    _add_common(sub)
    sub.add_argument("--samples", type=int, default=50, help="random samples per identity")
    sub.add_argument("--seed", type=int, default=0, help="sampling seed")
    sub.set_defaults(handler=_cmd_verify)

    sub = commands.add_parser("obstruction", help="dimension-obstruction certificate")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_obstruction)

    sub = commands.add_parser("g-tensor", help="rank-4 ternary tensor of a table")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_g_tensor)

    sub = commands.add_parser("iso", help="signed-permutation search between two tables")
    _add_common(sub)
    sub.add_argument("--other", required=True, help="second table (builtin or file)")
    sub.set_defaults(handler=_cmd_iso)

    sub = commands.add_parser("cd-check", help="norm multiplicativity at a doubling level")
    _add_common(sub, table=False)
    sub.add_argument("--level", type=int, required=True, help="doubling level 0..4")
    sub.add_argument("--samples", type=int, default=50, help="random pairs for levels 0..3")
    sub.add_argument("--seed", type=int, default=0, help="sampling seed")
    sub.set_defaults(handler=_cmd_cd_check)

    sub = commands.add_parser("falsify", help="reject candidate tables in n = 2, 4, 5, 6")
    _add_common(sub, table=False)
    sub.add_argument("--candidates", type=int, default=100, help="candidates per dimension")
    sub.add_argument("--samples", type=int, default=5, help="random pairs per candidate")
    sub.add_argument("--seed", type=int, default=0, help="generation seed")
    sub.set_defaults(handler=_cmd_falsify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        try:
            code, text = args.handler(args)
        except (UsageError, TableFormatError) as exc:
            print(f"hypercross: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return code
    except Exception as exc:  # anything unexpected is an invariant breach
        print(f"hypercross: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
