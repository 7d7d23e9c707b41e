"""Command line interface.

    sylvester det MATRIX.json [--method expansion|bareiss|dodgson] [--trace]
    sylvester minor MATRIX.json --rows 1,2 --cols 1,3
    sylvester verify (--symbolic | --random) [--n N | --n-min A --n-max B] ...
    sylvester replay --n N

stdout carries one JSON document; diagnostics go to stderr.  Exit codes:
0 ok, 1 identity violation, 2 usage or input error, 3 method failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bareiss import bareiss_det
from .det import det
from .errors import SylvesterError, ZeroInteriorMinor
from .matrix import MinorSpec, generic_matrix, matrix_from_json, matrix_to_json, minor
from .verify import (
    MAX_REPLAY_N,
    check_all,
    check_general,
    dodgson_condensation,
    random_numeric_campaign,
    replay_induction_step,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_METHOD = 0, 1, 2, 3
SYMBOLIC_MAX_N = 5
SYMBOLIC_LARGE_N = 5


class UsageError(Exception):
    pass


def _emit(doc):
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _fail(code, message):
    print(f"sylvester: {message}", file=sys.stderr)
    return code


def _load_matrix(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return matrix_from_json(text)


def _index_list(text):
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    return values


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _unsigned(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an unsigned integer, got {value}")
    return value


def cmd_det(args):
    if args.trace and args.method != "bareiss":
        raise UsageError("--trace is only available with --method bareiss")
    m = _load_matrix(args.matrix)
    start = time.perf_counter()
    trace = None
    if args.method == "expansion":
        value = det(m)
    elif args.method == "bareiss":
        value, trace = bareiss_det(m)
    else:
        try:
            value = dodgson_condensation(m)
        except ZeroInteriorMinor as exc:
            return _fail(EXIT_METHOD, f"{exc} (try --method bareiss)")
    elapsed = time.perf_counter() - start
    out = {"det": str(value), "method": args.method}
    if trace is not None and args.trace:
        out["trace"] = trace.to_json()
    if args.timing:
        out["timing_ms"] = round(elapsed * 1000, 3)
    _emit(out)
    return EXIT_OK


def cmd_minor(args):
    m = _load_matrix(args.matrix)
    spec = MinorSpec(tuple(args.rows), tuple(args.cols))
    sub = minor(m, spec)
    _emit({"rows": spec.deleted_rows, "cols": spec.deleted_cols,
           "minor": matrix_to_json(sub), "det": str(det(sub))})
    return EXIT_OK


def _n_values(args, default):
    if args.n is not None and (args.n_min is not None or args.n_max is not None):
        raise UsageError("--n conflicts with --n-min/--n-max")
    if args.n is not None:
        return [args.n]
    if args.n_min is None and args.n_max is None:
        return [default]
    lo = args.n_min if args.n_min is not None else 2
    hi = args.n_max if args.n_max is not None else lo
    if lo > hi:
        raise UsageError(f"--n-min {lo} exceeds --n-max {hi}")
    return list(range(lo, hi + 1))


def cmd_verify(args):
    n_values = _n_values(args, 3)
    if n_values[0] < 2:
        raise UsageError("the identity needs n >= 2")
    if args.indices is not None and len(n_values) != 1:
        raise UsageError("--indices needs a single --n")
    if args.symbolic:
        if args.trials is not None or args.seed is not None or args.bound is not None:
            raise UsageError("--trials/--seed/--bound apply to --random only")
        if n_values[-1] > SYMBOLIC_MAX_N:
            raise UsageError(f"symbolic mode is capped at n = {SYMBOLIC_MAX_N}")
        if n_values[-1] >= SYMBOLIC_LARGE_N and not args.allow_large:
            raise UsageError(f"symbolic n = {SYMBOLIC_LARGE_N} requires --allow-large")
        reports = []
        for n in n_values:
            m = generic_matrix(n)
            if args.indices is not None:
                reports.append(check_general(m, *args.indices))
            else:
                reports.extend(check_all(m))
        holds = all(r.holds for r in reports)
        _emit({
            "identity": "sylvester",
            "mode": "symbolic",
            "n": n_values,
            "checks_run": len(reports),
            "violations": sum(not r.holds for r in reports),
            "holds": holds,
            "reports": [r.to_json(include_sides=args.show_sides) for r in reports],
        })
    else:
        if args.allow_large or args.show_sides:
            raise UsageError("--allow-large/--show-sides apply to --symbolic only")
        summary = random_numeric_campaign(
            n_values,
            trials=args.trials if args.trials is not None else 100,
            seed=args.seed if args.seed is not None else 0,
            entry_bound=args.bound if args.bound is not None else 9,
            indices=args.indices,
        )
        holds = summary.ok
        _emit(summary.to_json())
    return EXIT_OK if holds else EXIT_VIOLATION


def cmd_replay(args):
    if not 1 <= args.n <= MAX_REPLAY_N:
        raise UsageError(f"replay needs 1 <= n <= {MAX_REPLAY_N}, got {args.n}")
    report = replay_induction_step(args.n)
    _emit(report.to_json())
    return EXIT_OK if report.holds else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sylvester", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="exact determinant of a JSON matrix")
    p.add_argument("matrix", help="matrix JSON file, or - for stdin")
    p.add_argument("--method", choices=("expansion", "bareiss", "dodgson"), default="expansion")
    p.add_argument("--trace", action="store_true", help="include the Bareiss elimination trace")
    p.add_argument("--timing", action="store_true", help="include wall time (not deterministic)")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("minor", help="delete one or two rows and columns")
    p.add_argument("matrix", help="matrix JSON file, or - for stdin")
    p.add_argument("--rows", type=_index_list, required=True, help="e.g. 1 or 1,3")
    p.add_argument("--cols", type=_index_list, required=True, help="e.g. 2 or 2,3")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("verify", help="check the identity symbolically or on random matrices")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--random", action="store_true")
    p.add_argument("--n", type=_positive)
    p.add_argument("--n-min", type=_positive)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--indices", type=_positive, nargs=4, metavar=("I", "J", "K", "L"))
    p.add_argument("--trials", type=_positive)
    p.add_argument("--seed", type=_unsigned)
    p.add_argument("--bound", type=_positive)
    p.add_argument("--allow-large", action="store_true", help=f"permit symbolic n = {SYMBOLIC_LARGE_N}")
    p.add_argument("--show-sides", action="store_true", help="render both sides (symbolic mode)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("replay", help="replay the bordering induction step term by term")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, SylvesterError) as exc:
        return _fail(EXIT_USAGE, str(exc))


if __name__ == "__main__":
    sys.exit(main())
