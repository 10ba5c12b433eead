"""Command-line interface: ``check``, ``sweep`` and ``oracle``.

Exit codes for ``check``: 0 smooth, 10 singular, 20 criterion inapplicable,
1 resource errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .bruhat import DEFAULT_MAX_INTERVAL, IntervalBudgetError
from .criterion import Permutation, Status, Verdict, is_smooth, permutation_to_weyl
from .rootsys import CartanType, RootSystemError, build_root_system
from .sweep import SweepError, oracle_report, record_from_verdict, sweep, write_records
from .weyl import WeylError, from_word

EXIT_SMOOTH = 0
EXIT_RESOURCE = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_SINGULAR = 10
EXIT_INAPPLICABLE = 20

ORACLE_MAX_RANK = 5


class UsageError(Exception):
    pass


def _cartan_type(args) -> CartanType:
    try:
        return CartanType(args.type, args.rank)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None


def _parse_word(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(p) for p in text.replace(" ", "").split(",")]
    except ValueError:
        raise UsageError(f"bad word {text!r}; expected comma-separated simple indices") from None


def _fmt_root(r) -> str:
    return "(" + ",".join(str(c) for c in r) + ")"


def _render(v: Verdict, explain: bool) -> str:
    word = " ".join(f"s{i}" for i in v.w_word) or "e"
    yes = {True: "yes", False: "no", None: "not evaluated"}
    lines = [f"{v.cartan_type}  w = {word}  (length {v.length})"]
    if v.status is Status.CRITERION_INAPPLICABLE and not v.criterion_only:
        lines.append("  the criterion does not characterize smoothness in type G2")
        lines.append("  rerun with --allow-g2 to see the condition values")
    else:
        lines.append(f"  palindromic Poincare polynomial: {yes[v.palindromic]}")
        lines.append(f"  curve set closed under convex hull: {yes[v.hull_closed]}")
        if v.criterion_only:
            lines.append(f"  criterion-only (G2): both conditions hold: {yes[v.conditions_hold]}")
    lines.append(f"  verdict: {v.status.value}")
    if explain and v.poincare is not None:
        lines.append(f"  Poincare coefficients: {list(v.poincare)}")
        lines.append(f"  E(w) ({len(v.curve_roots)} roots): " + " ".join(map(_fmt_root, v.curve_roots)))
        if v.hull_violations is None:
            lines.append("  hull violations: skipped")
        elif not v.hull_violations:
            lines.append("  hull violations: none")
        for gamma in v.hull_violations or ():
            lam = v.witnesses.get(gamma, ())
            combo = " + ".join(
                f"{c}*{_fmt_root(g)}" for c, g in zip(lam, v.curve_roots) if c
            )
            lines.append(f"  hull violation {_fmt_root(gamma)} = {combo}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    ct = _cartan_type(args)
    rs = build_root_system(ct)
    if args.perm is not None and args.word is not None:
        raise UsageError("give either --word or --perm, not both")
    if args.perm is not None:
        if ct.letter != "A":
            raise UsageError("--perm is only valid for type A")
        try:
            w = permutation_to_weyl(rs, Permutation.parse(args.perm))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            w = from_word(rs, _parse_word(args.word or ""))
        except WeylError as exc:
            raise UsageError(str(exc)) from None
    v = is_smooth(rs, w, allow_g2=args.allow_g2, max_interval=args.max_interval)
    if args.json:
        print(record_from_verdict(ct, v).to_json())
    else:
        print(_render(v, args.explain))
    return {
        Status.SMOOTH: EXIT_SMOOTH,
        Status.SINGULAR: EXIT_SINGULAR,
        Status.CRITERION_INAPPLICABLE: EXIT_INAPPLICABLE,
    }[v.status]


def cmd_sweep(args) -> int:
    ct = _cartan_type(args)
    if ct.letter == "G" and not args.allow_g2:
        raise UsageError("sweeping G2 requires --allow-g2 (records carry condition values only)")
    records = sweep(
        ct,
        jobs=args.jobs,
        allow_g2=args.allow_g2,
        max_interval=args.max_interval,
        i_know=args.i_know,
    )
    summary = write_records(records, args.out, sys.stdout)
    print(summary.to_json(), file=sys.stderr if args.out is None else sys.stdout)
    return 0


def cmd_oracle(args) -> int:
    if args.type.upper() != "A":
        raise UsageError("the pattern oracle exists for type A only")
    ct = _cartan_type(args)
    if ct.rank > args.max_rank:
        raise UsageError(f"rank {ct.rank} exceeds --max-rank {args.max_rank}")
    rep = oracle_report(ct.rank, jobs=args.jobs, max_interval=args.max_interval)
    print(
        f"A{ct.rank}: {len(rep.mismatches)} mismatches over {rep.total} elements, "
        f"smooth count {rep.smooth}"
    )
    if rep.ok:
        return 0
    print("length  elements  mismatches")
    for k, (n, bad) in rep.by_length.items():
        print(f"{k:6d}  {n:8d}  {bad:10d}")
    for perm, verdict, expected in rep.mismatches:
        print(f"  {perm}: criterion {verdict}, pattern oracle smooth={expected}")
    return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubsmooth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", required=True, help="Cartan type letter A-G")
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--max-interval", type=int, default=DEFAULT_MAX_INTERVAL,
                       help="largest lower interval to enumerate (default %(default)s)")

    p = sub.add_parser("check", help="decide smoothness of a single X(w)")
    common(p)
    p.add_argument("--word", help="comma-separated simple indices, e.g. 2,1,2")
    p.add_argument("--perm", help="type A one-line notation, e.g. 4,2,3,1")
    p.add_argument("--json", action="store_true", help="emit one JSON record")
    p.add_argument("--explain", action="store_true", help="print the full evidence")
    p.add_argument("--allow-g2", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="evaluate every element of W")
    common(p)
    p.add_argument("--out", help="write records here instead of stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-g2", action="store_true")
    p.add_argument("--i-know", action="store_true", help="allow sweeps beyond E7")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="compare against 3412/4231 pattern avoidance (type A)")
    common(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-rank", type=int, default=ORACLE_MAX_RANK)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntervalBudgetError, SweepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
