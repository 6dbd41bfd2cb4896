"""``nestcalc`` command line: ``verify``, ``grid`` and ``harmonics``.

Exit codes: 0 success, 1 a check or a write failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import grid, harmonics, sampling, verify
from .jets import laplacian_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_range(text: str) -> range:
    parts = text.split(":")
    try:
        if len(parts) != 2:
            raise ValueError
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"range {text!r} is not of the form min:max (integers)") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"range {text!r} has min > max")
    return range(lo, hi + 1)


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be non-negative, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nestcalc", description="Geometric-calculus identities, checked numerically.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?", default="all", choices=("all",) + verify.SUITES)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=_positive_float, default=None, help="replace every upper-bound tolerance")
    p.add_argument("--json", action="store_true", help="print the report as JSON instead of a table")
    p.add_argument("--out", default=None, help="also write the JSON report to this path")

    p = sub.add_parser("grid", help="sample a field on a grid and write CSV")
    p.add_argument("--range", dest="ranges", action="append", required=True, metavar="MIN:MAX:COUNT",
                   help="one per axis, in coordinate order")
    p.add_argument("--field", required=True, help="builtin name, 'k,m,n' monomial or solution JSON path")
    p.add_argument("--out", default=None, help="CSV path (stdout when omitted)")

    p = sub.add_parser("harmonics", help="enumerate harmonic monomials x1^k x_p^m x^n")
    p.add_argument("--range", dest="ranges", action="append", type=_int_range, metavar="MIN:MAX",
                   help="k, m, n ranges in order; one flag applies to all three (default -5:5)")
    p.add_argument("--seed", type=int, default=42)
    return parser


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, seed=args.seed, tol=args.tol)
    print(report.to_json() if args.json else report.table())
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(report.to_json() + "\n")
        except OSError as exc:
            print(f"nestcalc: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_grid(args, parser) -> int:
    try:
        spec = grid.GridSpec(tuple(grid.parse_axis(r) for r in args.ranges), args.field)
    except grid.GridSpecError as exc:
        parser.error(str(exc))
    text = grid.to_csv(spec)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"nestcalc: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def harmonics_table(k_range, m_range, n_range, seed: int = 42, count: int = 20) -> list[dict]:
    points = sampling.interior_points(seed, count, 3)
    rows = []
    for t in harmonics.enumerate_harmonic_monomials(k_range, m_range, n_range):
        f = harmonics.monomial_cartesian(t)
        worst = max(abs(laplacian_oracle(f, p)) for p in points)
        rows.append({"k": t.k, "m": t.m, "n": t.n, "maxResidual": worst})
    return rows


def cmd_harmonics(args, parser) -> int:
    ranges = args.ranges or [range(-5, 6)]
    if len(ranges) == 1:
        ranges = ranges * 3
    if len(ranges) != 3:
        parser.error("--range takes one value for all axes or exactly three (k, m, n)")
    print(json.dumps(harmonics_table(*ranges, seed=args.seed), indent=2))
    return EXIT_OK


_VALUE_FLAGS = ("--range", "--field", "--tol", "--seed")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--range -2:2:81`` into ``--range=-2:2:81`` so argparse does not see an option."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and len(nxt) > 1 and (nxt[1].isdigit() or nxt[1] == "."):
                out.append(f"{tok}={nxt}")
            else:
                out += [tok, nxt]
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "grid":
            return cmd_grid(args, parser)
        return cmd_harmonics(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
