"""Command-line front end: ``randposet {generate,enumerate,validate,convergence}``.

Exit codes: 0 success, 1 failed validation, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys

from . import oracle
from .chain import ChainConfig, fresh_seed, sample_posets
from .formats import FORMATS, format_poset
from .stats import SampleHistogram, empirical_tv, tv_report


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="randposet", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="sample labelled posets")
    g.add_argument("-n", "--size", type=_positive, required=True)
    g.add_argument("-m", "--steps", type=_nonneg, help="chain steps (default n^2)")
    g.add_argument("--seed", type=_seed, help="64-bit seed (default: fresh entropy, echoed to stderr)")
    g.add_argument("--count", type=_positive, default=1)
    g.add_argument("--format", choices=FORMATS, default="edge-list")
    g.add_argument("--jobs", type=_positive, default=1)
    g.add_argument("--ordered", action="store_true", help="keep sample order with --jobs > 1")

    e = sub.add_parser("enumerate", help="count all labelled DAGs and posets")
    e.add_argument("-n", "--size", type=_positive, required=True)
    e.add_argument("--dump", action="store_true", help="print every poset key")
    e.add_argument("--records", action="store_true", help="print 'index, bitstring, poset-index' per DAG")

    v = sub.add_parser("validate", help="run the exact oracle checks")
    v.add_argument("-n", "--size", type=_positive, required=True)
    v.add_argument("--steps", type=_nonneg, default=50, help="TV-domination horizon")
    v.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)

    c = sub.add_parser("convergence", help="TV to uniform versus step count")
    c.add_argument("-n", "--size", type=_positive, required=True)
    c.add_argument("-m", "--steps", type=_nonneg, nargs="+", help="step counts (default n^2)")
    c.add_argument("--exact", action="store_true", help="exact matrix powers (n <= 3)")
    c.add_argument("--samples", type=_positive, default=100_000)
    c.add_argument("--seed", type=_seed)
    c.add_argument("--jobs", type=_positive, default=1)
    c.add_argument("--posets", type=_positive, help="number of posets M when n > 5")
    c.add_argument("--json", action="store_true", help="one JSON report per step count")
    c.add_argument("--histogram", help="write the last histogram as CSV to this path")
    return ap


def cmd_generate(args, out) -> int:
    seed = fresh_seed() if args.seed is None else args.seed
    cfg = ChainConfig(args.size, args.steps, seed)
    print(f"# seed {seed} n {cfg.n} m {cfg.m}", file=sys.stderr)
    ordered = args.ordered or args.jobs == 1
    for key in sample_posets(cfg.n, args.count, cfg.m, seed, args.jobs, ordered):
        out.write(format_poset(key, args.format))
        if args.format == "edge-list":
            out.write("\n")
        out.flush()
    return 0


def cmd_enumerate(args, out) -> int:
    if args.size > oracle.MAX_ENUM_N:
        raise UsageError(
            f"enumeration is limited to n <= {oracle.MAX_ENUM_N} (MAX_ENUM_N); got n={args.size}"
        )
    space = oracle.enumerate_posets(args.size)
    out.write(f"dags: {space.N}, posets: {space.M}\n")
    if args.dump:
        for p in space.posets:
            out.write(p.hex() + "\n")
    if args.records:
        out.write(space.export_records())
    return 0


def cmd_validate(args, out) -> int:
    if args.size > oracle.MAX_MATRIX_N:
        raise UsageError(
            f"validation is limited to n <= {oracle.MAX_MATRIX_N} (MAX_MATRIX_N); got n={args.size}"
        )
    checks = oracle.run_checks(args.size, args.steps, corrupt=args.corrupt)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        out.write(f"{status} {c.name}" + (f" ({c.detail})" if c.detail else "") + "\n")
    return 0 if all(c.passed for c in checks) else 1


def cmd_convergence(args, out) -> int:
    n = args.size
    steps = args.steps or [n * n]
    if args.exact:
        if n > oracle.MAX_EXACT_N:
            raise UsageError(f"exact mode is limited to n <= {oracle.MAX_EXACT_N}; got n={n}")
        space = oracle.enumerate_posets(n)
        P = oracle.build_mcstar_matrix(space, exact=True)
        out.write("m,tv,tv_exact\n")
        for m, tv in zip(steps, oracle.poset_tv_curve(space, P, steps)):
            out.write(f"{m},{float(tv)!r},{tv}\n")
        return 0

    if args.posets is not None:
        M = args.posets
    elif n <= oracle.MAX_ENUM_N:
        M = oracle.enumerate_posets(n).M
    else:
        raise UsageError(f"number of posets unknown for n={n}; pass --posets")
    seed = fresh_seed() if args.seed is None else args.seed
    print(f"# seed {seed}", file=sys.stderr)
    if not args.json:
        out.write("m,tv\n")
    hist = None
    for m in steps:
        hist = SampleHistogram(n).update(sample_posets(n, args.samples, m, seed, args.jobs, False))
        if args.json:
            out.write(tv_report(n, m, hist, M) + "\n")
        else:
            out.write(f"{m},{empirical_tv(hist, M)!r}\n")
        out.flush()
    if args.histogram and hist is not None:
        with open(args.histogram, "w") as f:
            f.write(hist.to_csv())
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "enumerate": cmd_enumerate,
    "validate": cmd_validate,
    "convergence": cmd_convergence,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"randposet {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
