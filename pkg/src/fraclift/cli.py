"""Command-line surface.

Subcommands:
  deriv           differintegrate an expression or series file, through the
                  termwise rule (default) or the lifted shift path
  lift            lift input into the shifted-lattice representation (JSON)
  project         project a lifted JSON file back to a series
  verify          run the named identity suites; exit 1 on any failure
  oracle-compare  termwise vs. quadrature oracle table (CSV)
  kernel-check    report which terms the order-k kernel annihilates

Numeric output in machine formats (json, csv) is printed with 17 significant
digits and is byte-deterministic for identical inputs. Exit codes: 0 success
or all-pass, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys

from . import config
from .coeffseq import GenSeries, series_eval, series_from_json, series_to_json
from .errors import FracliftError
from .lifted import lift_gen, lifted_from_json, lifted_to_json, project, shift
from .oracle import QuadratureConfig, compare
from .parser import to_series
from .rl import rl_kernel_predicate, rl_series
from .verify import SUITES, run_suites


def _num(v):
    return format(float(v), ".17g")


def _pretty_num(v):
    return format(float(v), ".12g")


def _pretty_series(f: GenSeries) -> str:
    if f.is_zero:
        return "0"
    if f.basepoint == 0.0:
        base = "x"
    else:
        base = "(x - %s)" % _pretty_num(f.basepoint)
    parts = []
    for e, c in f.terms:
        if e == 0.0:
            parts.append(_pretty_num(c))
        elif e == 1.0:
            parts.append("%s * %s" % (_pretty_num(c), base))
        else:
            parts.append("%s * %s^%s" % (_pretty_num(c), base, _pretty_num(e)))
    return " + ".join(parts)


def _series_csv(f: GenSeries) -> str:
    lines = ["exp,coef"]
    for e, c in f.terms:
        lines.append("%s,%s" % (_num(e), _num(c)))
    return "\n".join(lines) + "\n"


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_series(args) -> GenSeries:
    if getattr(args, "expr", None):
        return to_series(args.expr, args.basepoint, args.order)
    if getattr(args, "series_file", None):
        return series_from_json(_read_text(args.series_file))
    raise FracliftError("provide --expr or --series-file")


def _add_input_opts(p):
    p.add_argument("--expr", help="expression, e.g. 'x^2 + 3*x' or '(x-0)^(-0.5)'")
    p.add_argument("--series-file",
                   help="series JSON file path ('-' for stdin)")
    p.add_argument("--basepoint", type=float, default=0.0,
                   help="expansion base point (default 0)")
    p.add_argument("--order", type=int, default=16,
                   help="jet truncation order for transcendental input (default 16)")


def _annihilated(f: GenSeries, k: float):
    out = []
    for e, c in f.terms:
        if rl_kernel_predicate(e, k):
            out.append((e, c, e + 1.0 - k))
    return out


def cmd_deriv(args):
    f = _load_series(args)
    k = args.k
    killed = _annihilated(f, k)

    def lifted_path():
        return project(shift(lift_gen(f), k))

    if args.compare_paths:
        direct = rl_series(f, k)
        other = lifted_path()
        exps = sorted({e for e, _ in direct.terms} | {e for e, _ in other.terms})
        print("exp,rl_coef,lifted_coef,abs_diff")
        worst = 0.0
        for e in exps:
            ca = direct.coefficient(e)
            cb = other.coefficient(e)
            worst = max(worst, abs(ca - cb))
            print("%s,%s,%s,%s" % (_num(e), _num(ca), _num(cb), _num(abs(ca - cb))))
        print("# max abs diff %s" % _num(worst))
        return 0

    result = rl_series(f, k) if args.via == "rl" else lifted_path()

    if args.format == "json":
        killed_json = ", ".join(
            '{"exp": %s, "coef": %s, "kernel_arg": %s}' % (_num(e), _num(c), _num(r))
            for e, c, r in killed)
        values = ""
        if args.at:
            values = ", ".join(
                '{"x": %s, "value": %s}' % (_num(x), _num(series_eval(result, x)))
                for x in args.at)
        print('{"k": %s, "via": "%s", "series": %s, '
              '"annihilated": [%s], "values": [%s]}'
              % (_num(k), args.via, series_to_json(result), killed_json, values))
    elif args.format == "csv":
        sys.stdout.write(_series_csv(result))
    else:
        if result.is_zero and killed:
            reasons = ", ".join("alpha+1-k = %s" % _pretty_num(r)
                                for _, _, r in killed)
            print("0 (kernel: %s)" % reasons)
        else:
            print("result: %s" % _pretty_series(result))
            for e, c, r in killed:
                print("annihilated: %s * x^%s  (kernel: alpha+1-k = %s)"
                      % (_pretty_num(c), _pretty_num(e), _pretty_num(r)))
        for x in args.at or ():
            print("value at x = %s: %s"
                  % (_pretty_num(x), _pretty_num(series_eval(result, x))))
    return 0


def cmd_lift(args):
    f = _load_series(args)
    rho = lift_gen(f)
    if args.k:
        rho = shift(rho, args.k)
    print(lifted_to_json(rho))
    return 0


def cmd_project(args):
    rho = lifted_from_json(_read_text(args.lifted_file))
    if args.k:
        rho = shift(rho, args.k)
    f = project(rho)
    if args.format == "pretty":
        print(_pretty_series(f))
    else:
        print(series_to_json(f))
    return 0


def cmd_verify(args):
    if args.perturb_gamma:
        config.gamma_perturb = args.perturb_gamma
    names = "all" if args.suite == "all" else args.suite
    results = run_suites(names, trials=args.trials, seed=args.seed,
                         order=args.order)
    failed = 0
    worst = 0.0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        note = "  [%s]" % r.note if r.note else ""
        print("suite %-28s %s (max residual %.3e, %d cases)%s"
              % (r.name + ":", status, r.max_residual, r.cases, note))
        worst = max(worst, r.max_residual)
        if not r.passed:
            failed += 1
    if failed:
        print("%d suite(s) failed" % failed)
        return 1
    print("all identities pass, max residual <= %.3e" % worst)
    return 0


def cmd_oracle_compare(args):
    f = _load_series(args)
    cfg = QuadratureConfig(abs_tol=args.abs_tol, rel_tol=args.rel_tol,
                           max_subdivisions=args.max_subdivisions,
                           fd_step=args.fd_step)
    table = compare(f, args.k, args.at, cfg)
    if args.format == "json":
        rows = ", ".join(
            '{"x": %s, "termwise": %s, "oracle": %s, "abs_diff": %s}'
            % tuple(_num(v) for v in row) for row in table.rows)
        print('{"k": %s, "rows": [%s]}' % (_num(args.k), rows))
    else:
        sys.stdout.write(table.to_csv())
    return 0


def cmd_kernel_check(args):
    f = _load_series(args)
    k = args.k
    for e, c in f.terms:
        arg = e + 1.0 - k
        if rl_kernel_predicate(e, k):
            print("term %s * x^%s: ANNIHILATED (alpha+1-k = %s, nonpositive integer)"
                  % (_pretty_num(c), _pretty_num(e), _pretty_num(arg)))
        else:
            print("term %s * x^%s: kept (alpha+1-k = %s)"
                  % (_pretty_num(c), _pretty_num(e), _pretty_num(arg)))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="fraclift",
        description="Fractional derivatives of generalized power series, "
                    "termwise or through the commuting lifted shift.")
    ap.add_argument("--tol", type=float, default=None,
                    help="integer-detection tolerance override "
                         "(also FRACLIFT_TOL)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deriv", help="differintegrate an expression or series")
    _add_input_opts(p)
    p.add_argument("--k", type=float, required=True, help="order (real)")
    p.add_argument("--at", type=float, action="append",
                   help="evaluation point (repeatable)")
    p.add_argument("--via", choices=("rl", "lifted"), default="rl")
    p.add_argument("--compare-paths", action="store_true",
                   help="print both paths with a per-term diff column")
    p.add_argument("--format", choices=("pretty", "json", "csv"),
                   default="pretty")
    p.set_defaults(fn=cmd_deriv)

    p = sub.add_parser("lift", help="lift input to the shifted-lattice form")
    _add_input_opts(p)
    p.add_argument("--k", type=float, default=0.0,
                   help="apply a shift after lifting")
    p.set_defaults(fn=cmd_lift)

    p = sub.add_parser("project", help="project a lifted JSON file to a series")
    p.add_argument("--lifted-file", required=True,
                   help="lifted JSON path ('-' for stdin)")
    p.add_argument("--k", type=float, default=0.0,
                   help="apply a shift before projecting")
    p.add_argument("--format", choices=("pretty", "json"), default="json")
    p.set_defaults(fn=cmd_project)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", default="all",
                   choices=tuple(SUITES) + ("all",))
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--perturb-gamma", type=float, default=0.0,
                   help="test hook: multiply nonzero gamma ratios by (1+eps)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle-compare",
                       help="termwise vs. quadrature oracle table")
    _add_input_opts(p)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--at", type=float, action="append", required=True)
    p.add_argument("--abs-tol", type=float, default=1e-9)
    p.add_argument("--rel-tol", type=float, default=1e-8)
    p.add_argument("--fd-step", type=float, default=1e-3)
    p.add_argument("--max-subdivisions", type=int, default=256)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_oracle_compare)

    p = sub.add_parser("kernel-check",
                       help="evaluate the kernel predicate per term")
    _add_input_opts(p)
    p.add_argument("--k", type=float, required=True)
    p.set_defaults(fn=cmd_kernel_check)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.tol is not None:
        config.int_tol = args.tol
    try:
        return args.fn(args)
    except FracliftError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
