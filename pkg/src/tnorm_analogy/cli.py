"""Command-line front end.

Exit status: 0 when the answer is positive (holds, root found, solutions
exist), 1 for a well-formed negative answer, 2 for usage errors.
"""

import argparse
import csv
import io
import math
import sys

from tnorm_analogy import boolean, graded, means, solver
from tnorm_analogy.errors import NoBracket
from tnorm_analogy.frank import FrankParam
from tnorm_analogy.options import SolverOptions
from tnorm_analogy.tnorms import Frank, Lukasiewicz, Min, Product

PROG = "tnorm-analogy"


def fmt(v):
    """12 significant digits; fixed for 1e-4 <= |v| < 1e6, scientific otherwise."""
    v = float(v) + 0.0
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if 1e-4 <= abs(v) < 1e6:
        exponent = int(f"{v:.11e}".rsplit("e", 1)[1])
        return f"{v:.{max(11 - exponent, 0)}f}"
    return f"{v:.11e}"


def fmt_param(p):
    if p.is_sentinel:
        return str(p)
    return fmt(p.value)


def fmt_mean(r):
    if r.is_geo or r.is_min or r.is_max:
        return str(r)
    return fmt(r.r)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"{PROG}: error: {message}\n")
        sys.exit(2)


def _floats(text, n, sep=","):
    parts = text.split(sep)
    if len(parts) != n:
        raise argparse.ArgumentTypeError(f"expected {n} values separated by {sep!r}, got {text!r}")
    try:
        vals = [float(s) for s in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number in {text!r}") from None
    for v in vals:
        if not 0.0 <= v <= 1.0:
            raise argparse.ArgumentTypeError(f"{v!r} is not in [0, 1]")
    return vals


def quad_arg(text):
    return graded.Quadruple(*_floats(text, 4))


def triple_arg(text):
    return tuple(_floats(text, 3))


def range_arg(text):
    lo, hi = _floats(text, 2, sep=":")
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def frank_param_arg(text):
    try:
        return FrankParam(math.inf if text.strip().lower() == "inf" else float(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad Frank parameter {text!r}: {exc}") from None


def tnorm_arg(text):
    key = text.strip().lower()
    simple = {"min": Min(), "product": Product(), "lukasiewicz": Lukasiewicz()}
    if key in simple:
        return simple[key]
    if key.startswith("frank:"):
        return Frank(frank_param_arg(key[len("frank:"):]))
    raise argparse.ArgumentTypeError(
        f"unknown t-norm {text!r} (use min, product, lukasiewicz or frank:P)"
    )


def mean_arg(text):
    try:
        return means.mean_param(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad mean exponent {text!r}") from None


def tol_arg(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be > 0, got {text!r}")
    return v


def steps_arg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 2:
        raise argparse.ArgumentTypeError(f"need at least 2, got {v}")
    return v


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_truth_table(args, out):
    rows = [[*(int(v) for v in q), int(ap)] for q, ap in boolean.ap_truth_table()]
    out.write(_csv_text(["a", "b", "c", "d", "ap"], rows))
    return 0


def cmd_postulates(args, out):
    report = boolean.verify_boolean_postulates()
    for check in report:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status} {check.name} ({check.cases} cases)"
        if not check.passed:
            line += " counterexamples=" + ";".join(
                "".join(str(v) for v in cx) for cx in check.counterexamples
            )
        out.write(line + "\n")
    return 0 if report.passed else 1


def cmd_check(args, out):
    v = graded.analogy_check(args.tnorm, args.quad, args.tol)
    out.write(
        f"{'holds' if v.holds else 'fails'} "
        f"t_residual={fmt(v.t_residual)} s_residual={fmt(v.s_residual)}\n"
    )
    return 0 if v.holds else 1


def cmd_check_mean(args, out):
    res = means.mean_residual(args.r, args.quad)
    holds = res <= args.tol
    out.write(f"{'holds' if holds else 'fails'} residual={fmt(res)}\n")
    return 0 if holds else 1


def cmd_degree(args, out):
    out.write(f"dissim={fmt(graded.mv_degree_dissim(args.quad))}\n")
    out.write(f"similarity={fmt(graded.mv_degree_similarity(args.quad))}\n")
    return 0


def cmd_sweep(args, out):
    a, b, c = args.fixed
    lo, hi = args.range
    curve = solver.sweep_d(args.p, a, b, c, lo, hi, args.steps)
    text = _csv_text(["x", "diff"], [[fmt(x), fmt(d)] for x, d in curve.samples])
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_minimize(args, out):
    a, b, c = args.fixed
    lo, hi = args.range
    m = solver.minimize_over_d(args.p, a, b, c, lo, hi, SolverOptions(tol=args.tol))
    out.write(f"d_star={fmt(m.d_star)} min_diff={fmt(m.min_diff)} root={'yes' if m.root else 'no'}\n")
    return 0 if m.root else 1


def cmd_solve_p(args, out):
    res = solver.solve_p(args.quad, SolverOptions(tol=args.tol, grid_steps=args.grid))
    sols = ",".join(fmt_param(p) for p in res.solutions) or "none"
    out.write(
        f"best_p={fmt_param(res.best_p)} best_residual={fmt(res.best_residual)} solutions={sols}\n"
    )
    return 0 if res.solutions else 1


def cmd_solve_r(args, out):
    try:
        r = means.solve_r(args.quad, SolverOptions(tol=args.tol))
    except NoBracket as exc:
        sys.stderr.write(f"{PROG}: {exc}\n")
        out.write(f"r={fmt_mean(exc.fallback)} residual={fmt(exc.residual)}\n")
        return 1
    out.write(f"r={fmt_mean(r)} residual={fmt(means.mean_residual(r, args.quad))}\n")
    return 0


def build_parser():
    parser = _Parser(prog=PROG, description="T-norm based analogical proportions.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("truth-table", help="Boolean a:b::c:d truth table as CSV")
    p.set_defaults(func=cmd_truth_table)

    p = sub.add_parser("postulates", help="exhaustive check of the Boolean postulates")
    p.set_defaults(func=cmd_postulates)

    p = sub.add_parser("check", help="t-norm analogy check")
    p.add_argument("--tnorm", type=tnorm_arg, required=True)
    p.add_argument("--quad", type=quad_arg, required=True)
    p.add_argument("--tol", type=tol_arg, default=graded.DEFAULT_TOL)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-mean", help="power-mean analogy check")
    p.add_argument("--r", type=mean_arg, required=True)
    p.add_argument("--quad", type=quad_arg, required=True)
    p.add_argument("--tol", type=tol_arg, default=graded.DEFAULT_TOL)
    p.set_defaults(func=cmd_check_mean)

    p = sub.add_parser("degree", help="graded analogy degrees")
    p.add_argument("--quad", type=quad_arg, required=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("sweep", help="sample diff_p(x) as CSV")
    p.add_argument("--p", type=frank_param_arg, required=True)
    p.add_argument("--fixed", type=triple_arg, required=True)
    p.add_argument("--range", type=range_arg, required=True)
    p.add_argument("--steps", type=steps_arg, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("minimize", help="minimize diff_p over the fourth value")
    p.add_argument("--p", type=frank_param_arg, required=True)
    p.add_argument("--fixed", type=triple_arg, required=True)
    p.add_argument("--range", type=range_arg, required=True)
    p.add_argument("--tol", type=tol_arg, default=SolverOptions.tol)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("solve-p", help="search Frank parameters making the analogy hold")
    p.add_argument("--quad", type=quad_arg, required=True)
    p.add_argument("--tol", type=tol_arg, default=SolverOptions.tol)
    p.add_argument("--grid", type=steps_arg, default=SolverOptions.grid_steps)
    p.set_defaults(func=cmd_solve_p)

    p = sub.add_parser("solve-r", help="power-mean exponent making the analogy hold")
    p.add_argument("--quad", type=quad_arg, required=True)
    p.add_argument("--tol", type=tol_arg, default=SolverOptions.tol)
    p.set_defaults(func=cmd_solve_r)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"{PROG}: error: {exc}\n")
        return 2


run = main


if __name__ == "__main__":
    sys.exit(main())
