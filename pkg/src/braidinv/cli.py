"""Command line driver wiring every module together.

Subcommands: lift, zmap, qexpand, asymptotics, beta, basis, trace,
reproduce.  Exit codes: 0 when everything asked for passed, 1 for usage
problems, 2 when a computation disagrees with a bundled reference value.

The reproduce subcommand checks computed tables against reference values
recorded from the source material this artifact reproduces.  Two reference
cells are known misprints there; when the computation disagrees with the
printed value but matches the independently cross-checked correction, the
row is marked FLAGGED rather than FAIL and does not affect the exit code.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .basis_solver import (SingularMatrixError, balanced_nodes, build_balanced,
                           build_unbalanced, entry_sequence, invert,
                           solve_t_target)
from .braid_ring import (BraidSum, identity, pair, render, sigma, sigma_bar,
                         sigma_power, tau)
from .convergence import (BraidSumSequence, biconvergence_report,
                          harmonic_sigma_sequence, lift_truncation_sequence,
                          pair_partial_sequence)
from .inverse_engine import (PairExpansion, asymptotic_check, closed_form_lift,
                             power_pair_expand, q_expand, reversion_lift,
                             strengthen_to)
from .kontsevich import Z, focus_order, focus_profile
from .regularization import beta_relation_lhs, theta_value, z1_tauhat_partial
from .render import (Table, float_column, fmt_float, fmt_rational, render_csv,
                     render_json, render_text)

ENV_FLOAT_DIGITS = "BRAIDINV_FLOAT_DIGITS"
DEFAULT_FLOAT_DIGITS = 50


class UsageError(Exception):
    """Bad arguments or inputs; mapped to exit code 1."""


@dataclass
class OutputSpec:
    format: str = "text"
    float_digits: int = DEFAULT_FLOAT_DIGITS
    out_path: str | None = None

    @classmethod
    def from_args(cls, args, needs_float: bool = False) -> "OutputSpec":
        digits = args.digits
        if digits is None:
            raw = os.environ.get(ENV_FLOAT_DIGITS)
            if raw is not None:
                try:
                    digits = int(raw)
                except ValueError:
                    raise UsageError(f"{ENV_FLOAT_DIGITS} must be an integer, got {raw!r}")
            else:
                digits = DEFAULT_FLOAT_DIGITS
        if digits < 1:
            raise UsageError("float digits must be positive")
        if needs_float and digits < 10:
            raise UsageError("float output needs at least 10 digits")
        return cls(args.format, digits, args.out)

    def emit(self, tables) -> None:
        if self.format == "json":
            payload = render_json(tables)
        elif self.format == "csv":
            payload = render_csv(tables)
        else:
            payload = render_text(tables)
        if self.out_path:
            with open(self.out_path, "w", encoding="utf-8") as handle:
                handle.write(payload)
        else:
            sys.stdout.write(payload)


# ---------------------------------------------------------------------------
# reference values for the reproduce subcommand; printed forms kept verbatim,
# known misprints carry the cross-checked correction alongside

REF_LIFT = {1: "1", 3: "-1/24", 5: "3/640", 7: "-5/7168",
            9: "35/294912", 11: "-63/2883584", 13: "231/54525952"}

REF_PAIR_ROWS = [
    (1, {1: "1"}),
    (3, {1: "9/8", 3: "-1/24"}),
    (5, None),
    (7, {1: "1225/1024", 3: "-245/3072", 5: "49/5120", 7: "-5/7168"}),
    (9, {1: "19845/16384", 3: "-735/8192", 5: "567/40960",
         7: "-405/229376", 9: "35/294912"}),
    (11, {1: "160083/131072", 3: "-12705/13107", 5: "22869/1310720",
          7: "-5445/1835008", 9: "847/2359296", 11: "-63/2883584"}),
]
PAIR_MISPRINTS = {(11, 3): "-12705/131072"}

REF_ZETA2 = ["-1", "-5/4", "-49/36", "-205/144",
             "-5269/3600", "-5369/3600", "266681/176400", "-1077749/705600"]
ZETA2_MISPRINTS = {7: "-266681/176400"}

REF_ONEFIVE = ["1/4", "7/18", "91/192", "1529/2880",
               "37037/64800", "54613/90720", "63566689/101606400"]
REF_ONEFIVE_DIFFS = ["1/4", "5/36", "49/576", "41/720",
                     "5269/129600", "767/25200", "266681/11289600",
                     "1077749/57153600"]

BETA_ZERO_KS = (1, 3, 5, 7, 9, 11, 13)
BETA_RELATION_SS = (3, 5, 7, 9)


def compare_cell(computed: Fraction, printed: str, corrected: str | None) -> str:
    if computed == Fraction(printed):
        return "PASS"
    if corrected is not None and computed == Fraction(corrected):
        return "FLAGGED"
    return "FAIL"


# ---------------------------------------------------------------------------
# braid input parsing

def parse_braid(text: str) -> BraidSum:
    """Named elements, sigma^K, pair:N, or a JSON exponent map."""
    named = {"tau": tau, "sigma": sigma, "sigmabar": sigma_bar,
             "e": identity, "identity": identity}
    if text in named:
        return named[text]()
    if text.startswith("pair:"):
        try:
            return pair(int(text[5:]))
        except ValueError as exc:
            raise UsageError(f"bad pair spec {text!r}: {exc}")
    if text.startswith("sigma^"):
        try:
            return sigma_power(int(text[6:]))
        except ValueError as exc:
            raise UsageError(f"bad power spec {text!r}: {exc}")
    if text.lstrip().startswith("{"):
        try:
            raw = json.loads(text)
            return BraidSum({int(k): Fraction(v) for k, v in raw.items()})
        except (ValueError, AttributeError) as exc:
            raise UsageError(f"bad braid JSON: {exc}")
    raise UsageError(f"unknown braid {text!r}; use tau, sigma, sigmabar, e, "
                     f"pair:N, sigma^K, or a JSON exponent map")


def load_sequence(path: str) -> BraidSumSequence:
    try:
        with open(path, encoding="utf-8") as handle:
            payload = json.load(handle)
        items = [BraidSum({int(k): Fraction(v) for k, v in item.items()})
                 for item in payload["items"]]
        return BraidSumSequence(items, payload.get("label", path))
    except (OSError, ValueError, KeyError, AttributeError) as exc:
        raise UsageError(f"cannot load sequence from {path}: {exc}")


def _odd_order(value: int, what: str) -> int:
    if value < 1 or value % 2 == 0:
        raise UsageError(f"{what} must be odd and positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# subcommands

def cmd_lift(args) -> int:
    spec = OutputSpec.from_args(args)
    order = _odd_order(args.order, "--order")
    if args.method == "reversion":
        P = reversion_lift(order)
    else:
        P = strengthen_to(tau(), order)
    rows = [[str(k), fmt_rational(P.coeffs[k])] for k in sorted(P.coeffs)]
    spec.emit([Table(f"lift coefficients through degree {order}",
                     ["degree", "coefficient"], rows)])
    return 0


def cmd_zmap(args) -> int:
    spec = OutputSpec.from_args(args)
    b = parse_braid(args.braid)
    order = args.order
    jmax = args.jmax if args.jmax is not None else order
    series = Z(b, order)
    series_rows = [[str(i), fmt_rational(c)] for i, c in enumerate(series.coeffs)]
    profile = focus_profile(b, jmax)
    profile_rows = [[str(g.order), fmt_rational(g.value)] for g in profile]
    focused = focus_order(profile)
    note = (f"focussed at degree {focused} through {jmax}" if focused is not None
            else f"not focussed through degree {jmax}")
    spec.emit([
        Table(f"integral of {render(b)} through degree {order}",
              ["degree", "coefficient"], series_rows),
        Table("graded components", ["degree", "value"], profile_rows, [note]),
    ])
    return 0


def cmd_qexpand(args) -> int:
    spec = OutputSpec.from_args(args)
    order = _odd_order(args.order, "--order")
    P = strengthen_to(tau(), order)
    power = args.power
    if power < 1:
        raise UsageError("--power must be positive")
    expansion = power_pair_expand(P, power) if power > 1 else q_expand(P)
    if isinstance(expansion, PairExpansion):
        rows = [[f"q^{n} - q^-{n}", fmt_rational(c)]
                for n, c in sorted(expansion.pair_coeffs.items())]
    else:
        rows = [["q^0", fmt_rational(expansion.constant)]]
        rows += [[f"q^{n} + q^-{n}", fmt_rational(c)]
                 for n, c in sorted(expansion.sym_coeffs.items())]
    notes = [] if power == 1 else \
        ["reported computation; no reference values exist for lift powers"]
    spec.emit([Table(f"pair expansion of lift order {order}, power {power}",
                     ["component", "coefficient"], rows, notes)])
    return 0


def cmd_asymptotics(args) -> int:
    spec = OutputSpec.from_args(args, needs_float=True)
    try:
        orders = [int(x) for x in args.orders.split(",") if x]
    except ValueError as exc:
        raise UsageError(f"bad --orders list: {exc}")
    if not orders:
        raise UsageError("--orders must list at least one order")
    try:
        rows = asymptotic_check(args.j, orders, spec.float_digits)
    except ValueError as exc:
        raise UsageError(str(exc))
    d = spec.float_digits
    with mpmath.workdps(d):
        table_rows = [[str(row.order), fmt_rational(row.coeff),
                       fmt_float(mpmath.mpf(row.coeff.numerator) / row.coeff.denominator, d),
                       fmt_float(row.target, d), fmt_float(row.abs_error, d)]
                      for row in rows]
    spec.emit([Table(f"pair {args.j} coefficient against its limit",
                     ["order", "coefficient", float_column("approx", d),
                      float_column("target", d), float_column("abs_error", d)],
                     table_rows,
                     ["target = (-1)^((j-1)/2) * 4/(pi*j^2)"])])
    return 0


def cmd_beta(args) -> int:
    s = args.s
    if s == 1:
        spec = OutputSpec.from_args(args, needs_float=True)
        d = spec.float_digits
        rows = []
        with mpmath.workdps(d):
            for r in (1, 10, 100, 1000, 10000):
                exact = z1_tauhat_partial(r)
                size = f"{len(str(exact.numerator))}/{len(str(exact.denominator))}"
                estimate = mpmath.mpf(exact.numerator) / exact.denominator / mpmath.pi
                rows.append([str(r), size,
                             fmt_float(estimate, d),
                             fmt_float(abs(estimate - 1), d)])
        spec.emit([Table("Leibniz partial sums, scaled by 4",
                         ["terms", "digits num/den", float_column("over_pi", d),
                          float_column("abs_error_to_1", d)],
                         rows,
                         ["partial sums are held as exact rationals; the "
                          "column shows their printed size",
                          "the alternating series bound keeps the error below "
                          "1/(2r+1)/pi"])])
        return 0
    if s < 3 or s % 2 == 0:
        raise UsageError("--s must be 1 or an odd integer >= 3")
    spec = OutputSpec.from_args(args)
    abel = theta_value(s - 2)
    lhs = beta_relation_lhs(s)
    verdict = "PASS" if lhs == 0 else "FAIL"
    rows = [[f"Abel value at exponent {s - 2}", fmt_rational(abel)],
            ["reduced relation left side", fmt_rational(lhs)],
            ["verdict", verdict]]
    spec.emit([Table(f"residue relation at s = {s}", ["what", "value"], rows,
                     ["the left side reduces exactly to the Abel value of the "
                      "alternating sum with exponent s-2; zero is expected"])])
    return 0 if verdict == "PASS" else 2


def cmd_basis(args) -> int:
    spec = OutputSpec.from_args(args, needs_float=args.solve_t)
    r = args.r
    if r < 0:
        raise UsageError("--r must be nonnegative")
    build = build_unbalanced if args.unbalanced else build_balanced
    kind = "unbalanced" if args.unbalanced else "balanced"
    M = build(r, args.with_factorials)
    try:
        N = invert(M)
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    tables = [
        Table(f"{kind} moment matrix, r = {r}",
              [f"c{j}" for j in range(M.dim)],
              [[fmt_rational(x) for x in row] for row in M.rows]),
        Table(f"inverse, r = {r}",
              [f"c{j}" for j in range(M.dim)],
              [[fmt_rational(x) for x in row] for row in N.rows]),
    ]
    if args.entry:
        try:
            row_s, col_s = args.entry.split(",")
            row, col = int(row_s), int(col_s)
        except ValueError as exc:
            raise UsageError(f"bad --entry: {exc}")
        try:
            value = N.entry(row, col)
        except IndexError as exc:
            raise UsageError(str(exc))
        tables.append(Table(f"inverse entry ({row},{col})",
                            ["row", "col", "value"],
                            [[str(row), str(col), fmt_rational(value)]]))
    if args.solve_t:
        if args.unbalanced:
            raise UsageError("--solve-t applies to the balanced basis")
        solution, b = solve_t_target(r, args.with_factorials)
        nodes = balanced_nodes(r)
        sol_rows = [[str(node), fmt_rational(c)]
                    for node, c in zip(nodes, solution)]
        tables.append(Table("solution of the degree-1 target system",
                            ["braid power", "coefficient"], sol_rows,
                            [f"as a braid sum: {render(b)}"]))
        lift_order = r if r % 2 == 1 else r - 1
        if lift_order >= 1:
            lift_b = q_expand(strengthen_to(tau(), lift_order)).rebuild()
            exponents = sorted(set(b.terms) | set(lift_b.terms))
            cmp_rows = []
            worst = Fraction(0)
            for n in exponents:
                x = b.terms.get(n, Fraction(0))
                y = lift_b.terms.get(n, Fraction(0))
                diff = x - y
                worst = max(worst, abs(diff))
                cmp_rows.append([str(n), fmt_rational(x), fmt_rational(y),
                                 fmt_rational(diff)])
            d = spec.float_digits
            with mpmath.workdps(d):
                worst_f = fmt_float(mpmath.mpf(worst.numerator) / worst.denominator, d)
            tables.append(Table(
                f"solution against the order {lift_order} lift expansion",
                ["braid power", "solution", "lift", "difference"], cmp_rows,
                [f"largest coefficient distance: {worst_f}",
                 "no identity between the columns is asserted; the distance "
                 "is reported as computed"]))
    spec.emit(tables)
    return 0


def cmd_trace(args) -> int:
    spec = OutputSpec.from_args(args)
    window = args.window
    if window < 2:
        raise UsageError("--window must be at least 2")
    if args.sequence == "tauhat":
        seq = lift_truncation_sequence(window)
    elif args.sequence == "pairs":
        seq = pair_partial_sequence(window)
    elif args.sequence == "harmonic":
        seq = harmonic_sigma_sequence(window)
    else:
        seq = load_sequence(args.sequence)
    report = biconvergence_report(seq, args.jmax, window)
    coeff_rows = [[str(n), cls,
                   fmt_rational(seq.items[report.window - 1].terms.get(n, Fraction(0)))]
                  for n, cls in sorted(report.exponent_classes.items())]
    z_rows = [[str(j), cls] for j, cls in sorted(report.z_classes.items())]
    cond = report.condition_c
    if cond.ok:
        cond_rows = [["satisfied", f"{cond.checked_pairs} pairs checked"]]
    else:
        i, j, order = cond.first_violation
        cond_rows = [["violated",
                      f"order(b_{i} - b_{j}) = {order} < {i} "
                      f"({len(cond.violations)} violating pairs)"]]
    verdict_rows = [["(a) coefficient traces", report.verdict_a],
                    ["(b) integral traces", report.verdict_b],
                    ["(c) filtration condition", report.verdict_c]]
    spec.emit([
        Table(f"coefficient traces for {report.label}, window {report.window}",
              ["exponent", "class", "last value"], coeff_rows),
        Table(f"integral traces through degree {report.jmax}",
              ["degree", "class"], z_rows),
        Table("filtration condition", ["status", "detail"], cond_rows),
        Table("verdicts", ["condition", "verdict"], verdict_rows,
              [report.caveat]),
    ])
    return 0


# ---------------------------------------------------------------------------
# reproduce

def _reproduce_lift():
    P = strengthen_to(tau(), 13)
    C = closed_form_lift(13)
    rows = []
    failed = False
    flagged = 0
    for k in sorted(REF_LIFT):
        computed = P.coeffs.get(k, Fraction(0))
        verdict = compare_cell(computed, REF_LIFT[k], None)
        failed = failed or verdict == "FAIL"
        rows.append([f"degree {k}", REF_LIFT[k], fmt_rational(computed), verdict])
    cross = "PASS" if P.coeffs == C.coeffs else "FAIL"
    failed = failed or cross == "FAIL"
    rows.append(["cross-route (closed form)", "equal", "equal" if cross == "PASS"
                 else "different", cross])
    return Table("lift coefficients", ["where", "reference", "computed", "verdict"],
                 rows), failed, flagged


def _reproduce_pairs():
    P = strengthen_to(tau(), 11)
    rows = []
    failed = False
    flagged = 0
    for order, ref in REF_PAIR_ROWS:
        pe = q_expand(P.truncate(order))
        for n in sorted(pe.pair_coeffs):
            computed = pe.pair_coeffs[n]
            if ref is None:
                rows.append([f"order {order}, pair {n}", "(none)",
                             fmt_rational(computed), "INFO"])
                continue
            printed = ref[n]
            verdict = compare_cell(computed, printed,
                                   PAIR_MISPRINTS.get((order, n)))
            if verdict == "FAIL":
                failed = True
            elif verdict == "FLAGGED":
                flagged += 1
            rows.append([f"order {order}, pair {n}", printed,
                         fmt_rational(computed), verdict])
    return Table("pair expansions of the lift truncations",
                 ["where", "reference", "computed", "verdict"], rows,
                 ["FLAGGED rows match the dual-route computation but differ "
                  "from a known misprint in the reference"]), failed, flagged


def _reproduce_zeta2():
    entries = entry_sequence(1, 3, range(1, 9))
    rows = []
    failed = False
    flagged = 0
    for r, computed in zip(range(1, 9), entries):
        printed = REF_ZETA2[r - 1]
        verdict = compare_cell(computed, printed, ZETA2_MISPRINTS.get(r))
        if verdict == "FAIL":
            failed = True
        elif verdict == "FLAGGED":
            flagged += 1
        rows.append([f"r = {r}", printed, fmt_rational(computed), verdict])
    return Table("inverse (1,3) entries over the balanced basis",
                 ["where", "reference", "computed", "verdict"], rows), failed, flagged


def _reproduce_onefive():
    entries = entry_sequence(1, 5, range(2, 10))
    rows = []
    failed = False
    for r, computed in zip(range(2, 10), entries):
        if r <= 8:
            verdict = compare_cell(computed, REF_ONEFIVE[r - 2], None)
            failed = failed or verdict == "FAIL"
            rows.append([f"entry r = {r}", REF_ONEFIVE[r - 2],
                         fmt_rational(computed), verdict])
        else:
            rows.append([f"entry r = {r}", "(none)", fmt_rational(computed),
                         "INFO"])
    previous = Fraction(0)
    for r, computed in zip(range(2, 10), entries):
        diff = computed - previous
        previous = computed
        printed = REF_ONEFIVE_DIFFS[r - 2]
        verdict = compare_cell(diff, printed, None)
        failed = failed or verdict == "FAIL"
        rows.append([f"difference at r = {r}", printed, fmt_rational(diff),
                     verdict])
    return Table("inverse (1,5) entries and their first differences",
                 ["where", "reference", "computed", "verdict"], rows), failed, 0


def _reproduce_beta():
    rows = []
    failed = False
    for k in BETA_ZERO_KS:
        computed = theta_value(k)
        verdict = "PASS" if computed == 0 else "FAIL"
        failed = failed or verdict == "FAIL"
        rows.append([f"Abel value, exponent {k}", "0", fmt_rational(computed),
                     verdict])
    for s in BETA_RELATION_SS:
        computed = beta_relation_lhs(s)
        verdict = "PASS" if computed == 0 else "FAIL"
        failed = failed or verdict == "FAIL"
        rows.append([f"residue relation, s = {s}", "0", fmt_rational(computed),
                     verdict])
    return Table("vanishing of the regularized sums",
                 ["where", "reference", "computed", "verdict"], rows), failed, 0


REPRODUCE_TABLES = {
    "lift": _reproduce_lift,
    "pairs": _reproduce_pairs,
    "zeta2": _reproduce_zeta2,
    "onefive": _reproduce_onefive,
    "beta": _reproduce_beta,
}


def cmd_reproduce(args) -> int:
    spec = OutputSpec.from_args(args)
    names = args.table if args.table else list(REPRODUCE_TABLES)
    tables = []
    any_failed = False
    total_flagged = 0
    for name in names:
        table, failed, flagged = REPRODUCE_TABLES[name]()
        tables.append(table)
        any_failed = any_failed or failed
        total_flagged += flagged
    summary_rows = [["tables", str(len(tables))],
                    ["flagged", str(total_flagged)],
                    ["overall", "FAIL" if any_failed else "PASS"]]
    tables.append(Table("summary", ["what", "value"], summary_rows))
    spec.emit(tables)
    return 2 if any_failed else 0


# ---------------------------------------------------------------------------
# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_output_options(sub):
    sub.add_argument("--format", choices=("text", "json", "csv"),
                     default="text")
    sub.add_argument("--digits", type=int, default=None,
                     help=f"float precision in significant digits "
                          f"(default {DEFAULT_FLOAT_DIGITS}, or "
                          f"{ENV_FLOAT_DIGITS})")
    sub.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidinv",
                     description="exact computations for the inverse problem "
                                 "of the two-strand braid integral")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("lift", parents=[], help="lift coefficients")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=("strengthen", "reversion"),
                   default="strengthen")
    _add_output_options(p)
    p.set_defaults(func=cmd_lift)

    p = subs.add_parser("zmap", help="series and graded values of a braid sum")
    p.add_argument("--braid", default="tau")
    p.add_argument("--order", type=int, default=7)
    p.add_argument("--jmax", type=int, default=None)
    _add_output_options(p)
    p.set_defaults(func=cmd_zmap)

    p = subs.add_parser("qexpand", help="pair expansion of a lift")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    _add_output_options(p)
    p.set_defaults(func=cmd_qexpand)

    p = subs.add_parser("asymptotics", help="pair coefficients against 4/pi limits")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--orders", required=True,
                   help="comma separated lift orders")
    _add_output_options(p)
    p.set_defaults(func=cmd_asymptotics)

    p = subs.add_parser("beta", help="regularized sums and the Leibniz check")
    p.add_argument("--s", type=int, required=True)
    _add_output_options(p)
    p.set_defaults(func=cmd_beta)

    p = subs.add_parser("basis", help="moment matrices and inverse entries")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--unbalanced", action="store_true")
    p.add_argument("--entry", default=None, help="ROW,COL (1-based)")
    p.add_argument("--solve-t", action="store_true", dest="solve_t")
    p.add_argument("--with-factorials", action="store_true",
                   dest="with_factorials")
    _add_output_options(p)
    p.set_defaults(func=cmd_basis)

    p = subs.add_parser("trace", help="finite-window convergence diagnostics")
    p.add_argument("--sequence", default="tauhat",
                   help="tauhat, pairs, harmonic, or a JSON file path")
    p.add_argument("--jmax", type=int, default=5)
    p.add_argument("--window", type=int, default=8)
    _add_output_options(p)
    p.set_defaults(func=cmd_trace)

    p = subs.add_parser("reproduce", help="check every bundled reference table")
    p.add_argument("--all", action="store_true",
                   help="run every table (the default)")
    p.add_argument("--table", action="append",
                   choices=sorted(REPRODUCE_TABLES),
                   help="run a specific table; may repeat")
    _add_output_options(p)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
