"""Command line interface.

Subcommands mirror the library layers: ``poly`` for the moment
polynomials (three independent methods), ``enumerate`` for adapted
noncrossing matchings, ``verify`` for the exhaustive identity sweeps,
``moments`` for free multiplicative convolution moments, ``mc`` for the
random-matrix Monte Carlo study, and ``diagram`` for SVG arch pictures.

Results go to stdout, diagnostics to stderr.  Exit code 0 means
success, 1 means a verification found mismatches, 2 means a usage or
budget error.  The environment variable ``FN_BUDGET`` overrides the
default enumeration budget (a cap on the word length 2*p*k).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import exact, freeprob, partitions, rmt
from .diagrams import write_partition_svg
from .poly import MultiPoly
from .series import solve_functional_equation


def _budget() -> int:
    raw = os.environ.get("FN_BUDGET")
    if raw is None:
        return partitions.DEFAULT_BUDGET
    try:
        value = int(raw)
        if value < 0:
            raise ValueError
    except ValueError:
        raise ValueError(f"FN_BUDGET must be a nonnegative integer, got {raw!r}")
    return value


def _fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in text.split(",") if x.strip() != ""]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as comma-separated rationals")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as comma-separated numbers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fussnarayana",
        description="Exact moment polynomials of Gaussian matrix products, "
        "their noncrossing enumeration, and Monte Carlo checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="print a moment polynomial as JSON")
    poly.add_argument("-p", type=int, required=True, help="number of matrix factors")
    poly.add_argument("-k", type=int, required=True, help="moment order")
    group = poly.add_mutually_exclusive_group()
    group.add_argument("--closed", action="store_true", help="closed form (default)")
    group.add_argument("--enumerate", action="store_true", dest="enumerate_",
                       help="brute-force noncrossing enumeration")
    group.add_argument("--series", action="store_true", help="functional-equation series")
    group.add_argument("--all-methods", action="store_true",
                       help="all three methods plus an agreement flag")
    poly.add_argument("--vars", choices=("d", "t"), default="d",
                      help="d: ratios d0..dp; t: shapes t1..tp (d0 = 1)")
    poly.set_defaults(func=cmd_poly)

    enum = sub.add_parser("enumerate", help="list or count adapted noncrossing matchings")
    enum.add_argument("-p", type=int, required=True)
    enum.add_argument("-k", type=int, required=True)
    enum.add_argument("--shift", type=int, default=0, help="cyclic shift of the base word")
    mode = enum.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the count (default)")
    mode.add_argument("--list", action="store_true", dest="list_", help="one matching per line")
    mode.add_argument("--profiles", action="store_true", help="leg-profile histogram as JSON")
    enum.set_defaults(func=cmd_enumerate)

    verify = sub.add_parser("verify", help="run an exhaustive verification sweep")
    verify.add_argument("--suite", choices=("lemmas", "oracle", "freeprob"), required=True)
    verify.add_argument("-p", type=int, default=None, help="restrict to one factor count")
    verify.add_argument("--k-max", type=int, default=None, help="largest order to sweep")
    verify.add_argument("--pk-budget", type=int, default=None,
                        help="oracle suite: sweep every p <= 3 with 2*p*k up to this cap")
    verify.set_defaults(func=cmd_verify)

    moments = sub.add_parser("moments", help="free convolution moments as CSV")
    moments.add_argument("-t", type=_fraction_list, required=True, metavar="T1,T2,...",
                         help="shape parameters, exact rationals like 1,1/2")
    moments.add_argument("-K", type=int, required=True, help="largest moment order")
    mmode = moments.add_mutually_exclusive_group()
    mmode.add_argument("--exact", action="store_true",
                       help="closed-form rational moments (default)")
    mmode.add_argument("--quadrature", action="store_true",
                       help="also integrate the density numerically (one shape only)")
    moments.set_defaults(func=cmd_moments)

    mc = sub.add_parser("mc", help="Monte Carlo moments of a Gaussian product")
    mc.add_argument("-d", type=_float_list, required=True, metavar="D0,D1,...",
                    help="target dimension ratios")
    mc.add_argument("-n", type=int, required=True, help="scale parameter")
    mc.add_argument("-K", type=int, required=True, help="largest moment order")
    mc.add_argument("--trials", type=int, default=200)
    mc.add_argument("--seed", type=int, default=0)
    mc.add_argument("--ensemble", choices=rmt._ENSEMBLES, default="complex")
    mc.add_argument("--workers", type=int, default=1)
    mc.add_argument("--format", choices=("json", "csv"), default="json")
    mc.set_defaults(func=cmd_mc)

    diagram = sub.add_parser("diagram", help="write one matching as an SVG arch diagram")
    diagram.add_argument("-p", type=int, required=True)
    diagram.add_argument("-k", type=int, required=True)
    diagram.add_argument("--shift", type=int, default=0)
    diagram.add_argument("--index", type=int, required=True,
                         help="position in the canonical enumeration order")
    diagram.add_argument("--svg", required=True, metavar="PATH", help="output file")
    diagram.set_defaults(func=cmd_diagram)

    return parser


def _poly_by_method(method: str, p: int, k: int, budget: int) -> MultiPoly:
    if method == "closed":
        return exact.limit_moment_poly(p, k)
    if method == "enumerate":
        return partitions.enumerated_moment_poly(p, k, budget=budget)
    if k == 0:
        return MultiPoly.constant(p + 1, 1)
    return solve_functional_equation(p, k).coefficient(k).divide_by_variable(0)


def cmd_poly(args) -> int:
    if args.p < 1 or args.k < 0:
        raise ValueError("need -p >= 1 and -k >= 0")
    budget = _budget()
    selected = [name for name, on in (
        ("closed", args.closed), ("enumerate", args.enumerate_), ("series", args.series),
    ) if on]
    method = selected[0] if selected else "closed"

    def rendered(poly: MultiPoly) -> tuple[dict, MultiPoly]:
        if args.vars == "t":
            poly = poly.substitute(0, 1)
            names = [f"t{i}" for i in range(1, args.p + 1)]
        else:
            names = [f"d{i}" for i in range(args.p + 1)]
        return poly.to_json_dict(names), poly

    if args.all_methods:
        out = {}
        polys = []
        for name in ("closed", "enumerate", "series"):
            doc, poly = rendered(_poly_by_method(name, args.p, args.k, budget))
            out[name] = doc
            polys.append(poly)
        out["agree"] = polys[0] == polys[1] == polys[2]
        print(json.dumps(out, indent=2))
        return 0
    doc, _ = rendered(_poly_by_method(method, args.p, args.k, budget))
    print(json.dumps(doc, indent=2))
    return 0


def cmd_enumerate(args) -> int:
    spec = partitions.WordSpec(args.p, args.shift, args.k)
    budget = _budget()
    if args.list_:
        for pi in partitions.enumerate_adapted(spec, budget=budget):
            print(pi.to_line() if pi.size else "()")
        return 0
    if args.profiles:
        hist = partitions.profile_histogram(args.p, args.k, args.shift, budget=budget)
        print(json.dumps({
            "profiles": [
                {"profile": list(prof), "count": count}
                for prof, count in sorted(hist.items())
            ],
        }, indent=2))
        return 0
    count = sum(1 for _ in partitions.enumerate_adapted(spec, budget=budget))
    print(count)
    return 0


def cmd_verify(args) -> int:
    budget = _budget()
    reports = []
    if args.suite == "lemmas":
        pairs = [(args.p, args.k_max or 2)] if args.p else [(1, 4), (2, 2), (3, 2)]
        for p, k_max in pairs:
            reports.append(partitions.verify_shift_identity(p, k_max, budget=budget))
            reports.append(partitions.verify_product_decomposition(p, k_max, budget=budget))
    elif args.suite == "oracle":
        cap = args.pk_budget if args.pk_budget is not None else max(budget, 16)
        if args.p and args.k_max:
            pairs = [(args.p, args.k_max)]
        else:
            pairs = [(p, cap // (2 * p)) for p in (1, 2, 3) if cap // (2 * p) >= 1]
        for p, k_max in pairs:
            reports.append(_oracle_sweep(p, k_max, max(cap, budget)))
    else:
        k_max = args.k_max or 6
        reports.append(_freeprob_sweep(k_max))
    ok = all(r.ok for r in reports)
    print(json.dumps({
        "suite": args.suite,
        "ok": ok,
        "reports": [r.to_dict() for r in reports],
    }, indent=2))
    return 0 if ok else 1


def _oracle_sweep(p: int, k_max: int, budget: int):
    from .report import Report

    report = Report(name=f"three-route agreement p={p} k<={k_max}")
    for k in range(0, k_max + 1):
        closed = exact.limit_moment_poly(p, k)
        counted = partitions.enumerated_moment_poly(p, k, budget=budget)
        report.tally(closed == counted,
                     f"k={k}: closed form and enumeration disagree")
        if k >= 1:
            via_series = solve_functional_equation(p, k).coefficient(k).divide_by_variable(0)
            report.tally(closed == via_series,
                         f"k={k}: closed form and series solver disagree")
            refined, total = exact.vandermonde_decomposition(p, k)
            count = sum(1 for _ in partitions.enumerate_adapted(
                partitions.WordSpec(p, 0, k), budget=budget))
            report.tally(refined == total == count,
                         f"k={k}: counts disagree: {refined}, {total}, {count}")
    return report


def _freeprob_sweep(k_max: int):
    from .report import Report

    report = Report(name=f"free convolution k<={k_max}")
    fixtures = [
        (Fraction(1),), (Fraction(2),), (Fraction(1, 2),),
        (Fraction(1), Fraction(1)), (Fraction(2), Fraction(3)),
        (Fraction(1, 2), Fraction(3), Fraction(5, 7)),
        (Fraction(1), Fraction(1), Fraction(1), Fraction(4, 3)),
    ]
    for shapes in fixtures:
        by_series = freeprob.moments_by_series(shapes, k_max)
        by_closed = freeprob.moments_by_closed_form(shapes, k_max)
        report.tally(by_series.values == by_closed.values,
                     f"shapes {shapes}: series and closed-form moments disagree")
        inner = freeprob.s_transform_check(shapes, min(k_max, 6))
        report.checks += inner.checks
        report.mismatches += [f"shapes {shapes}: {m}" for m in inner.mismatches]
    for t in (Fraction(1, 2), Fraction(1), Fraction(2)):
        exact_values = freeprob.moments_by_closed_form((t,), min(k_max, 8))
        numeric = freeprob.quadrature_moments(t, min(k_max, 8))
        for k, estimate in enumerate(numeric, start=1):
            target = float(exact_values.moment(k))
            report.tally(abs(estimate - target) <= 1e-8 * max(1.0, abs(target)),
                         f"t={t} k={k}: quadrature {estimate!r} vs exact {target!r}")
    return report


def cmd_moments(args) -> int:
    shapes = args.t
    if args.K < 1:
        raise ValueError("need -K >= 1")
    if args.quadrature:
        if len(shapes) != 1:
            raise ValueError("--quadrature applies to a single shape parameter")
        if args.K > 8:
            raise ValueError("--quadrature supports orders up to 8")
    table = freeprob.moments_by_closed_form(shapes, args.K)
    if args.quadrature:
        numeric = freeprob.quadrature_moments(shapes[0], args.K)
        print("k,moment,estimate,abs_diff")
        for k in range(1, args.K + 1):
            target = table.moment(k)
            est = numeric[k - 1]
            diff = abs(est - float(target))
            print(f"{k},{target},{format(est, '.12g')},{format(diff, '.3e')}")
    else:
        print("k,moment")
        for k in range(1, args.K + 1):
            print(f"{k},{table.moment(k)}")
    return 0


def cmd_mc(args) -> int:
    profile = rmt.DimensionProfile.from_targets(args.d, args.n)
    config = rmt.McConfig(
        profile=profile, k_max=args.K, trials=args.trials,
        seed=args.seed, ensemble=args.ensemble,
    )
    result = rmt.run_experiment(config, workers=args.workers)
    text = result.to_json_text() if args.format == "json" else result.to_csv_text()
    sys.stdout.write(text)
    return 0


def cmd_diagram(args) -> int:
    spec = partitions.WordSpec(args.p, args.shift, args.k)
    budget = _budget()
    matchings = list(partitions.enumerate_adapted(spec, budget=budget))
    if not 0 <= args.index < len(matchings):
        raise ValueError(
            f"--index {args.index} outside 0..{len(matchings) - 1} "
            f"for p={args.p}, k={args.k}, shift={args.shift}"
        )
    word = partitions.build_word(spec)
    write_partition_svg(args.svg, matchings[args.index], word)
    print(f"wrote {args.svg}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else int(code)
    try:
        return args.func(args)
    except partitions.BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except freeprob.QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:  # console entry point
    sys.exit(main())


if __name__ == "__main__":
    run()
