"""Command-line interface.

Exit codes: 0 the property holds / values match, 1 a violation or
counterexample was found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import TPError
from .partitions import format_shape, parse_shape
from .schur import eval_skew_e, eval_skew_h, required_truncation, verify_duality
from .series import PowerSeries, format_rational, format_series, parse_series, pf_dual
from .tp_checker import (
    Verdict,
    check_theorem_a,
    falsify_theorem_a,
    tp2_fast,
    tp_level,
    tp_order,
    verify_theorem_b,
)
from .toeplitz import format_minor, minor_det, shape_to_minor

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _verdict_lines(v: Verdict) -> list[str]:
    c = v.certificate
    out = [
        f"property: {c.property}",
        f"window: {c.window}",
        f"verdict: {c.kind}",
        f"shapes_checked: {v.shapes_checked}",
    ]
    if c.violated:
        out += [
            f"shape: {format_shape(c.shape)}",
            f"minor: {format_minor(c.minor)}",
            f"value: {format_rational(c.value)}",
        ]
        if c.condition:
            out.append(f"condition: {c.condition} at index {c.index}")
    return out


def _series(args, need: int | None = None) -> PowerSeries:
    f = parse_series(args.series)
    if need is not None and getattr(args, "pad", False):
        f = f.padded(need)
    return f


def cmd_dual(args) -> int:
    # input is read as a polynomial: coefficients past its end are zero
    f = parse_series(args.series).padded(args.order)
    g = pf_dual(f, args.order)
    _emit(args, {"f": format_series(f), "order": args.order, "g": format_series(g)}, [format_series(g)])
    return EXIT_OK


def cmd_tp_check(args) -> int:
    f = _series(args, args.bound + args.window - 1)
    if args.mode == "order":
        v = tp_order(f, args.bound, args.window)
    elif args.mode == "level":
        v = tp_level(f, args.bound, args.window)
    else:
        v = tp2_fast(f, args.window)
    _emit(args, v.to_dict(), _verdict_lines(v))
    return EXIT_OK if v.holds else EXIT_VIOLATION


def cmd_schur(args) -> int:
    shape = parse_shape(args.shape)
    need = args.order if args.order is not None else required_truncation(shape)
    f = _series(args, need)
    if args.basis == "h":
        value = eval_skew_h(f, shape)
    else:
        value = eval_skew_e(f, shape, need)
    _emit(args, {"shape": format_shape(shape), "basis": args.basis, "value": format_rational(value)},
          [format_rational(value)])
    return EXIT_OK


def cmd_duality(args) -> int:
    shape = parse_shape(args.shape)
    need = args.order
    if need is None:
        need = max(required_truncation(shape), required_truncation(shape.conjugate()))
    f = _series(args, need)
    chk = verify_duality(f, shape, need)
    payload = {
        "shape": format_shape(shape),
        "conjugate": format_shape(shape.conjugate()),
        "L": format_rational(chk.lhs),
        "R": format_rational(chk.rhs),
        "equal": chk.equal,
    }
    _emit(args, payload, [f"L: {payload['L']}", f"R: {payload['R']}", f"equal: {str(chk.equal).lower()}"])
    return EXIT_OK if chk.equal else EXIT_VIOLATION


def cmd_theorem_b(args) -> int:
    f = _series(args, args.r + args.window - 1)
    rep = verify_theorem_b(f, args.r, args.window)
    lines = [
        f"r: {rep.r}",
        f"window: {rep.window}",
        f"shapes_compared: {rep.shapes_compared}",
        f"shape_equalities: {rep.shape_equalities}",
        f"verdicts_agree: {str(rep.verdicts_agree).lower()}",
        f"certificates_mirrored: {str(rep.certificates_mirrored).lower()}",
        "[f, by level]",
        *_verdict_lines(rep.level_verdict),
        "[g = 1/f(-z), by order]",
        *_verdict_lines(rep.order_verdict),
    ]
    _emit(args, rep.to_dict(), lines)
    return EXIT_OK if rep.consistent else EXIT_VIOLATION


def cmd_falsify(args) -> int:
    found = falsify_theorem_a(args.max_degree, args.coeff_bound, args.trials, args.seed,
                              window=args.window, max_order=args.max_order)
    if found is None:
        _emit(args, {"found": False, "trials": args.trials, "seed": args.seed},
              [f"no violation in {args.trials} trials (seed {args.seed}, window {args.window})"])
        return EXIT_OK
    lines = [
        f"violation found at trial {found.trial}",
        f"f: {format_series(found.f)}",
        f"g: {format_series(found.g)}",
        f"largest order passed by f: {found.r}",
        f"first order failed by g: {found.g_first_failing_order}",
        "[g certificate]",
        *_verdict_lines(found.g_verdict),
    ]
    _emit(args, {"found": True, **found.to_dict()}, lines)
    return EXIT_VIOLATION


def cmd_paper(args) -> int:
    ok = True
    lines = []

    def check(label, got, want):
        nonlocal ok
        good = got == want
        ok &= good
        lines.append(f"{'ok ' if good else 'BAD'} {label}: {got}")

    f1 = parse_series("1,4,3,1")
    check("f", format_series(f1), "1,4,3,1")
    check("f order-2 (coefficient test)", tp2_fast(f1).certificate.kind, "holds-up-to-window")
    g1 = pf_dual(f1.padded(5), 5)
    check("g = 1/f(-z)", format_series(g1), "1,4,13,41,129,406")
    b = g1.coefficients
    m = shape_to_minor(parse_shape("4,4/-"))
    lines.append(f"    {b[4]}^2 - {b[3]}*{b[5]} = {b[4] ** 2 - b[3] * b[5]}")
    check("minor " + format_minor(m), format_rational(minor_det(g1.padded(5), m)), "-5")
    v = tp_order(pf_dual(f1.padded(6), 6), 2, 5)
    check("g order-2 certificate", f"{format_shape(v.certificate.shape)} = {format_rational(v.certificate.value)}",
          "4,4/- = -5")

    f2 = parse_series("1,1,2")
    check("f", format_series(f2), "1,1,2")
    check("f order-1", tp_order(f2.padded(5), 1, 5).certificate.kind, "holds-up-to-window")
    g2 = pf_dual(f2.padded(5), 5)
    check("g = 1/f(-z)", format_series(g2), "1,1,-1,-3,-1,5")
    check("g_2", format_rational(g2.coefficients[2]), "-1")
    v = tp_order(pf_dual(f2.padded(5), 5), 1, 5)
    check("g order-1 certificate", f"{format_shape(v.certificate.shape)} = {format_rational(v.certificate.value)}",
          "2/- = -1")
    viol = check_theorem_a(f1)
    check("order-preserving claim fails for f", viol is not None, True)

    print("counterexample 1 and 2 reproduction")
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tptoeplitz", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="structured JSON output")
        return sp

    sp = add("dual", cmd_dual, "coefficients of 1/f(-z) for a polynomial f")
    sp.add_argument("series")
    sp.add_argument("--order", type=int, required=True)

    sp = add("tp-check", cmd_tp_check, "window-bounded total positivity check")
    sp.add_argument("series")
    sp.add_argument("--mode", choices=["order", "level", "tp2-fast"], default="order")
    sp.add_argument("--bound", type=int, default=2, help="order r or level l")
    sp.add_argument("--window", type=int, required=True)
    sp.add_argument("--pad", action="store_true", help="zero-pad a polynomial to the needed order")

    sp = add("schur", cmd_schur, "evaluate a skew Jacobi-Trudi determinant")
    sp.add_argument("series")
    sp.add_argument("shape", help='e.g. "3,2/1" or "4,4/-"')
    sp.add_argument("--basis", choices=["h", "e"], default="h")
    sp.add_argument("--order", type=int, default=None)
    sp.add_argument("--pad", action="store_true")

    sp = add("duality", cmd_duality, "compare a shape on f with its conjugate on 1/f(-z)")
    sp.add_argument("series")
    sp.add_argument("shape")
    sp.add_argument("--order", type=int, default=None)
    sp.add_argument("--pad", action="store_true")

    sp = add("theorem-b", cmd_theorem_b, "level-r positivity of f vs order-r positivity of 1/f(-z)")
    sp.add_argument("series")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--window", type=int, required=True)
    sp.add_argument("--pad", action="store_true")

    sp = add("falsify", cmd_falsify, "random search for order-r positivity not preserved by f -> 1/f(-z)")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--coeff-bound", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--window", type=int, default=6)
    sp.add_argument("--max-order", type=int, default=4)

    add("paper", cmd_paper, "reproduce the two published counterexamples")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
