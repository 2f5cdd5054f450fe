"""Command-line front end.

Exit status: 0 on success/verified, 1 on mathematical mismatch, 2 on usage
errors.  Output is deterministic: identical invocations produce identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import build_preset, verify_cartan
from .genexpr import build_t1, build_t2, build_t5_e6
from .poisson import (decompose, extract_t2_e6, symbol, verify_all,
                      verify_closure)

SCHEMA = 1


class _UsageError(Exception):
    pass


def _add_common(p):
    p.add_argument("--algebra", required=True, choices=["dn", "e6", "g2"])
    p.add_argument("--n", type=int, default=None,
                   help="rank parameter, required for --algebra dn")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    p.add_argument("--out", default=None, help="write the report to a file")


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="wqalg",
        description="Exact bracket and matrix verification for the dn/e6/g2 presets")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, doc in [
        ("matrices", "print the preset matrices M, D and the deformed Cartan matrix"),
        ("verify-cartan", "check D M^-1 D against the deformed Cartan matrix"),
        ("lambda", "print the fundamental-series monomial table"),
        ("bracket", "decompose the bracket symbol of one monomial pair"),
        ("closure", "bracket T1 with itself and verify every delta coefficient"),
        ("dual", "check the dual transform identity on T1"),
        ("emit-t2", "print the second series (derived from the closure for e6)"),
        ("verify-all", "run the full verification suite"),
    ]:
        p = sub.add_parser(name, help=doc)
        _add_common(p)
        if name == "bracket":
            p.add_argument("--i", type=int, required=True)
            p.add_argument("--j", type=int, required=True)
    return ap


def _get_preset(args):
    if args.algebra == "dn" and args.n is None:
        raise _UsageError("--algebra dn requires --n")
    if args.algebra != "dn" and args.n is not None:
        raise _UsageError("--n is only valid with --algebra dn")
    try:
        return build_preset(args.algebra, args.n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _mono_latex(mono):
    if mono.is_identity:
        return "1"
    parts = []
    for (i, a), e in mono.items():
        arg = "z" if a == 0 else ("zq" if a == 1 else "zq^{%d}" % a)
        exp = "" if e == 1 else "^{%d}" % e
        parts.append("Y_{%d}%s(%s)" % (i, exp, arg))
    return "".join(parts)


def _emit(args, text_lines, json_obj, latex_lines=None):
    if args.format == "json":
        payload = {"schema": SCHEMA}
        payload.update(json_obj)
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "latex":
        body = "\n".join(latex_lines if latex_lines is not None else text_lines) + "\n"
    else:
        body = "\n".join(text_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _cmd_matrices(args):
    preset = _get_preset(args)
    names = [("M", preset.M), ("D", preset.D), ("Mtilde", preset.expected_mtilde)]
    _emit(args,
          sum((["%s(t):" % k, str(m), ""] for k, m in names), []),
          {"algebra": preset.name, **{k: m.to_json() for k, m in names}},
          sum((["%s(t) =" % k, m.to_latex(), ""] for k, m in names), []))
    return 0


def _cmd_verify_cartan(args):
    preset = _get_preset(args)
    outcome = verify_cartan(preset)
    lines = ["verify-cartan %s: %s" % (preset.name, "PASS" if outcome.passed else "FAIL")]
    lines += outcome.details
    if outcome.failure:
        lines.append("mismatch: " + outcome.failure)
    _emit(args, lines, {"algebra": preset.name, "passed": outcome.passed,
                        "details": outcome.details, "failure": outcome.failure})
    return 0 if outcome.passed else 1


def _cmd_lambda(args):
    preset = _get_preset(args)
    lines = ["Lambda_%d(z) = %s" % (i, m)
             for i, m in enumerate(preset.lambdas, start=1)]
    _emit(args, lines,
          {"algebra": preset.name,
           "lambdas": [m.to_json() for m in preset.lambdas]},
          ["\\Lambda_{%d}(z) = %s" % (i, _mono_latex(m))
           for i, m in enumerate(preset.lambdas, start=1)])
    return 0


def _cmd_bracket(args):
    preset = _get_preset(args)
    k = preset.fundamental_dim
    if not (1 <= args.i <= k and 1 <= args.j <= k):
        raise _UsageError("monomial indices must lie in 1..%d" % k)
    a, b = preset.lambdas[args.i - 1], preset.lambdas[args.j - 1]
    s = symbol(a, b, preset)
    dec = decompose(s, preset)
    deltas = dec.sorted_deltas()
    lines = [
        "pair (%d, %d): %s  |  %s" % (args.i, args.j, a, b),
        "symbol(t) = %s" % s,
        "base coefficient (times M_11): %s" % dec.base_coeff,
        "deltas: " + (", ".join("Delta(%+d): %s" % (sh, c) for sh, c in deltas)
                      if deltas else "none"),
    ]
    _emit(args, lines,
          {"algebra": preset.name, "i": args.i, "j": args.j,
           "symbol": s.to_json(),
           "baseCoeff": [dec.base_coeff.numerator, dec.base_coeff.denominator],
           "deltas": [{"shift": sh, "coeff": [c.numerator, c.denominator]}
                      for sh, c in deltas]})
    return 0


def _cmd_closure(args):
    preset = _get_preset(args)
    outcome = verify_closure(preset)
    lines = ["closure %s: %s" % (preset.name, "PASS" if outcome.passed else "FAIL")]
    lines += outcome.details
    if outcome.failure:
        lines.append("mismatch: " + outcome.failure)
    if outcome.report is not None:
        lines += ["", outcome.report.to_text()]
    _emit(args, lines,
          {"algebra": preset.name, "passed": outcome.passed,
           "details": outcome.details, "failure": outcome.failure,
           "report": outcome.report.to_json() if outcome.report else None},
          [outcome.report.to_latex()] if outcome.report is not None else lines)
    return 0 if outcome.passed else 1


def _cmd_dual(args):
    preset = _get_preset(args)
    if preset.kind == "dn":
        raise _UsageError("the dual transform identity applies to e6 and g2 only")
    t1 = build_t1(preset)
    target = build_t5_e6(preset) if preset.kind == "e6" else t1
    ok = t1.dual() == target.shift_arg(12)
    label = "T5" if preset.kind == "e6" else "T1"
    lines = ["dual %s: %s" % (preset.name, "PASS" if ok else "FAIL"),
             "dual_transform(T1) = %s(zq^12): %s" % (label, ok)]
    _emit(args, lines, {"algebra": preset.name, "passed": ok,
                        "identity": "dual_transform(T1) = %s(zq^12)" % label,
                        "t1Dual": t1.dual().to_json()})
    return 0 if ok else 1


def _cmd_emit_t2(args):
    preset = _get_preset(args)
    if preset.kind == "e6":
        outcome = verify_closure(preset)
        if not outcome.passed:
            lines = ["emit-t2 e6: FAIL", "mismatch: %s" % outcome.failure]
            _emit(args, lines, {"algebra": preset.name, "passed": False,
                                "failure": outcome.failure})
            return 1
        derived = extract_t2_e6(outcome.report)
        counts = {str(k): v for k, v in sorted(derived.coefficient_counts.items())}
        lines = ["derived T2 for e6 (delta shift %+d): %d distinct terms, "
                 "coefficient counts %s" % (derived.shift, derived.term_count, counts),
                 str(derived.series)]
        _emit(args, lines,
              {"algebra": preset.name, "shift": derived.shift,
               "termCount": derived.term_count, "coefficientCounts": counts,
               "series": derived.series.to_json()})
        return 0
    t2 = build_t2(preset)
    lines = ["T2 for %s: %d distinct terms" % (preset.name, len(t2)), str(t2)]
    _emit(args, lines, {"algebra": preset.name, "termCount": len(t2),
                        "series": t2.to_json()})
    return 0


def _cmd_verify_all(args):
    preset = _get_preset(args)
    outcome = verify_all(preset)
    lines = ["verify-all %s: %s" % (preset.name, "PASS" if outcome.passed else "FAIL")]
    lines += outcome.details
    if outcome.failure:
        lines.append("first failure: " + outcome.failure)
    _emit(args, lines, {"algebra": preset.name, "passed": outcome.passed,
                        "details": outcome.details, "failure": outcome.failure})
    return 0 if outcome.passed else 1


_COMMANDS = {
    "matrices": _cmd_matrices,
    "verify-cartan": _cmd_verify_cartan,
    "lambda": _cmd_lambda,
    "bracket": _cmd_bracket,
    "closure": _cmd_closure,
    "dual": _cmd_dual,
    "emit-t2": _cmd_emit_t2,
    "verify-all": _cmd_verify_all,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
