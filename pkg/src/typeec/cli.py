"""Command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ParseError
from .geomalg import (
    PairDescriptor,
    classify,
    hilbert_dims,
    is_regular_pair,
    relations_from_pair,
    type_tag,
)
from .hesse import HesseCurve
from .parse import parse_point, parse_scalar
from .tensor import LinMap, is_superpotential, ms_twist, sklyanin, tsp_witness


class InputError(Exception):
    pass


def _curve(text):
    try:
        return HesseCurve(parse_scalar(text))
    except ParseError as exc:
        raise InputError(f"lambda: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _point(c, text):
    try:
        p = c.lift(parse_point(text, c.tower))
    except ParseError as exc:
        raise InputError(f"point: {exc}") from None
    if not c.contains(p):
        raise InputError(f"{p} is not on the curve")
    return p


def _exponent(c, i):
    if not 0 <= i < c.auto.order:
        raise InputError(f"exponent must lie in 0..{c.auto.order - 1} for {c.auto.kind}")
    return i


def _matrix_json(m):
    return [[str(m[a, b]) for b in range(3)] for a in range(3)]


def cmd_curve(args):
    c = _curve(args.lam)
    return {
        "lambda": str(c.lam),
        "j_invariant": str(c.j_invariant()),
        "class": c.special,
        "automorphism": c.auto.kind,
        "order": c.auto.order,
        "tower": list(c.tower.names),
    }, 0


def cmd_torsion(args):
    c = _curve(args.lam)
    if args.n not in (2, 3, 6):
        raise InputError("--n must be 2, 3 or 6")
    pts = c.torsion(args.n)
    return {"lambda": str(c.lam), "n": args.n, "count": len(pts), "points": pts.to_json()}, 0


def cmd_loci(args):
    c = _curve(args.lam)
    t = c.auto
    i = _exponent(c, args.i)
    return {
        "lambda": str(c.lam),
        "automorphism": t.kind,
        "i": i,
        "E_tau^i": c.fixed_locus(t, i).to_json(),
        "U_tau^i": c.u_lower(t, i).to_json(),
        "U^tau^i": c.u_upper(t, i).to_json(),
    }, 0


def cmd_pair(args):
    c = _curve(args.lam)
    d = PairDescriptor(c, _point(c, args.p), _exponent(c, args.i))
    regular = is_regular_pair(d)
    rel = relations_from_pair(d)
    return {
        "lambda": str(c.lam),
        "p": d.p.to_json(),
        "i": d.i,
        "type": type_tag(c.auto.kind, d.i) if regular else None,
        "regular": regular,
        "relations": rel.to_json(),
        "hilbert": hilbert_dims(rel, 4) if rel.dim else None,
    }, 0


def cmd_potential(args):
    c = _curve(args.lam)
    p = _point(c, args.p)
    i = _exponent(c, args.i)
    w = ms_twist(sklyanin(p), LinMap.of(c.auto, i))
    try:
        Q = tsp_witness(w)
    except ValueError:
        Q = None
    return {
        "lambda": str(c.lam),
        "p": p.to_json(),
        "i": i,
        "potential": w.to_pairs(),
        "witness": _matrix_json(Q) if Q is not None else None,
        "superpotential": is_superpotential(w),
    }, 0


def cmd_classify(args):
    c = _curve(args.lam)
    try:
        return classify(c), 0
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_verify(args):
    from .verify import run_all

    report = run_all()
    return report, 0 if report.ok(strict=args.strict) else 1


def _print_text(out):
    if hasattr(out, "text"):
        print(out.text())
        return
    for k, v in out.items():
        if k in ("points", "types", "relations", "witness") or k.startswith(("E_", "U")):
            if not isinstance(v, list):
                print(f"{k}: {v}")
                continue
            print(f"{k}:")
            for item in v:
                print(f"  {_flat(item, k)}")
        else:
            print(f"{k}: {_flat(v, k)}")


def _term(w, c):
    if c == "1":
        return w
    if c == "-1":
        return "-" + w
    return f"({c})*{w}" if " " in c else f"{c}*{w}"


def _flat(v, key=""):
    if isinstance(v, dict):
        return ", ".join(f"{k}={_flat(x, k)}" for k, x in v.items() if x is not None)
    if isinstance(v, list):
        if key in ("tower", "hilbert", "witness"):
            return "[" + ", ".join(str(x) for x in v) + "]"
        if key in ("potential", "relations") and all(isinstance(x, list) and len(x) == 2 for x in v):
            return " + ".join(_term(w, c) for w, c in v).replace("+ -", "- ") or "0"
        if len(v) == 3 and all(isinstance(x, str) for x in v):
            return "(" + " : ".join(v) + ")"
        return "[" + "; ".join(_flat(x, key) for x in v) + "]"
    return str(v)


def build_parser():
    ap = argparse.ArgumentParser(prog="typeec", description="Hesse curves, geometric pairs and twisted superpotentials.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_lambda(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--lambda", dest="lam", required=True, help="Hesse parameter, e.g. 0, 1+sqrt3, 5/3")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    with_lambda("curve", "j-invariant and automorphism class").set_defaults(fn=cmd_curve)
    sp = with_lambda("torsion", "list E[n]")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(fn=cmd_torsion)
    sp = with_lambda("loci", "E_tau^i, U_tau^i, U^tau^i")
    sp.add_argument("--i", type=int, required=True)
    sp.set_defaults(fn=cmd_loci)
    for name, fn, help_ in (("pair", cmd_pair, "regularity, relations, Hilbert dims"),
                            ("potential", cmd_potential, "twisted Sklyanin potential and witness")):
        sp = with_lambda(name, help_)
        sp.add_argument("--p", required=True, help="point a:b:c")
        sp.add_argument("--i", type=int, required=True)
        sp.set_defaults(fn=fn)
    with_lambda("classify", "isomorphism classes of regular pairs").set_defaults(fn=cmd_classify)
    sp = sub.add_parser("verify-tables", help="run the full verification suite")
    sp.add_argument("--strict", action="store_true", help="count errata as failures")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out, code = args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(out.to_json() if hasattr(out, "to_json") else out, indent=2))
    else:
        _print_text(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
