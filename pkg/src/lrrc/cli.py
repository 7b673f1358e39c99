"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 invalid mathematical input,
3 theorem violation.
"""

import argparse
import json
import sys

from . import partitions as pt
from . import rectangles as rs
from .bijection import phi_bar, phi_bar_inv, phi_tilde, phi_tilde_inv
from .kostka import kostka_charge, kostka_qp, kostka_rc
from .lrsets import MembershipError, enumerate_clr
from .rigged import RiggedConfiguration, enumerate_configs, enumerate_rcs, is_admissible, theta
from .tableaux import Tableau
from .verify import THEOREMS, run_verification

USAGE_ERROR, MATH_ERROR, VIOLATION = 1, 2, 3


class InputError(Exception):
    pass


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise InputError(f"cannot parse partition {text!r}: {e}") from None
    if not pt.is_partition(parts):
        raise InputError(f"{text!r} is not a weakly decreasing positive sequence")
    return parts


def parse_rects(text: str) -> tuple:
    try:
        return rs.parse(text)
    except ValueError as e:
        raise InputError(f"cannot parse rectangles {text!r}: {e}") from None


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from None


def cmd_enumerate(args) -> int:
    lam = parse_partition(args.lam)
    rects = parse_rects(args.rects)
    if args.kind == "clr":
        items = enumerate_clr(lam, rects)
        as_json = [t.to_json() for t in items]
        texts = [t.render() for t in items]
    elif args.kind == "rc":
        items = enumerate_rcs(lam, rects)
        as_json = [rc.to_json() for rc in items]
        texts = [rc.render() for rc in items]
    else:
        items = enumerate_configs(lam, rects)
        as_json = [[list(p) for p in config] for config in items]
        texts = [json.dumps(c) for c in as_json]
    if args.count:
        print(len(items))
        return 0
    if args.json:
        print(json.dumps(as_json))
        return 0
    print("\n\n".join(texts))
    return 0


def cmd_kostka(args) -> int:
    lam = parse_partition(args.lam)
    rects = parse_rects(args.rects)
    methods = ("qp", "rc", "charge") if args.method == "all" else (args.method,)
    compute = {"qp": kostka_qp, "rc": kostka_rc, "charge": kostka_charge}
    polys = {m: compute[m](lam, rects) for m in methods}
    if args.json:
        out = {m: p.to_json() for m, p in polys.items()}
        if args.eval is not None:
            out = {m: p.evaluate(args.eval) for m, p in polys.items()}
        print(json.dumps(out))
    else:
        for m in methods:
            value = polys[m].evaluate(args.eval) if args.eval is not None else polys[m]
            prefix = f"{m}: " if args.method == "all" else ""
            print(f"{prefix}{value}")
    if args.method == "all" and len(set(polys.values())) != 1:
        print("error: the three computations disagree", file=sys.stderr)
        return VIOLATION
    return 0


def cmd_bijection(args) -> int:
    data = _load_json(args.input)
    try:
        lam = tuple(data["lambda"])
        rects = rs.check_rects(tuple((w, h) for w, h in data["rects"]))
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad input file: {e}") from None
    if args.direction == "forward":
        if "rows" not in data:
            raise InputError('forward input needs a "rows" field')
        t = Tableau(data["rows"])
        try:
            if args.trace:
                rc, trace = phi_bar(t, lam, rects, with_trace=True)
                if args.coquantum:
                    rc = theta(rc)
            else:
                trace = None
                rc = (phi_tilde if args.coquantum else phi_bar)(t, lam, rects)
        except MembershipError as e:
            print(f"error: {e}", file=sys.stderr)
            return MATH_ERROR
        if args.json:
            out = {"rc": rc.to_json()}
            if trace is not None:
                out["trace"] = trace.to_json()
            print(json.dumps(out))
        else:
            if trace is not None:
                print(trace.render())
            print(rc.render())
        return 0
    # backward
    if "nu" not in data:
        raise InputError('backward input needs a "nu" field')
    rc = RiggedConfiguration.from_json(data)
    if not is_admissible(rc):
        print("error: rigged configuration is not admissible", file=sys.stderr)
        return MATH_ERROR
    t = (phi_tilde_inv if args.coquantum else phi_bar_inv)(rc)
    if args.json:
        print(json.dumps({"tableau": t.to_json()}))
    else:
        print(t.render())
    return 0


def cmd_verify(args) -> int:
    reports = run_verification(
        args.theorem, max_size=args.max_size, max_rects=args.max_rects,
        max_dim=args.max_dim,
    )
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures:
                print(f"  counterexample: {json.dumps(f)}")
    return 0 if all(r.passed for r in reports) else VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lrrc",
        description="LR tableaux, rigged configurations, their bijection, "
        "and generalized Kostka polynomials",
    )
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list LR tableaux or rigged configurations")
    e.add_argument("kind", choices=["clr", "rc", "configs"])
    e.add_argument("--lambda", dest="lam", required=True,
                   help='shape, e.g. "5,4,3,2,2,1"')
    e.add_argument("--rects", required=True, help='rectangles, e.g. "3x2,2x4,1x3"')
    e.add_argument("--count", action="store_true", help="print the cardinality only")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("bijection", help="apply the bijection forward or backward")
    b.add_argument("direction", choices=["forward", "backward"])
    b.add_argument("input", help="JSON input file, or - for stdin")
    b.add_argument("--trace", action="store_true", help="emit the step log")
    b.add_argument("--coquantum", action="store_true",
                   help="use the label-complemented variant")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bijection)

    k = sub.add_parser("kostka", help="compute the generalized Kostka polynomial")
    k.add_argument("--lambda", dest="lam", required=True)
    k.add_argument("--rects", required=True)
    k.add_argument("--method", choices=["qp", "rc", "charge", "all"], default="all")
    k.add_argument("--eval", type=int, default=None,
                   help="evaluate at an integer instead of printing the polynomial")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_kostka)

    v = sub.add_parser("verify", help="run exhaustive theorem verification sweeps")
    v.add_argument("--theorem", choices=list(THEOREMS) + ["all"], default="all")
    v.add_argument("--max-size", type=int, default=7)
    v.add_argument("--max-rects", type=int, default=3)
    v.add_argument("--max-dim", type=int, default=3)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else USAGE_ERROR
    if getattr(args, "max_size", 1) < 1 or getattr(args, "max_rects", 1) < 1 or getattr(args, "max_dim", 1) < 1:
        print("error: bounds must be at least 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return MATH_ERROR
    except MembershipError as e:
        print(f"error: {e}", file=sys.stderr)
        return MATH_ERROR


if __name__ == "__main__":
    sys.exit(main())
