"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .groups import FiniteGroup, GroupError, GroupFamily, build_group, identify_family, jordan_constant, subgroups
from .quadfield import FieldError, QuadraticField
from .quatalg import (
    AlgebraError,
    EndoType,
    QuaternionClass,
    base_change,
    closed_field_surface_jordan,
    congruence_prediction,
    cyclic_profile,
    d_p_infty,
    jordan,
    parse_base,
    parse_ram,
)
from .quatarith import QuaternionArithmeticError, cross_validate, generate_group, standard_embedding
from .validate import run_suite
from .weil import WeilError, analyze_poly, scan_weil, survey_sqrt_p

DOMAIN_ERRORS = (GroupError, FieldError, AlgebraError, QuaternionArithmeticError, WeilError, OSError,
                 json.JSONDecodeError)


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------- group


def _load_group(args) -> tuple:
    if args.table:
        with open(args.table) as fh:
            G = FiniteGroup.from_json(json.load(fh))
        return G, str(identify_family(G) or "unknown")
    if not args.family:
        raise GroupError("give --family or --table")
    fam = GroupFamily.parse(args.family, args.n)
    return build_group(fam), str(fam)


def cmd_group(args) -> int:
    G, name = _load_group(args)
    if args.action == "export":
        print(G.dumps())
        return 0
    if args.action == "subgroups":
        subs = subgroups(G)
        orders = sorted(len(H) for H in subs)
        _emit({"group": name, "order": G.order, "count": len(subs), "orders": orders}, args.json,
              f"{name}: {len(subs)} subgroups, orders {orders}")
        return 0
    if args.action == "identify":
        fam = identify_family(G)
        _emit({"order": G.order, "family": str(fam) if fam else "unknown"}, args.json,
              f"order {G.order}: {fam or 'unknown'}")
        return 0
    jc = jordan_constant(G)
    obj = {
        "group": name,
        "order": G.order,
        "jordan": jc.value,
        "witness": {"subgroup": sorted(jc.subgroup), "normal_abelian": sorted(jc.normal_abelian)},
    }
    _emit(obj, args.json,
          f"{name}: order {G.order}, Jordan constant {jc.value} "
          f"(H of order {len(jc.subgroup)}, normal abelian A of order {len(jc.normal_abelian)})")
    return 0


# ---------------------------------------------------------------- quat


def cmd_quat(args) -> int:
    if args.action == "jordan":
        base = parse_base(args.base)
        D = QuaternionClass(base, parse_ram(args.ram, base))
        ans = jordan(D)
        _emit({"algebra": D.to_json(), "jordan": ans.to_json()}, args.json, f"{D}: J = {ans.value} [{ans.reason}]")
    elif args.action == "basechange":
        K = QuadraticField(args.d)
        D = base_change(d_p_infty(args.p), K)
        obj = {"algebra": D.to_json(), "division": D.is_division}
        text = f"D_({args.p},inf) (x) {K} = {D}"
        if D.is_division:
            ans = jordan(D)
            obj["jordan"] = ans.to_json()
            text += f": J = {ans.value}"
        else:
            text += ": split"
        _emit(obj, args.json, text)
    elif args.action == "realize":
        fam = GroupFamily.parse(args.family, args.n)
        spec = standard_embedding(fam)
        G = generate_group(spec.generators, cap=10_000)
        report = cross_validate(fam)
        obj = {"embedding": spec.to_json(), "closure_order": G.order, "cross_validation": report.to_json()}
        text = "\n".join(
            [f"{fam} in ({spec.alpha},{spec.beta}) over {'Q' if spec.base is None else spec.base}"]
            + [f"  generator: {g}" for g in spec.generators]
            + [f"  closure order {G.order}; group J {report.group_jordan}; ambient {report.ambient} "
               f"J {report.ambient_jordan}; {report.relation}: {'ok' if report.agree else 'FAIL'}"]
        )
        _emit(obj, args.json, text)
    elif args.action == "predict":
        K = QuadraticField(args.d)
        pred = congruence_prediction(args.family, K)
        value = pred if isinstance(pred, str) else pred.value
        _emit({"family": args.family.upper(), "field": K.to_json(), "prediction": value}, args.json,
              f"{args.family.upper()} (x) {K}: {value}")
    elif args.action == "profile":
        prof = cyclic_profile(args.p)
        _emit({"p": args.p, "C4": prof.c4, "C6": prof.c6}, args.json,
              f"D_({args.p},inf): C4 {'yes' if prof.c4 else 'no'}, C6 {'yes' if prof.c6 else 'no'}")
    elif args.action == "closed":
        et = EndoType(args.endotype)
        ram = parse_ram(args.ram, None) if args.ram else None
        ans = closed_field_surface_jordan(et, ram)
        _emit({"endotype": et.value, "jordan": ans.to_json()}, args.json, f"{et.value}: J = {ans.value}")
    return 0


# ---------------------------------------------------------------- weil, survey, validate


def cmd_weil(args) -> int:
    if args.action == "analyze":
        if not args.poly:
            raise WeilError("--poly is required")
        desc = analyze_poly(args.poly, args.p, args.a)
        inv = ", ".join(f"{i.place}: {i.value}" for i in desc.invariants)
        center = "Q" if desc.center is None else str(desc.center)
        text = (f"{desc.weil} over F_{desc.weil.q}: center {center}; invariants {{{inv}}}; "
                f"d={desc.d} e={desc.e} g={desc.g} dim={desc.dim}; {desc.surface_class}; "
                + (f"J = {desc.jordan.value} [{desc.jordan.reason}]" if desc.jordan
                   else f"no quaternion Jordan answer (degree {desc.d} algebra)"))
        _emit(desc.to_json(), args.json, text)
        return 0
    rows = scan_weil(args.p, args.a)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(["poly", "g", "d", "e", "class", "ram", "jordan"])
            for w, d in rows:
                wr.writerow([str(w), d.g, d.d, d.e, d.surface_class, d.ram_str(), d.jordan.value if d.jordan else ""])
    if args.json:
        print(json.dumps([d.to_json() for _, d in rows], indent=2))
    else:
        for w, d in rows:
            print(f"{str(w):<14} g={d.g} d={d.d} e={d.e} {d.surface_class:<34} J={d.jordan.value if d.jordan else '-'}")
    return 0


def cmd_survey(args) -> int:
    res = survey_sqrt_p(args.max_prime, threads=args.threads)
    if args.csv:
        res.write_csv(args.csv)
    fr = res.fractions()
    obj = {
        "max_prime": res.max_prime,
        "primes": res.total,
        "histogram": {str(k): v for k, v in res.histogram.items()},
        "fractions": {str(k): float(v) for k, v in fr.items()},
    }
    lines = [f"{res.total} primes <= {res.max_prime}"]
    lines += [f"  J = {k:>2}: {v:>7}  ({float(fr[k]):.4f})" for k, v in res.histogram.items()]
    _emit(obj, args.json, "\n".join(lines))
    return 0


def cmd_validate(args) -> int:
    checks = run_suite(args.suite)
    ok = all(c.passed for c in checks)
    if args.json:
        print(json.dumps({"suite": args.suite, "passed": ok, "checks": [c.to_json() for c in checks]}, indent=2))
    else:
        width = max(len(c.name) for c in checks)
        for c in checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}  {c.detail}")
        print("all checks passed" if ok else "SOME CHECKS FAILED")
    return 0 if ok else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jordanic", description="Jordan constants of quaternion and endomorphism algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    g = sub.add_parser("group", help="finite groups by brute force")
    g.add_argument("action", choices=["jordan", "subgroups", "identify", "export"])
    g.add_argument("--family", help="cyclic, dic, q8, 2T, 2O, 2I")
    g.add_argument("--n", type=int)
    g.add_argument("--table", help="group JSON file {order, identity, table, labels}")
    add_json(g)
    g.set_defaults(func=cmd_group)

    q = sub.add_parser("quat", help="quaternion algebras by ramification set")
    q.add_argument("action", choices=["jordan", "basechange", "realize", "predict", "profile", "closed"])
    q.add_argument("--base", default="Q", help='"Q" or "d=<m>"')
    q.add_argument("--ram", help="comma list, e.g. 2,inf or p3a,p3b,inf1,inf2")
    q.add_argument("--p", type=int)
    q.add_argument("--d", type=int)
    q.add_argument("--family", help="group family (realize) or D2/D3 (predict)")
    q.add_argument("--n", type=int)
    q.add_argument("--endotype", choices=[e.value for e in EndoType])
    add_json(q)
    q.set_defaults(func=cmd_quat)

    w = sub.add_parser("weil", help="endomorphism algebras from q-Weil polynomials")
    w.add_argument("action", choices=["analyze", "scan"])
    w.add_argument("--poly", help='e.g. "t^2-73"')
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--a", type=int, default=1)
    w.add_argument("--csv", help="write scan table to this CSV path")
    add_json(w)
    w.set_defaults(func=cmd_weil)

    s = sub.add_parser("survey", help="Jordan constants for t^2 - p over all primes p <= N")
    s.add_argument("--max-prime", type=int, required=True)
    s.add_argument("--csv", help="write per-prime rows (p,jordan,class,ram)")
    s.add_argument("--threads", type=int, help="worker processes (default: JORDANIC_THREADS or 1)")
    add_json(s)
    s.set_defaults(func=cmd_survey)

    v = sub.add_parser("validate", help="run the reproduction suite")
    v.add_argument("--suite", default="paper", choices=["paper"])
    add_json(v)
    v.set_defaults(func=cmd_validate)
    return parser


_REQUIRED = {
    ("quat", "jordan"): ("ram",),
    ("quat", "basechange"): ("p", "d"),
    ("quat", "realize"): ("family",),
    ("quat", "predict"): ("family", "d"),
    ("quat", "profile"): ("p",),
    ("quat", "closed"): ("endotype",),
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    missing = [f"--{k}" for k in _REQUIRED.get((args.command, getattr(args, "action", None)), ())
               if getattr(args, k) is None]
    if missing:
        parser.print_usage(sys.stderr)
        print(f"jordanic: error: {args.command} {args.action} requires {', '.join(missing)}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"jordanic: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
