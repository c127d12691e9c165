"""One-shot reproduction of every quantitative claim, as a pass/fail table."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from sympy import primerange

from .groups import GroupFamily, build_group, jordan_constant
from .quadfield import INFINITY, QuadraticField, RationalPlace, infinite_places, is_squarefree
from .quatalg import (
    QuaternionClass,
    base_change,
    congruence_prediction,
    d_p_infty,
    dp_inf_sqrt_p_prediction,
    is_division,
    jordan_over_Q,
    jordan_over_quadratic,
)
from .quatarith import cross_validate
from .weil import analyze_poly


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def check_group_values() -> Check:
    bad = []
    for n in range(2, 7):
        v = jordan_constant(build_group(GroupFamily.dicyclic(n))).value
        if v != 2:
            bad.append(f"Dic{4 * n}={v}")
    for fam, want in (("2T", 12), ("2O", 24), ("2I", 60)):
        v = jordan_constant(build_group(GroupFamily(fam))).value
        if v != want:
            bad.append(f"{fam}={v}")
    for n in range(1, 25):
        v = jordan_constant(build_group(GroupFamily.cyclic(n))).value
        if v != 1:
            bad.append(f"C{n}={v}")
    return Check("brute-force group values (Dic, 2T, 2O, 2I, C_n)", not bad, ", ".join(bad) or "all exact")


def check_rational_cascade() -> Check:
    places = [RationalPlace(p) for p in (2, 3, 5, 7, 11, 13)] + [INFINITY]
    bad = []
    pairs = list(combinations(places, 2))
    for pair in pairs:
        ram = frozenset(pair)
        want = 12 if ram == {RationalPlace(2), INFINITY} else 2 if ram == {RationalPlace(3), INFINITY} else 1
        got = jordan_over_Q(QuaternionClass(None, ram)).value
        if got != want:
            bad.append(f"{{{','.join(map(str, pair))}}}={got}")
    return Check(f"rational cascade over {len(pairs)} ramification pairs", not bad and len(pairs) == 21,
                 ", ".join(bad) or "12 only at {2,inf}, 2 only at {3,inf}")


def check_sqrt_p(limit: int = 1000) -> Check:
    bad = []
    primes = list(primerange(2, limit))
    for p in primes:
        a = dp_inf_sqrt_p_prediction(p).value
        b = analyze_poly((-p, 0, 1), p, 1).jordan.value
        c = jordan_over_quadratic(base_change(d_p_infty(p), QuadraticField(p))).value
        if not a == b == c:
            bad.append(f"p={p}:{a}/{b}/{c}")
    return Check(f"D_(p,inf) over Q(sqrt p), three routes, p < {limit}", not bad,
                 ", ".join(bad) or f"{len(primes)} primes agree")


def check_surface_examples() -> Check:
    bad = []
    for p, want in ((73, 1), (17, 2), (3, 12), (2, 24), (5, 60)):
        d = analyze_poly((-p, 0, 1), p, 1)
        ok = (
            d.jordan.value == want
            and d.center == QuadraticField(p)
            and (d.d, d.e, d.g) == (2, 2, 2)
            and d.ram == infinite_places(QuadraticField(p))
        )
        if not ok:
            bad.append(f"t^2-{p}: J={d.jordan.value}")
    return Check("surfaces from t^2 - p for J = 1, 2, 12, 24, 60", not bad, ", ".join(bad) or "all exact")


def check_congruences(bound: int = 500) -> Check:
    bad = []
    count = 0
    for n in range(2, bound + 1):
        if not is_squarefree(n):
            continue
        for m in (n, -n):
            K = QuadraticField(m)
            for fam, p in (("D2", 2), ("D3", 3)):
                count += 1
                pred = congruence_prediction(fam, K)
                D = base_change(d_p_infty(p), K)
                if pred == "split":
                    ok = not is_division(D)
                else:
                    ok = is_division(D) and jordan_over_quadratic(D).value == pred.value
                if not ok:
                    bad.append(f"{fam},m={m}")
    return Check(f"congruence text vs cascade, squarefree 2 <= |d| <= {bound}", not bad,
                 ", ".join(bad[:10]) or f"{count} cases agree")


def check_cross_validation() -> Check:
    bad = []
    for fam in (GroupFamily.quaternion8(), GroupFamily.dicyclic(3), GroupFamily("2T"),
                GroupFamily("2O"), GroupFamily("2I")):
        r = cross_validate(fam)
        if not r.agree:
            bad.append(f"{r.family}: {r.group_jordan} vs {r.ambient_jordan}")
    return Check("realised groups vs ambient algebras", not bad, ", ".join(bad) or "Q8 bounded; others equal")


SUITES = {
    "paper": (
        check_group_values,
        check_rational_cascade,
        check_sqrt_p,
        check_surface_examples,
        check_congruences,
        check_cross_validation,
    ),
}


def run_suite(name: str = "paper") -> list:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return [fn() for fn in SUITES[name]]
