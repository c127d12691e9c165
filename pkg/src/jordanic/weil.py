"""q-Weil polynomials of degree <= 2 and the endomorphism algebras they determine.

Given the minimal polynomial h of a q-Weil number, Honda-Tate theory pins
down End^0 of the corresponding simple abelian variety over F_q: its center
is Q[t]/h, its local invariants come from the p-adic valuations of the roots,
and the degree d over the center is the lcm of their denominators.  From there
g = d*e/2 and the Jordan constant follows from the quaternion classification.
For a >= 3 the invariants can have denominator 3 or more (t^2 + 2t + 8 over F_8
gives 1/3 and 2/3); such algebras are not quaternion and get no Jordan value.
"""

from __future__ import annotations

import csv
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from sympy import Poly, Symbol, isprime, primerange
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .quadfield import INFINITY, QuadraticField, QuadraticPlace, RationalPlace, SplittingType, places_above, splitting_type
from .quatalg import JordanAnswer, QuaternionClass, dp_inf_sqrt_p_prediction, jordan_over_Q, jordan_over_quadratic

log = logging.getLogger(__name__)

Q_CAP = 10**6
ROOT_TOLERANCE = 1e-9
HALF = Fraction(1, 2)


class WeilError(ValueError):
    pass


# ---------------------------------------------------------------- polynomials

_T = Symbol("t")


def parse_poly(text: str) -> tuple:
    """Parse ``"t^2-73"`` / ``"t^2+3*t+9"`` into ascending integer coefficients."""
    try:
        expr = parse_expr(text, local_dict={"t": _T}, transformations=standard_transformations + (convert_xor,))
        poly = Poly(expr, _T)
    except Exception as exc:
        raise WeilError(f"cannot parse polynomial {text!r}: {exc}") from exc
    if poly.free_symbols - {_T}:
        raise WeilError(f"polynomial {text!r} has symbols other than t")
    coeffs = poly.all_coeffs()[::-1]
    if not all(c.is_integer for c in coeffs):
        raise WeilError(f"polynomial {text!r} must have integer coefficients")
    return tuple(int(c) for c in coeffs)


def format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(c)
        body = str(mag) if i == 0 else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    return out + "".join(f"{s}{b}" for s, b in terms[1:])


def poly_power(coeffs: Sequence[int], n: int) -> tuple:
    out = [1]
    for _ in range(n):
        res = [0] * (len(out) + len(coeffs) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(coeffs):
                res[i + j] += x * y
        out = res
    return tuple(out)


def _valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@dataclass(frozen=True)
class WeilPolynomial:
    """Minimal polynomial of a q-Weil number, q = p^a; ``coeffs`` ascending, monic."""

    coeffs: tuple
    p: int
    a: int

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def validate_weil(h: Union[str, Sequence[int]], p: int, a: int) -> WeilPolynomial:
    """Check that h is the minimal polynomial of a p^a-Weil number (degree 1 or 2)."""
    coeffs = parse_poly(h) if isinstance(h, str) else tuple(int(c) for c in h)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not isprime(p):
        raise WeilError(f"p={p} is not prime")
    if a < 1:
        raise WeilError(f"a={a} must be positive")
    deg = len(coeffs) - 1
    if deg < 1:
        raise WeilError("constant polynomial")
    if deg > 2:
        raise WeilError(f"degree {deg} Weil polynomials are not supported (degree <= 2 only)")
    if coeffs[-1] != 1:
        raise WeilError("polynomial must be monic")
    q = p**a
    if deg == 1:
        if a % 2:
            raise WeilError(f"degree-1 Weil polynomial needs q a square; a={a} is odd")
        root = -coeffs[0]
        if abs(root) != p ** (a // 2):
            raise WeilError(f"root {root} does not have absolute value sqrt({q})")
    else:
        c, b = coeffs[0], coeffs[1]
        disc = b * b - 4 * c
        if _is_square(disc):
            raise WeilError(f"{format_poly(coeffs)} is reducible over Q")
        if disc > 0:
            # two real roots of modulus sqrt(q) must be +-sqrt(q)
            ok = b == 0 and c == -q
        else:
            # complex pair: |root|^2 = constant term
            ok = c == q
        if not ok:
            raise WeilError(f"roots of {format_poly(coeffs)} do not all have absolute value sqrt({q})")
    w = WeilPolynomial(coeffs, p, a)
    _numeric_probe(w)
    return w


def _numeric_probe(w: WeilPolynomial) -> None:
    roots = np.roots(list(w.coeffs[::-1]))
    target = math.sqrt(w.q)
    if np.any(np.abs(np.abs(roots) - target) > ROOT_TOLERANCE * max(1.0, target)):
        log.warning("numeric root moduli of %s deviate from sqrt(%d)", w, w.q)


# ---------------------------------------------------------------- center, slopes, invariants


def center(w: WeilPolynomial) -> Optional[QuadraticField]:
    """Q(pi): ``None`` for Q, else the quadratic field generated by the roots."""
    if w.degree == 1:
        return None
    c, b = w.coeffs[0], w.coeffs[1]
    return QuadraticField.from_any_integer(b * b - 4 * c)


def newton_slopes(w: WeilPolynomial) -> tuple:
    """p-adic valuations of the roots (ord p = 1), ascending, via the Newton polygon."""
    pts = [(i, _valuation(c, w.p)) for i, c in enumerate(w.coeffs) if c != 0]
    hull: list = []
    for pt in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly below the chord to pt
            if (y1 - y0) * (pt[0] - x0) >= (pt[1] - y0) * (x1 - x0):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        val = Fraction(y0 - y1, x1 - x0)
        slopes.extend([val] * (x1 - x0))
    return tuple(sorted(slopes))


@dataclass(frozen=True)
class LocalInvariant:
    place: Union[RationalPlace, QuadraticPlace]
    value: Fraction

    def to_json(self) -> dict:
        return {"place": str(self.place), "value": str(self.value)}


def local_invariants(w: WeilPolynomial) -> list:
    """Brauer invariants of End^0 at the places above p and at infinity.

    Places of the center not above p carry invariant 0 and are omitted.
    """
    K = center(w)
    slopes = newton_slopes(w)
    out = []
    if K is None:
        lam = slopes[0]
        out.append(LocalInvariant(RationalPlace(w.p), (lam / w.a) % 1))
        out.append(LocalInvariant(INFINITY, HALF))
        return out
    above = places_above(K, RationalPlace(w.p))
    if len(above) == 2:
        # split: one root per place; smaller slope to split_first
        for place, lam in zip(above, slopes):
            out.append(LocalInvariant(place, (lam * place.e * place.f / w.a) % 1))
    else:
        (place,) = above
        if slopes[0] != slopes[1]:
            raise AssertionError(f"unequal slopes {slopes} at a non-split prime for {w}")
        out.append(LocalInvariant(place, (slopes[0] * place.e * place.f / w.a) % 1))
    for place in places_above(K, INFINITY):
        out.append(LocalInvariant(place, HALF if place.kind == "real" else Fraction(0)))
    return out


# ---------------------------------------------------------------- classification


class SurfaceClass(Enum):
    TOTALLY_DEFINITE_QUAT_OVER_Q = "TotallyDefiniteQuatOverQ"
    TOTALLY_DEFINITE_QUAT_OVER_REAL_QUAD = "TotallyDefiniteQuatOverRealQuad"
    QUARTIC_CM = "QuarticCM"
    QUAT_OVER_IMAG_QUAD = "QuatOverImagQuad"


@dataclass(frozen=True)
class EndAlgDescriptor:
    """Portrait of End^0 of the simple abelian variety attached to a Weil polynomial."""

    weil: WeilPolynomial
    center: Optional[QuadraticField]
    slopes: tuple
    invariants: tuple
    d: int
    e: int
    g: int
    dim: int
    f_x: tuple
    surface_class: str
    commutative: bool
    supersingular_rational_center: bool
    jordan: Optional[JordanAnswer]  # None when d > 2: not a quaternion algebra
    algebra: Optional[QuaternionClass] = field(default=None)

    @property
    def ram(self) -> frozenset:
        return frozenset(inv.place for inv in self.invariants if inv.value == HALF)

    def ram_str(self) -> str:
        return ",".join(str(v) for v in sorted(self.ram, key=lambda v: v.sort_key()))

    def to_json(self) -> dict:
        return {
            "poly": str(self.weil),
            "p": self.weil.p,
            "a": self.weil.a,
            "q": self.weil.q,
            "center": "Q" if self.center is None else self.center.to_json(),
            "slopes": [str(s) for s in self.slopes],
            "invariants": [inv.to_json() for inv in self.invariants],
            "d": self.d,
            "e": self.e,
            "g": self.g,
            "dim": self.dim,
            "f_X": format_poly(self.f_x),
            "class": self.surface_class,
            "commutative": self.commutative,
            "supersingular_rational_center": self.supersingular_rational_center,
            "jordan": None if self.jordan is None else {"value": self.jordan.value, "reason": self.jordan.reason},
        }


def surface_class_of(desc: EndAlgDescriptor) -> SurfaceClass:
    """Which of the three possible End^0 shapes a simple abelian surface has."""
    if desc.g != 2:
        raise WeilError(f"not a surface: g = {desc.g}")
    if desc.d == 2 and desc.e == 1:
        return SurfaceClass.TOTALLY_DEFINITE_QUAT_OVER_Q
    if desc.d == 2 and desc.e == 2:
        if desc.center.is_real:
            return SurfaceClass.TOTALLY_DEFINITE_QUAT_OVER_REAL_QUAD
        return SurfaceClass.QUAT_OVER_IMAG_QUAD
    if desc.d == 1 and desc.e == 4:
        return SurfaceClass.QUARTIC_CM
    raise WeilError(f"(d, e) = ({desc.d}, {desc.e}) is impossible for a simple surface")


def analyze(w: WeilPolynomial) -> EndAlgDescriptor:
    K = center(w)
    invs = tuple(local_invariants(w))
    d = math.lcm(*(inv.value.denominator for inv in invs))
    e = 1 if K is None else 2
    if (d * e) % 2:
        raise AssertionError(f"d*e = {d * e} is odd for {w}")
    g = d * e // 2
    algebra = None
    jordan = None
    if d == 1:
        jordan = JordanAnswer(1, "field:commutative", "End^0 is a field; finite subgroups are cyclic")
    elif d == 2:
        algebra = QuaternionClass(K, frozenset(inv.place for inv in invs if inv.value == HALF))
        jordan = jordan_over_Q(algebra) if K is None else jordan_over_quadratic(algebra)
    desc = EndAlgDescriptor(
        weil=w,
        center=K,
        slopes=newton_slopes(w),
        invariants=invs,
        d=d,
        e=e,
        g=g,
        dim=d * d * e,
        f_x=poly_power(w.coeffs, d),
        surface_class="",
        commutative=d == 1,
        supersingular_rational_center=K is None,
        jordan=jordan,
        algebra=algebra,
    )
    label = surface_class_of(desc).value if g == 2 else f"NotASurface({g})"
    object.__setattr__(desc, "surface_class", label)
    return desc


def analyze_poly(h: Union[str, Sequence[int]], p: int, a: int) -> EndAlgDescriptor:
    return analyze(validate_weil(h, p, a))


def albert_restriction_check(albert_type: str, e0: int, e: int, d: int, g: int, positive_char: bool) -> bool:
    """Numerical restriction on (e0, e, d) for an Albert type in dimension g."""
    t = albert_type.upper()
    if min(e0, e, d, g) < 1:
        raise ValueError("all inputs must be positive")
    if t == "I":
        return g % e == 0
    if t == "II":
        return g % (2 * e) == 0
    if t == "III":
        return g % e == 0 if positive_char else g % (2 * e) == 0
    if t == "IV":
        return g % (e0 * d) == 0 if positive_char else g % (e0 * d * d) == 0
    raise ValueError(f"unknown Albert type {albert_type!r}")


# ---------------------------------------------------------------- enumeration and surveys


def weil_candidates(p: int, a: int) -> list:
    """Every degree <= 2 q-Weil minimal polynomial for q = p^a, in canonical order."""
    if not isprime(p) or a < 1:
        raise WeilError("need a prime p and a >= 1")
    q = p**a
    if q > Q_CAP:
        raise WeilError(f"q = {q} exceeds cap {Q_CAP}")
    out = []
    if a % 2 == 0:
        s = p ** (a // 2)
        out += [(-s, 1), (s, 1)]
    quad = []
    if a % 2:
        quad.append((0, -q))
    bmax = math.isqrt(4 * q - 1)
    for b in range(-bmax, bmax + 1):
        if b * b < 4 * q:
            quad.append((b, q))
    quad.sort()
    out += [(c, b, 1) for b, c in quad]
    return out


def scan_weil(p: int, a: int) -> list:
    """(WeilPolynomial, EndAlgDescriptor) for every degree <= 2 Weil polynomial of q = p^a."""
    out = []
    for coeffs in weil_candidates(p, a):
        w = validate_weil(coeffs, p, a)
        out.append((w, analyze(w)))
    return out


@dataclass(frozen=True)
class SurveyRow:
    p: int
    jordan: int
    surface_class: str
    ram: str


@dataclass
class SurveyResult:
    max_prime: int
    rows: list
    histogram: dict

    @property
    def total(self) -> int:
        return len(self.rows)

    def fractions(self) -> dict:
        return {k: Fraction(v, self.total) for k, v in self.histogram.items()}

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["p", "jordan", "class", "ram"])
            for r in self.rows:
                writer.writerow([r.p, r.jordan, r.surface_class, r.ram])


def _survey_one(p: int) -> SurveyRow:
    desc = analyze(validate_weil((-p, 0, 1), p, 1))
    predicted = dp_inf_sqrt_p_prediction(p).value
    if desc.jordan.value != predicted:
        raise AssertionError(f"survey disagreement at p={p}: pipeline {desc.jordan.value}, congruences {predicted}")
    return SurveyRow(p, desc.jordan.value, desc.surface_class, desc.ram_str())


def _survey_chunk(primes: Sequence[int]) -> list:
    return [_survey_one(p) for p in primes]


def _worker_count(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("JORDANIC_THREADS")
    return max(1, int(env)) if env else 1


def survey_sqrt_p(max_prime: int, threads: Optional[int] = None) -> SurveyResult:
    """Jordan constants of End^0 for t^2 - p over F_p, for all primes p <= max_prime.

    Each value is computed twice (Weil pipeline and congruences on p) and the
    two must agree.  Work is split across processes when ``threads`` (or the
    ``JORDANIC_THREADS`` environment variable) exceeds 1; output order is
    always ascending in p.
    """
    if max_prime > Q_CAP:
        raise WeilError(f"max prime {max_prime} exceeds cap {Q_CAP}")
    primes = list(primerange(2, max_prime + 1))
    workers = _worker_count(threads)
    if workers == 1 or len(primes) < 1000:
        rows = _survey_chunk(primes)
    else:
        size = -(-len(primes) // (4 * workers))
        chunks = [primes[i:i + size] for i in range(0, len(primes), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [r for part in pool.map(_survey_chunk, chunks) for r in part]
    hist: dict = {}
    for r in rows:
        hist[r.jordan] = hist.get(r.jordan, 0) + 1
    return SurveyResult(max_prime, rows, dict(sorted(hist.items())))
