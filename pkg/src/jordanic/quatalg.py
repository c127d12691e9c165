"""Quaternion algebras over Q and quadratic fields, identified by ramification sets.

Over a number field a quaternion algebra is determined up to isomorphism by
the (even, finite) set of places where it ramifies, so that set is the whole
representation here.  The Jordan-constant classification is a cascade of
ramification-set comparisons against ``D_{2,inf}`` and ``D_{3,inf}`` after base
change; the literal congruence conditions are kept separately in
:func:`congruence_prediction` as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from sympy import isprime, legendre_symbol, primefactors

from .quadfield import (
    INFINITY,
    QuadraticField,
    QuadraticPlace,
    RationalPlace,
    SplittingType,
    infinite_places,
    places_above,
    splitting_type,
)

JORDAN_VALUES = frozenset({1, 2, 12, 24, 60})


class AlgebraError(ValueError):
    pass


Place = Union[RationalPlace, QuadraticPlace]


@dataclass(frozen=True)
class QuaternionClass:
    """Isomorphism class of a quaternion algebra: base field plus ramified places.

    ``base`` is ``None`` for Q.
    """

    base: Optional[QuadraticField]
    ram: frozenset

    def __post_init__(self):
        ram = frozenset(self.ram)
        object.__setattr__(self, "ram", ram)
        if len(ram) % 2:
            raise AlgebraError(f"ramification set must have even size, got {len(ram)}")
        if self.base is None:
            if not all(isinstance(v, RationalPlace) for v in ram):
                raise AlgebraError("places over Q must be RationalPlace")
            return
        K = self.base
        for w in ram:
            if not isinstance(w, QuadraticPlace):
                raise AlgebraError("places over a quadratic field must be QuadraticPlace")
            if w.kind == "complex":
                raise AlgebraError("a quaternion algebra never ramifies at a complex place")
            if w.kind == "real" and not K.is_real:
                raise AlgebraError(f"{K} has no real places")
            if w.kind == "finite" and w not in places_above(K, RationalPlace(w.p)):
                raise AlgebraError(f"{w} is not a place of {K}")

    @property
    def is_division(self) -> bool:
        return bool(self.ram)

    def sorted_ram(self) -> list:
        return sorted(self.ram, key=lambda v: v.sort_key())

    def ram_str(self) -> str:
        return ",".join(str(v) for v in self.sorted_ram())

    def __str__(self) -> str:
        base = "Q" if self.base is None else str(self.base)
        return f"Quat({base}; ram={{{self.ram_str()}}})"

    def to_json(self) -> dict:
        return {
            "base": "Q" if self.base is None else self.base.to_json(),
            "ram": [v.to_json() for v in self.sorted_ram()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> QuaternionClass:
        if obj["base"] == "Q":
            ram = [RationalPlace(None if v["kind"] == "infinite" else v["p"]) for v in obj["ram"]]
            return cls(None, frozenset(ram))
        K = QuadraticField(int(obj["base"]["m"]))
        return cls(K, frozenset(QuadraticPlace.from_json(v) for v in obj["ram"]))


def is_division(D: QuaternionClass) -> bool:
    return D.is_division


def isomorphic(D1: QuaternionClass, D2: QuaternionClass) -> bool:
    if D1.base != D2.base:
        raise AlgebraError(f"base fields differ: {D1.base} vs {D2.base}")
    return D1.ram == D2.ram


def d_p_infty(p: int) -> QuaternionClass:
    """The definite quaternion algebra over Q ramified exactly at p and infinity."""
    if not isprime(p):
        raise AlgebraError(f"{p} is not prime")
    return QuaternionClass(None, frozenset({RationalPlace(p), INFINITY}))


# ---------------------------------------------------------------- Hilbert symbols


def _square_class_int(x) -> int:
    x = Fraction(x)
    if x == 0:
        raise AlgebraError("structure constants must be nonzero")
    return x.numerator * x.denominator


def _strip(n: int, p: int):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def hilbert_symbol(a, b, v: RationalPlace) -> int:
    """Hilbert symbol (a, b)_v for nonzero rationals a, b."""
    a, b = _square_class_int(a), _square_class_int(b)
    if v.is_infinite:
        return -1 if a < 0 and b < 0 else 1
    p = v.p
    ka, u = _strip(a, p)
    kb, w = _strip(b, p)
    if p == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        e = eps(u) * eps(w) + ka * omega(w) + kb * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (ka * kb * ((p - 1) // 2)) % 2 else 1
    return sign * legendre_symbol(u % p, p) ** kb * legendre_symbol(w % p, p) ** ka


def from_structure_constants_over_Q(alpha, beta) -> QuaternionClass:
    """Ramification set of (alpha, beta)_Q: places where the Hilbert symbol is -1."""
    a, b = _square_class_int(alpha), _square_class_int(beta)
    candidates = [INFINITY] + [RationalPlace(p) for p in primefactors(2 * a * b)]
    ram = frozenset(v for v in candidates if hilbert_symbol(a, b, v) == -1)
    return QuaternionClass(None, ram)


# ---------------------------------------------------------------- base change


def base_change(D: QuaternionClass, K: QuadraticField) -> QuaternionClass:
    """D tensor K: a place above v ramifies iff v ramifies in D and the local degree is 1."""
    if D.base is not None:
        raise AlgebraError("base change is only defined from Q")
    ram = set()
    for v in D.ram:
        for w in places_above(K, v):
            if w.kind != "complex" and w.local_degree == 1:
                ram.add(w)
    return QuaternionClass(K, frozenset(ram))


# ---------------------------------------------------------------- Jordan constants


@dataclass(frozen=True)
class JordanAnswer:
    value: int
    reason: str
    text: str = ""

    def to_json(self) -> dict:
        return {"value": self.value, "reason": self.reason, "text": self.text}


def _require_division(D: QuaternionClass) -> None:
    if not D.is_division:
        raise AlgebraError(f"{D} is split (a matrix algebra); no finite Jordan answer here")


def jordan_over_Q(D: QuaternionClass) -> JordanAnswer:
    if D.base is not None:
        raise AlgebraError("expected an algebra over Q")
    _require_division(D)
    if D.ram == {RationalPlace(2), INFINITY}:
        return JordanAnswer(12, "rational:ram_2_inf", "D = D_{2,inf}; maximal finite subgroup 2T")
    if D.ram == {RationalPlace(3), INFINITY}:
        return JordanAnswer(2, "rational:ram_3_inf", "D = D_{3,inf}; maximal finite subgroup Dic12")
    return JordanAnswer(1, "rational:other", "every finite subgroup is cyclic")


def jordan_over_quadratic(D: QuaternionClass) -> JordanAnswer:
    K = D.base
    if K is None:
        raise AlgebraError("expected an algebra over a quadratic field")
    _require_division(D)
    if K.is_real and D.ram == infinite_places(K):
        if K.m == 5:
            return JordanAnswer(60, "quadratic:icosahedral", "K = Q(sqrt5), ram = all real places; 2I embeds")
        if K.m == 2:
            return JordanAnswer(24, "quadratic:octahedral", "K = Q(sqrt2), ram = all real places; 2O embeds")
    if isomorphic(D, base_change(d_p_infty(2), K)):
        return JordanAnswer(12, "quadratic:tetrahedral", "D = D_{2,inf} (x) K; 2T embeds, 2O and 2I do not")
    if isomorphic(D, base_change(d_p_infty(3), K)):
        return JordanAnswer(2, "quadratic:dicyclic", "D = D_{3,inf} (x) K; Dic12 embeds, 2T does not")
    return JordanAnswer(1, "quadratic:cyclic", "every finite subgroup is cyclic")


def jordan(D: QuaternionClass) -> JordanAnswer:
    return jordan_over_Q(D) if D.base is None else jordan_over_quadratic(D)


def congruence_prediction(family: str, K: QuadraticField) -> Union[JordanAnswer, str]:
    """Jordan constant of D_{2,inf} (x) K or D_{3,inf} (x) K read off congruences on d.

    Independent of the ramification cascade; returns ``"split"`` when the
    base-changed algebra is a matrix algebra.
    """
    d = abs(K.m)
    fam = family.upper()
    if fam not in ("D2", "D3"):
        raise AlgebraError(f"family must be D2 or D3, got {family!r}")

    def d2_real() -> JordanAnswer:
        if d == 5:
            return JordanAnswer(60, "congruence:d2_real_5", "d = 5")
        if d == 2:
            return JordanAnswer(24, "congruence:d2_real_2", "d = 2")
        return JordanAnswer(12, "congruence:d2_real", "d != 2, 5")

    if fam == "D2":
        if K.is_real:
            return d2_real()
        if d % 8 == 7:
            return JordanAnswer(12, "congruence:d2_imag", "d = 7 mod 8")
        return "split"
    if K.is_real:
        if d % 24 in (9, 17) or d % 3 == 1:
            return JordanAnswer(2, "congruence:d3_real", "d = 9, 17 mod 24 or d = 1 mod 3")
        # remaining real d: D_{3,inf} (x) K coincides with D_{2,inf} (x) K
        return d2_real()
    if d % 3 == 2:
        return JordanAnswer(2, "congruence:d3_imag", "d = 2 mod 3")
    return "split"


def dp_inf_sqrt_p_prediction(p: int) -> JordanAnswer:
    """Jordan constant of D_{p,inf} (x) Q(sqrt p) from congruences on p alone."""
    if not isprime(p):
        raise AlgebraError(f"{p} is not prime")
    if p == 5:
        return JordanAnswer(60, "sqrt_p:5", "p = 5")
    if p == 2:
        return JordanAnswer(24, "sqrt_p:2", "p = 2")
    if p % 4 == 3 or (p > 5 and p % 8 == 5):
        return JordanAnswer(12, "sqrt_p:tetrahedral", "p = 3 mod 4, or p > 5 and p = 5 mod 8")
    if p % 24 == 17:
        return JordanAnswer(2, "sqrt_p:dicyclic", "p = 17 mod 24")
    return JordanAnswer(1, "sqrt_p:cyclic", "otherwise")


# ---------------------------------------------------------------- cyclic subgroups of D_{p,inf}


@dataclass(frozen=True)
class CyclicProfile:
    c4: bool
    c6: bool


def embeds_quadratic_field(D: QuaternionClass, L: QuadraticField) -> bool:
    """L embeds in D (over Q) iff no ramified place of D splits in L."""
    if D.base is not None:
        raise AlgebraError("expected an algebra over Q")
    return all(len(places_above(L, v)) == 1 for v in D.ram)


def cyclic_profile(p: int) -> CyclicProfile:
    """Whether C4 and C6 are subgroups of D_{p,inf}^x, for primes p >= 5."""
    if not isprime(p) or p < 5:
        raise AlgebraError(f"cyclic profile needs a prime p >= 5, got {p}")
    by_congruence = {
        11: CyclicProfile(True, True),
        5: CyclicProfile(False, True),
        7: CyclicProfile(True, False),
        1: CyclicProfile(False, False),
    }[p % 12]
    D = d_p_infty(p)
    by_embedding = CyclicProfile(
        embeds_quadratic_field(D, QuadraticField(-1)),
        embeds_quadratic_field(D, QuadraticField(-3)),
    )
    if by_congruence != by_embedding:
        raise AssertionError(f"cyclic profile disagreement at p={p}: {by_congruence} vs {by_embedding}")
    return by_congruence


# ---------------------------------------------------------------- algebraically closed base


class EndoType(Enum):
    RATIONAL_FIELD = "rational"
    REAL_QUADRATIC = "real-quadratic"
    INDEFINITE_QUATERNION_OVER_Q = "indefinite-quaternion"
    QUARTIC_CM = "quartic-cm"


def closed_field_surface_jordan(endotype: EndoType, ram: Optional[frozenset] = None) -> JordanAnswer:
    """Jordan constant for End^0 of a simple abelian surface over an algebraically closed field."""
    if endotype is EndoType.INDEFINITE_QUATERNION_OVER_Q:
        if ram is None:
            raise AlgebraError("indefinite quaternion type needs a ramification set")
        if INFINITY in ram:
            raise AlgebraError("an indefinite algebra is unramified at infinity")
        ans = jordan_over_Q(QuaternionClass(None, frozenset(ram)))
        return JordanAnswer(ans.value, "closed:indefinite_quaternion", ans.text)
    return JordanAnswer(1, f"closed:{endotype.value}", "commutative field: every finite subgroup is cyclic")


# ---------------------------------------------------------------- parsing


def parse_base(text: str) -> Optional[QuadraticField]:
    """``Q`` or ``d=<int>`` (also a bare integer)."""
    t = text.strip()
    if t.upper() == "Q":
        return None
    if t.lower().startswith("d="):
        t = t[2:]
    try:
        return QuadraticField(int(t))
    except ValueError as exc:
        raise AlgebraError(f"cannot parse base field {text!r}: {exc}") from exc


def parse_ram(text: str, base: Optional[QuadraticField]) -> frozenset:
    """Parse a comma list of places.

    Over Q: primes and ``inf``.  Over a quadratic field: ``p3a``/``p3b`` for the
    two places above a split prime, ``p3`` (or ``3``) for every place above 3,
    ``inf1``/``inf2`` for real places and ``inf`` for all real places.
    """
    items = [s.strip().lower() for s in text.split(",") if s.strip()]
    out = set()
    try:
        for item in items:
            if base is None:
                out.add(INFINITY if item in ("inf", "infinity") else RationalPlace(int(item.lstrip("p"))))
                continue
            if item in ("inf", "infinity"):
                out |= {w for w in infinite_places(base) if w.kind == "real"}
                if not base.is_real:
                    raise AlgebraError("an imaginary quadratic field has no real places")
            elif item in ("inf1", "inf2"):
                out.add(QuadraticPlace("real", index=int(item[-1])))
            else:
                body = item.lstrip("p")
                suffix = body[-1] if body and body[-1] in "ab" else ""
                p = int(body[:-1] if suffix else body)
                above = places_above(base, RationalPlace(p))
                if suffix:
                    if splitting_type(base, p) is not SplittingType.SPLIT:
                        raise AlgebraError(f"{p} does not split in {base}")
                    out.add(above[0] if suffix == "a" else above[1])
                else:
                    out |= set(above)
    except ValueError as exc:
        if isinstance(exc, AlgebraError):
            raise
        raise AlgebraError(f"cannot parse ramification set {text!r}: {exc}") from exc
    return frozenset(out)
