"""Exact arithmetic in (alpha, beta) quaternion algebras over Q and Q(sqrt m).

Used to realise Q8, Dic12, 2T, 2O and 2I as explicit unit quaternions and to
close generator sets into Cayley tables.  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .groups import FiniteGroup, GroupError, GroupFamily
from .quadfield import QuadraticField

Scalar = Union[int, Fraction]


class QuaternionArithmeticError(ValueError):
    pass


@dataclass(frozen=True)
class FieldElem:
    """x + y*sqrt(m) with rational x, y.  ``m is None`` means the base is Q."""

    x: Fraction
    y: Fraction = Fraction(0)
    m: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if self.m is None and self.y != 0:
            raise QuaternionArithmeticError("irrational part over Q")

    def _coerce(self, other) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.m != self.m and other.m is not None and self.m is not None:
                raise QuaternionArithmeticError(f"mixing Q(sqrt {self.m}) and Q(sqrt {other.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(Fraction(other), Fraction(0), self.m)
        return NotImplemented

    def _m(self, other: FieldElem) -> Optional[int]:
        return self.m if self.m is not None else other.m

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.x + o.x, self.y + o.y, self._m(o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.x, -self.y, self.m)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        m = self._m(o) or 0
        return FieldElem(self.x * o.x + m * self.y * o.y, self.x * o.y + self.y * o.x, self._m(o))

    __rmul__ = __mul__

    def conjugate(self) -> FieldElem:
        return FieldElem(self.x, -self.y, self.m)

    def norm(self) -> Fraction:
        return self.x * self.x - (self.m or 0) * self.y * self.y

    def inverse(self) -> FieldElem:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return FieldElem(c.x / n, c.y / n, self.m)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (int, Fraction, FieldElem)) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y))

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return f"{self.y}√{self.m}"
        sign = "+" if self.y > 0 else "-"
        return f"{self.x}{sign}{abs(self.y)}√{self.m}"

    def to_json(self) -> list:
        return [str(self.x), str(self.y)]


def field_elem(x: Scalar = 0, y: Scalar = 0, m: Optional[int] = None) -> FieldElem:
    return FieldElem(Fraction(x), Fraction(y), m)


@dataclass(frozen=True)
class QuatElem:
    """c0 + c1 i + c2 j + c3 k with i^2 = alpha, j^2 = beta, ij = k = -ji."""

    c: tuple
    alpha: FieldElem
    beta: FieldElem

    def __post_init__(self):
        if len(self.c) != 4:
            raise QuaternionArithmeticError("need four coordinates")
        m = self.alpha.m
        coords = tuple(x if isinstance(x, FieldElem) else FieldElem(Fraction(x), 0, m) for x in self.c)
        object.__setattr__(self, "c", coords)

    def _check(self, other: QuatElem) -> None:
        if self.alpha != other.alpha or self.beta != other.beta or self.alpha.m != other.alpha.m:
            raise QuaternionArithmeticError("quaternions from different algebras")

    def __mul__(self, other):
        if not isinstance(other, QuatElem):
            if isinstance(other, (int, Fraction, FieldElem)):
                return QuatElem(tuple(x * other for x in self.c), self.alpha, self.beta)
            return NotImplemented
        return qmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return QuatElem(tuple(other * x for x in self.c), self.alpha, self.beta)
        return NotImplemented

    def __add__(self, other: QuatElem) -> QuatElem:
        self._check(other)
        return QuatElem(tuple(a + b for a, b in zip(self.c, other.c)), self.alpha, self.beta)

    def __neg__(self) -> QuatElem:
        return QuatElem(tuple(-a for a in self.c), self.alpha, self.beta)

    def __sub__(self, other: QuatElem) -> QuatElem:
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, QuatElem):
            return NotImplemented
        return self.c == other.c and self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Canonical exact coordinates (Fractions are already in lowest terms)."""
        return tuple((x.x, x.y) for x in self.c)

    def is_one(self) -> bool:
        return self.c[0] == 1 and all(x.is_zero() for x in self.c[1:])

    def __str__(self) -> str:
        return " + ".join(f"({x})" + b for x, b in zip(self.c, ("", " i", " j", " k")))


def algebra_units(alpha: Scalar, beta: Scalar, m: Optional[int] = None):
    """Return (1, i, j, k) in the algebra (alpha, beta) over Q or Q(sqrt m)."""
    a, b = field_elem(alpha, 0, m), field_elem(beta, 0, m)

    def e(idx):
        return QuatElem(tuple(field_elem(1 if t == idx else 0, 0, m) for t in range(4)), a, b)

    return e(0), e(1), e(2), e(3)


def qmul(x: QuatElem, y: QuatElem) -> QuatElem:
    x._check(y)
    al, be = x.alpha, x.beta
    a0, a1, a2, a3 = x.c
    b0, b1, b2, b3 = y.c
    ab = al * be
    c0 = a0 * b0 + al * a1 * b1 + be * a2 * b2 - ab * a3 * b3
    c1 = a0 * b1 + a1 * b0 - be * a2 * b3 + be * a3 * b2
    c2 = a0 * b2 + a2 * b0 + al * a1 * b3 - al * a3 * b1
    c3 = a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1
    return QuatElem((c0, c1, c2, c3), al, be)


def qconj(x: QuatElem) -> QuatElem:
    c0, c1, c2, c3 = x.c
    return QuatElem((c0, -c1, -c2, -c3), x.alpha, x.beta)


def qnorm(x: QuatElem) -> FieldElem:
    c0, c1, c2, c3 = x.c
    al, be = x.alpha, x.beta
    return c0 * c0 - al * c1 * c1 - be * c2 * c2 + al * be * c3 * c3


def qinv(x: QuatElem) -> QuatElem:
    n = qnorm(x)
    if n.is_zero():
        raise QuaternionArithmeticError("element of reduced norm zero is not invertible")
    return qconj(x) * n.inverse()


def qone(like: QuatElem) -> QuatElem:
    m = like.alpha.m
    return QuatElem((field_elem(1, 0, m), field_elem(0, 0, m), field_elem(0, 0, m), field_elem(0, 0, m)),
                    like.alpha, like.beta)


def element_order(x: QuatElem, cap: int) -> int:
    one = qone(x)
    y, k = x, 1
    while y != one:
        if k >= cap:
            raise QuaternionArithmeticError(f"no finite order up to {cap}")
        y = y * x
        k += 1
    return k


def generate_group(gens: Sequence[QuatElem], cap: int = 1000) -> FiniteGroup:
    """Close unit quaternions under multiplication into a FiniteGroup (labels = elements)."""
    if not gens:
        raise QuaternionArithmeticError("need at least one generator")
    if cap > 10_000:
        raise QuaternionArithmeticError("cap must be at most 10^4")
    for g in gens:
        if qnorm(g) != 1:
            raise QuaternionArithmeticError(f"generator {g} has reduced norm {qnorm(g)}, not 1")
        element_order(g, cap)
    one = qone(gens[0])
    elements = [one]
    seen = {one}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = x * g
            if y not in seen:
                if len(elements) >= cap:
                    raise QuaternionArithmeticError(f"closure exceeds cap {cap}")
                seen.add(y)
                elements.append(y)
        i += 1
    try:
        table = _tabulate(elements)
        return FiniteGroup(len(elements), table, 0, tuple(str(x) for x in elements))
    except GroupError as exc:  # pragma: no cover - closure guarantees a group
        raise QuaternionArithmeticError(str(exc)) from exc


def _flat(x: QuatElem) -> list:
    return [v for c in x.c for v in (c.x, c.y)]


def _tabulate(elements: Sequence[QuatElem]) -> list:
    """Cayley table of a closed element list, via integer-scaled coordinates.

    Each element becomes an integer 8-vector after clearing a common
    denominator; products go through the algebra's structure tensor.
    """
    first = elements[0]
    m = first.alpha.m
    basis = []
    for t in range(8):
        coords = [field_elem(0, 0, m) for _ in range(4)]
        if t % 2 == 0:
            coords[t // 2] = field_elem(1, 0, m)
        elif m is not None:
            coords[t // 2] = field_elem(0, 1, m)
        basis.append(QuatElem(tuple(coords), first.alpha, first.beta))
    tensor = [[_flat(qmul(bs, bt)) for bt in basis] for bs in basis]  # [s][t][r]
    t_den = math.lcm(*(v.denominator for row in tensor for col in row for v in col))
    T = np.array([[[int(v * t_den) for v in col] for col in row] for row in tensor], dtype=object)

    flat = [_flat(x) for x in elements]
    L = math.lcm(*(v.denominator for row in flat for v in row))
    A = np.array([[int(v * L) for v in row] for row in flat], dtype=np.int64)
    bound = int(np.abs(A).max()) ** 2 * int(np.abs(T).max()) * 64
    if bound >= 2**62:
        raise QuaternionArithmeticError("coordinates too large for integer tabulation")
    T = T.astype(np.int64)
    # P[x, y, r] = sum_{s,t} A[x,s] A[y,t] T[s,t,r] = L^2 * t_den * (x*y)_r
    P = np.einsum("xs,yt,str->xyr", A, A, T, optimize=True)
    scale = L * t_den
    if np.any(P % scale):
        raise QuaternionArithmeticError("element list is not closed under multiplication")
    P //= scale
    index = {tuple(row): i for i, row in enumerate(A.tolist())}
    n = len(elements)
    try:
        return [[index[tuple(P[x, y])] for y in range(n)] for x in range(n)]
    except KeyError as exc:
        raise QuaternionArithmeticError("element list is not closed under multiplication") from exc


# ---------------------------------------------------------------- standard embeddings


@dataclass(frozen=True)
class EmbeddingSpec:
    family: GroupFamily
    base: Optional[QuadraticField]
    alpha: Fraction
    beta: Fraction
    generators: tuple

    def to_json(self) -> dict:
        return {
            "family": str(self.family),
            "base": "Q" if self.base is None else self.base.to_json(),
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "generators": [[c.to_json() for c in g.c] for g in self.generators],
            "generators_text": [str(g) for g in self.generators],
        }


def _hurwitz_omega(one, i, j, k) -> QuatElem:
    return (one + i + j + k) * Fraction(1, 2)


def standard_embedding(family: GroupFamily) -> EmbeddingSpec:
    half = Fraction(1, 2)
    if family == GroupFamily.quaternion8():
        one, i, j, k = algebra_units(-1, -1)
        return EmbeddingSpec(family, None, Fraction(-1), Fraction(-1), (i, j))
    if family == GroupFamily.dicyclic(3):
        one, i, j, k = algebra_units(-1, -3)
        u = (one + j) * half
        return EmbeddingSpec(family, None, Fraction(-1), Fraction(-3), (u, i))
    if family.kind == "2T":
        one, i, j, k = algebra_units(-1, -1)
        return EmbeddingSpec(family, None, Fraction(-1), Fraction(-1), (i, _hurwitz_omega(one, i, j, k)))
    if family.kind == "2O":
        one, i, j, k = algebra_units(-1, -1, m=2)
        inv_sqrt2 = field_elem(0, half, 2)
        return EmbeddingSpec(family, QuadraticField(2), Fraction(-1), Fraction(-1),
                             (_hurwitz_omega(one, i, j, k), (one + i) * inv_sqrt2))
    if family.kind == "2I":
        one, i, j, k = algebra_units(-1, -1, m=5)
        phi = field_elem(half, half, 5)
        phi_inv = phi - 1
        g = (one * phi + i * phi_inv + j) * half
        return EmbeddingSpec(family, QuadraticField(5), Fraction(-1), Fraction(-1), (i, g))
    raise QuaternionArithmeticError(f"no standard embedding for {family}")


# ---------------------------------------------------------------- cross validation


@dataclass(frozen=True)
class CrossValidation:
    family: str
    group_order: int
    group_jordan: int
    ambient: str
    ambient_jordan: int
    relation: str  # "equal" for maximal finite subgroups, "bounded" otherwise
    agree: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def cross_validate(family: GroupFamily) -> CrossValidation:
    """Brute-force Jordan constant of the realised group vs the ambient algebra's cascade value."""
    from .groups import identify_family, jordan_constant
    from .quatalg import base_change, from_structure_constants_over_Q, jordan

    spec = standard_embedding(family)
    G = generate_group(spec.generators, cap=family.order + 1)
    if G.order != family.order or identify_family(G) != family:
        raise QuaternionArithmeticError(
            f"embedding for {family} closed to order {G.order} ({identify_family(G)})")
    group_j = jordan_constant(G).value
    D = from_structure_constants_over_Q(spec.alpha, spec.beta)
    if spec.base is not None:
        D = base_change(D, spec.base)
    ambient_j = jordan(D).value
    # Q8 is not maximal in D_{2,inf}^x, so only the subgroup inequality holds
    if family == GroupFamily.quaternion8():
        return CrossValidation(str(family), G.order, group_j, str(D), ambient_j, "bounded", group_j <= ambient_j)
    return CrossValidation(str(family), G.order, group_j, str(D), ambient_j, "equal", group_j == ambient_j)
