"""Quadratic fields Q(sqrt m), prime splitting, and place bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from sympy import factorint, isprime
from sympy.functions.combinatorial.numbers import kronecker_symbol as _sympy_kronecker


class FieldError(ValueError):
    pass


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel: n = s * k^2 with s squarefree."""
    if n == 0:
        raise FieldError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorint(abs(n)).values())


def kronecker_symbol(a: int, n: int) -> int:
    if n == 0:
        raise FieldError("Kronecker symbol needs n != 0")
    return int(_sympy_kronecker(a, n))


@dataclass(frozen=True, order=True)
class RationalPlace:
    """A place of Q: a prime ``p`` or the infinite place (``p is None``)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not isprime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @classmethod
    def infinity(cls) -> RationalPlace:
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)

    def sort_key(self):
        return (1, 0) if self.p is None else (0, self.p)

    def to_json(self) -> dict:
        if self.p is None:
            return {"kind": "infinite", "p": None, "role": None}
        return {"kind": "finite", "p": self.p, "role": None}


INFINITY = RationalPlace(None)


class SplittingType(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class QuadraticField:
    """Q(sqrt m) for squarefree m not in {0, 1}."""

    m: int

    def __post_init__(self):
        if self.m in (0, 1) or not is_squarefree(self.m):
            raise FieldError(f"m={self.m} must be squarefree and not 0 or 1")

    @classmethod
    def from_any_integer(cls, n: int) -> QuadraticField:
        """Field generated by sqrt(n) for any non-square integer n."""
        return cls(squarefree_part(n))

    @property
    def discriminant(self) -> int:
        return self.m if self.m % 4 == 1 else 4 * self.m

    @property
    def is_real(self) -> bool:
        return self.m > 0

    def __str__(self) -> str:
        return f"Q(sqrt({self.m}))"

    def to_json(self) -> dict:
        return {"m": self.m}


def splitting_type(K: QuadraticField, p: int) -> SplittingType:
    D = K.discriminant
    if D % p == 0:
        return SplittingType.RAMIFIED
    return SplittingType.SPLIT if kronecker_symbol(D, p) == 1 else SplittingType.INERT


_ROLE_DATA = {
    # role -> (e, f)
    "split_first": (1, 1),
    "split_second": (1, 1),
    "inert": (1, 2),
    "ramified": (2, 1),
}


@dataclass(frozen=True)
class QuadraticPlace:
    """A place of a quadratic field.

    ``kind`` is ``finite``, ``real`` or ``complex``.  Finite places carry the
    rational prime below and a role (``split_first``, ``split_second``,
    ``inert``, ``ramified``); real places carry ``index`` 1 or 2.
    """

    kind: str
    p: Optional[int] = None
    role: Optional[str] = None
    index: int = 0

    def __post_init__(self):
        if self.kind == "finite":
            if self.role not in _ROLE_DATA or self.p is None or not isprime(self.p):
                raise FieldError(f"bad finite place ({self.p}, {self.role})")
        elif self.kind == "real":
            if self.index not in (1, 2) or self.p is not None:
                raise FieldError("real place needs index 1 or 2")
        elif self.kind == "complex":
            if self.p is not None or self.role is not None:
                raise FieldError("complex place takes no prime or role")
        else:
            raise FieldError(f"unknown place kind {self.kind!r}")

    @property
    def is_infinite(self) -> bool:
        return self.kind != "finite"

    @property
    def e(self) -> int:
        return _ROLE_DATA[self.role][0] if self.kind == "finite" else 1

    @property
    def f(self) -> int:
        if self.kind == "finite":
            return _ROLE_DATA[self.role][1]
        return 2 if self.kind == "complex" else 1

    @property
    def local_degree(self) -> int:
        return self.e * self.f

    def __str__(self) -> str:
        if self.kind == "real":
            return f"inf{self.index}"
        if self.kind == "complex":
            return "inf"
        suffix = {"split_first": "a", "split_second": "b"}.get(self.role, "")
        return f"p{self.p}{suffix}"

    def sort_key(self):
        if self.kind == "finite":
            return (0, self.p, self.role)
        return (1, self.index, "")

    def to_json(self) -> dict:
        if self.kind == "real":
            return {"kind": "real", "p": None, "role": str(self.index)}
        return {"kind": self.kind, "p": self.p, "role": self.role}

    @classmethod
    def from_json(cls, obj: dict) -> QuadraticPlace:
        if obj["kind"] == "real":
            return cls("real", index=int(obj["role"]))
        return cls(obj["kind"], obj.get("p"), obj.get("role"))


def places_above(K: QuadraticField, v: RationalPlace) -> list:
    if v.is_infinite:
        if K.is_real:
            return [QuadraticPlace("real", index=1), QuadraticPlace("real", index=2)]
        return [QuadraticPlace("complex")]
    st = splitting_type(K, v.p)
    if st is SplittingType.SPLIT:
        return [QuadraticPlace("finite", v.p, "split_first"),
                QuadraticPlace("finite", v.p, "split_second")]
    return [QuadraticPlace("finite", v.p, st.value)]


def infinite_places(K: QuadraticField) -> frozenset:
    return frozenset(places_above(K, INFINITY))
