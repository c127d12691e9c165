"""Finite groups given by Cayley tables, and brute-force Jordan constants.

Elements are plain indices ``0..order-1``; a subgroup is a ``frozenset`` of
indices.  Everything here is exhaustive search, which is exact and cheap for
the groups of order at most 120 that show up in practice.  A hard cap of
512 guards against accidental blowups.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

ORDER_CAP = 512
ASSOCIATIVITY_CHECK_CAP = 256

Subgroup = frozenset


class GroupError(ValueError):
    """Raised for malformed tables, bad family parameters or cap violations."""


_FAMILY_KINDS = ("cyclic", "dicyclic", "2T", "2O", "2I")


@dataclass(frozen=True)
class GroupFamily:
    """Named family: cyclic C_n, dicyclic Dic_{4n}, or a binary polyhedral group."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise GroupError(f"unknown group family {self.kind!r}")
        if self.kind == "cyclic" and self.n < 1:
            raise GroupError(f"cyclic group needs n >= 1, got {self.n}")
        if self.kind == "dicyclic" and self.n < 2:
            raise GroupError(f"dicyclic group needs n >= 2, got {self.n}")
        if self.kind in ("2T", "2O", "2I") and self.n != 0:
            raise GroupError(f"{self.kind} takes no parameter")

    @classmethod
    def cyclic(cls, n: int) -> GroupFamily:
        return cls("cyclic", n)

    @classmethod
    def dicyclic(cls, n: int) -> GroupFamily:
        return cls("dicyclic", n)

    @classmethod
    def quaternion8(cls) -> GroupFamily:
        return cls("dicyclic", 2)

    @classmethod
    def binary_tetrahedral(cls) -> GroupFamily:
        return cls("2T")

    @classmethod
    def binary_octahedral(cls) -> GroupFamily:
        return cls("2O")

    @classmethod
    def binary_icosahedral(cls) -> GroupFamily:
        return cls("2I")

    @classmethod
    def parse(cls, name: str, n: Optional[int] = None) -> GroupFamily:
        """Parse CLI-style names: ``cyclic``/``c``, ``dic``, ``q8``, ``2T``, ``2O``, ``2I``."""
        key = name.strip().lower()
        if key in ("c", "cyclic"):
            if n is None:
                raise GroupError("cyclic family needs --n")
            return cls.cyclic(n)
        if key in ("dic", "dicyclic"):
            if n is None:
                raise GroupError("dicyclic family needs --n")
            return cls.dicyclic(n)
        if key in ("q8", "quaternion"):
            return cls.quaternion8()
        aliases = {"2t": "2T", "2o": "2O", "2i": "2I", "binarytetrahedral": "2T",
                   "binaryoctahedral": "2O", "binaryicosahedral": "2I"}
        if key in aliases:
            return cls(aliases[key])
        raise GroupError(f"unknown group family {name!r}")

    @property
    def order(self) -> int:
        if self.kind == "cyclic":
            return self.n
        if self.kind == "dicyclic":
            return 4 * self.n
        return {"2T": 24, "2O": 48, "2I": 120}[self.kind]

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.n}"
        if self.kind == "dicyclic":
            return "Q8" if self.n == 2 else f"Dic{4 * self.n}"
        return self.kind


@dataclass(frozen=True)
class FiniteGroup:
    """A group given by its full composition table.

    ``table[a][b]`` is the index of ``a*b``.  All group axioms are checked on
    construction (associativity exhaustively up to order 256).
    """

    order: int
    table: tuple
    identity: int = 0
    labels: Optional[tuple] = None

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        _check_axioms(self)

    @cached_property
    def _np(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    @cached_property
    def inverses(self) -> tuple:
        t = self._np
        return tuple(int(np.nonzero(t[a] == self.identity)[0][0]) for a in range(self.order))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverses[g]]

    @cached_property
    def element_orders(self) -> tuple:
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    @cached_property
    def _lattice(self) -> dict:
        return _enumerate_subgroups(self)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "identity": self.identity,
            "table": [list(row) for row in self.table],
            "labels": list(self.labels) if self.labels is not None else None,
        }

    @classmethod
    def from_json(cls, obj: dict) -> FiniteGroup:
        try:
            return cls(
                order=int(obj["order"]),
                table=obj["table"],
                identity=int(obj.get("identity", 0)),
                labels=obj.get("labels"),
            )
        except (KeyError, TypeError) as exc:
            raise GroupError(f"malformed group JSON: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _check_axioms(G: FiniteGroup) -> None:
    n = G.order
    if n < 1:
        raise GroupError("group order must be positive")
    if n > ORDER_CAP:
        raise GroupError(f"order {n} exceeds cap {ORDER_CAP}")
    if len(G.table) != n or any(len(row) != n for row in G.table):
        raise GroupError("table is not order x order")
    if G.labels is not None and len(G.labels) != n:
        raise GroupError("labels length does not match order")
    if not 0 <= G.identity < n:
        raise GroupError("identity index out of range")
    t = np.asarray(G.table, dtype=np.int64)
    if t.min() < 0 or t.max() >= n:
        raise GroupError("table entry out of range")
    ar = np.arange(n)
    if not (np.array_equal(t[G.identity], ar) and np.array_equal(t[:, G.identity], ar)):
        raise GroupError("identity row/column is not the identity permutation")
    srt = np.sort(t, axis=1)
    if not (np.all(srt == ar) and np.all(np.sort(t, axis=0) == ar[:, None])):
        raise GroupError("table is not a Latin square")
    if n <= ASSOCIATIVITY_CHECK_CAP:
        # (ab)c vs a(bc) for every triple
        lhs = t[t]  # lhs[a, b, c] = t[t[a, b], c]
        rhs = t[ar[:, None, None], t[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise GroupError("table is not associative")
    # Latin square + identity already gives two-sided inverses under associativity
    inv_right = np.argmax(t == G.identity, axis=1)
    if not np.all(t[inv_right, ar] == G.identity):
        raise GroupError("some element lacks a two-sided inverse")


def group_from_multiplication(elements: Sequence, mul, labels: Optional[Sequence[str]] = None) -> FiniteGroup:
    """Tabulate a closed list of hashable elements under ``mul``.

    ``elements[0]`` must be the identity.
    """
    index = {x: i for i, x in enumerate(elements)}
    table = []
    for x in elements:
        row = []
        for y in elements:
            z = mul(x, y)
            if z not in index:
                raise GroupError("element list is not closed under multiplication")
            row.append(index[z])
        table.append(row)
    return FiniteGroup(len(elements), table, 0, tuple(labels) if labels is not None else None)


# ---------------------------------------------------------------- builders


def _cyclic(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(n, table, 0, tuple(f"a^{i}" for i in range(n)))


def _dicyclic(n: int) -> FiniteGroup:
    # element a^k b^s has index k + 2n*s; uses b a^l = a^-l b and b^2 = a^n
    m = 2 * n

    def decode(i):
        return i % m, i // m

    table = []
    for x in range(2 * m):
        k, s = decode(x)
        row = []
        for y in range(2 * m):
            l, t = decode(y)
            e = k + (-l if s else l)
            if s and t:
                e, u = e + n, 0
            else:
                u = s ^ t
            row.append(e % m + m * u)
        table.append(row)
    labels = [f"a^{k}" if s == 0 else f"a^{k}b" for k, s in map(decode, range(2 * m))]
    return FiniteGroup(2 * m, table, 0, tuple(labels))


def build_group(family: GroupFamily) -> FiniteGroup:
    if family.kind == "cyclic":
        return _cyclic(family.n)
    if family.kind == "dicyclic":
        return _dicyclic(family.n)
    from .quatarith import generate_group, standard_embedding

    spec = standard_embedding(family)
    return generate_group(spec.generators, cap=family.order)


# ---------------------------------------------------------------- subgroups


def closure(G: FiniteGroup, gens: Iterable[int], start: Iterable[int] = ()) -> frozenset:
    """Subgroup generated by ``gens`` (together with the elements of ``start``)."""
    gens = tuple(gens)
    seen = {G.identity, *start, *gens}
    queue = list(seen)
    table = G.table
    while queue:
        x = queue.pop()
        row = table[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def cyclic_subgroup(G: FiniteGroup, g: int) -> frozenset:
    out, x = {G.identity}, g
    while x != G.identity:
        out.add(x)
        x = G.table[x][g]
    return frozenset(out)


def _sort_key(H: frozenset):
    return (len(H), tuple(sorted(H)))


def _enumerate_subgroups(G: FiniteGroup) -> dict:
    # subgroup -> generating tuple; seeds are the cyclic subgroups, closed
    # under joins with cyclic seeds until nothing new appears
    cyclic: dict = {}
    for g in range(G.order):
        cyclic.setdefault(cyclic_subgroup(G, g), (g,))
    known = dict(cyclic)
    frontier = list(cyclic.items())
    while frontier:
        fresh = []
        for H, hg in frontier:
            for C, (c,) in cyclic.items():
                if c in H:
                    continue
                J = closure(G, hg + (c,), start=H)
                if J not in known:
                    known[J] = hg + (c,)
                    fresh.append((J, known[J]))
        frontier = fresh
    return {H: known[H] for H in sorted(known, key=_sort_key)}


def subgroups(G: FiniteGroup) -> list:
    """Every subgroup of G exactly once, ordered by size then sorted elements."""
    if G.order > ORDER_CAP:
        raise GroupError(f"order {G.order} exceeds cap {ORDER_CAP}")
    return list(G._lattice)


def is_subgroup(G: FiniteGroup, H: Iterable[int]) -> bool:
    H = frozenset(H)
    if not H or not H <= frozenset(range(G.order)):
        return False
    return all(G.table[a][b] in H for a in H for b in H)


def _require_subgroup(G: FiniteGroup, H) -> frozenset:
    if H is None:
        return frozenset(range(G.order))
    H = frozenset(H)
    if not is_subgroup(G, H):
        raise GroupError("element set is not closed under the group law")
    return H


def is_abelian(G: FiniteGroup, H: Optional[Iterable[int]] = None) -> bool:
    H = _require_subgroup(G, H)
    t = G.table
    return all(t[a][b] == t[b][a] for a in H for b in H)


def is_normal(G: FiniteGroup, H: Iterable[int]) -> bool:
    H = _require_subgroup(G, H)
    return all(G.conj(g, h) in H for g in range(G.order) for h in H)


def derived_subgroup(G: FiniteGroup, H: Optional[Iterable[int]] = None) -> frozenset:
    H = _require_subgroup(G, H)
    inv, t = G.inverses, G.table
    comms = {t[t[t[x][y]][inv[x]]][inv[y]] for x in H for y in H}
    return closure(G, comms)


def subgroup_as_group(G: FiniteGroup, H: Iterable[int]) -> FiniteGroup:
    """Re-index a subgroup as a standalone FiniteGroup (elements in sorted order)."""
    H = _require_subgroup(G, H)
    elems = sorted(H)
    elems.remove(G.identity)
    elems.insert(0, G.identity)
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[G.table[a][b]] for b in elems] for a in elems]
    labels = tuple(G.label(a) for a in elems) if G.labels is not None else None
    return FiniteGroup(len(elems), table, 0, labels)


# ---------------------------------------------------------------- Jordan constants


@dataclass(frozen=True)
class JordanConstant:
    """Value ``[H:A]`` together with the attaining subgroup H and its normal abelian A."""

    value: int
    subgroup: frozenset = field(repr=False)
    normal_abelian: frozenset = field(repr=False)


def _commute(G: FiniteGroup, xs: Sequence[int]) -> bool:
    t = G.table
    return all(t[a][b] == t[b][a] for i, a in enumerate(xs) for b in xs[i + 1:])


def _normalizes(G: FiniteGroup, hgens: Sequence[int], A: frozenset, agens: Sequence[int]) -> bool:
    return all(G.conj(h, a) in A for h in hgens for a in agens)


def _best_normal_abelian(G: FiniteGroup, H: frozenset, hgens, abelian: list) -> frozenset:
    # abelian is pre-sorted by decreasing size, then lexicographically
    for A, agens in abelian:
        if len(H) % len(A) or not A <= H:
            continue
        if _normalizes(G, hgens, A, agens):
            return A
    raise AssertionError("trivial subgroup must always qualify")


def _abelian_sorted(G: FiniteGroup) -> list:
    lattice = G._lattice
    abel = [(A, g) for A, g in lattice.items() if _commute(G, g)]
    abel.sort(key=lambda item: (-len(item[0]), tuple(sorted(item[0]))))
    return abel


def min_normal_abelian_index(H: FiniteGroup) -> int:
    """min [H:A] over normal abelian subgroups A of H."""
    whole = frozenset(range(H.order))
    A = _best_normal_abelian(H, whole, range(H.order), _abelian_sorted(H))
    return H.order // len(A)


def jordan_constant(G: FiniteGroup) -> JordanConstant:
    """Max over subgroups H of min [H:A], A normal abelian in H, with a witness."""
    if G.order > ORDER_CAP:
        raise GroupError(f"order {G.order} exceeds cap {ORDER_CAP}")
    lattice = G._lattice
    abel = _abelian_sorted(G)
    best = None
    for H in sorted(lattice, key=lambda S: tuple(sorted(S))):
        A = _best_normal_abelian(G, H, lattice[H], abel)
        idx = len(H) // len(A)
        if best is None or idx > best.value:
            best = JordanConstant(idx, H, A)
    return best


# ---------------------------------------------------------------- identification


def _involutions(G: FiniteGroup) -> list:
    return [x for x, k in enumerate(G.element_orders) if k == 2]


def _dicyclic_parameter(G: FiniteGroup) -> Optional[int]:
    n4 = G.order
    if n4 % 4 or n4 < 8 or len(_involutions(G)) != 1:
        return None
    n = n4 // 4
    t, inv = G.table, G.inverses
    for a, k in enumerate(G.element_orders):
        if k != 2 * n:
            continue
        A = cyclic_subgroup(G, a)
        an = a
        for _ in range(n - 1):
            an = t[an][a]
        for b in range(G.order):
            if b in A:
                continue
            if t[b][b] == an and G.conj(b, a) == inv[a]:
                return n
    return None


def identify_family(G: FiniteGroup) -> Optional[GroupFamily]:
    """Recognise C_n, Dic_{4n}, 2T, 2O, 2I by structural probes; ``None`` if unknown."""
    n = G.order
    if n in G.element_orders:
        return GroupFamily.cyclic(n)
    k = _dicyclic_parameter(G)
    if k is not None:
        return GroupFamily.dicyclic(k)
    if len(_involutions(G)) != 1:
        return None
    D = derived_subgroup(G)
    if n == 24 and len(D) == 8:
        return GroupFamily.binary_tetrahedral()
    if n == 48 and len(D) == 24:
        return GroupFamily.binary_octahedral()
    if n == 120 and len(D) == 120:
        return GroupFamily.binary_icosahedral()
    return None
