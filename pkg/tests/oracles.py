"""Slow, independent re-computations used only as test oracles."""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def naive_closure(table, identity, gens):
    elems = {identity, *gens}
    while True:
        new = {table[a][b] for a in elems for b in elems} | elems
        if new == elems:
            return frozenset(elems)
        elems = new


def two_generated_subgroups(G):
    """All subgroups generated by at most two elements (every subgroup, for the groups used here)."""
    t = G.table
    out = set()
    for a in range(G.order):
        for b in range(a, G.order):
            out.add(naive_closure(t, G.identity, (a, b)))
    return out


def all_subgroups_by_subsets(G):
    """Exhaustive over every subset; only for tiny groups."""
    n = G.order
    out = set()
    for mask in range(1, 1 << n):
        S = [i for i in range(n) if mask >> i & 1]
        if G.identity not in S:
            continue
        Sset = set(S)
        if all(G.table[a][b] in Sset for a in S for b in S):
            out.add(frozenset(S))
    return out


def naive_is_normal(G, H, A):
    inv = [next(b for b in range(G.order) if G.table[a][b] == G.identity) for a in range(G.order)]
    return all(G.table[G.table[h][a]][inv[h]] in A for h in H for a in A)


def naive_is_abelian(G, A):
    return all(G.table[a][b] == G.table[b][a] for a in A for b in A)


def naive_jordan(G, lattice):
    best = 0
    for H in lattice:
        m = min(len(H) // len(A) for A in lattice if A <= H and naive_is_abelian(G, A) and naive_is_normal(G, H, A))
        best = max(best, m)
    return best


def _vp(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def hilbert_by_search(a: int, b: int, p: int) -> int:
    """(a, b)_p for squarefree integers a, b by searching for a liftable primitive
    solution of a x^2 + b y^2 = z^2 modulo p^N.

    With v_p(a), v_p(b) <= 1 every p-adic primitive solution has a partial
    derivative of valuation m <= 1 (p odd) or <= 2 (p = 2), so Hensel lifting
    from modulus p^(2m+1) is both necessary and sufficient.
    """
    N = 5 if p == 2 else 3
    mod = p**N
    squares: dict = {}
    for z in range(mod):
        squares.setdefault(z * z % mod, []).append(z)
    for x, y in product(range(mod), repeat=2):
        for z in squares.get((a * x * x + b * y * y) % mod, ()):
            if x % p == 0 and y % p == 0 and z % p == 0:
                continue
            m = min(_vp(2 * a * x, p) if x else 99, _vp(2 * b * y, p) if y else 99, _vp(2 * z, p) if z else 99)
            if 2 * m + 1 <= N:
                return 1
    return -1


def root_valuations_quadratic(b: int, c: int, p: int):
    """Valuations of the roots of t^2 + b t + c (c != 0) from the closed form."""
    vc = _vp(c, p)
    if b == 0:
        return (Fraction(vc, 2), Fraction(vc, 2))
    vb = _vp(b, p)
    if 2 * vb >= vc:
        return (Fraction(vc, 2), Fraction(vc, 2))
    return tuple(sorted((Fraction(vb), Fraction(vc - vb))))


def splits_by_root_count(m: int, p: int) -> str:
    """Dedekind-Kummer on the ring-of-integers generator of Q(sqrt m), by root counting mod p."""
    if m % 4 == 1:
        poly = lambda x: x * x - x - (m - 1) // 4  # noqa: E731
        disc = m
    else:
        poly = lambda x: x * x - m  # noqa: E731
        disc = 4 * m
    if disc % p == 0:
        return "ramified"
    roots = sum(1 for x in range(p) if poly(x) % p == 0)
    return "split" if roots == 2 else "inert"


__all__ = [
    "all_subgroups_by_subsets",
    "hilbert_by_search",
    "naive_closure",
    "naive_is_abelian",
    "naive_is_normal",
    "naive_jordan",
    "root_valuations_quadratic",
    "splits_by_root_count",
    "two_generated_subgroups",
]
