"""Small finite groups as validated multiplication tables.

These are the targets for homomorphism counting.  The built-in catalog
(cyclic groups Z2..Z6, symmetric S3/S4, alternating A4/A5 and dihedral
D4) is big enough to separate the groups that arise in practice while
keeping exhaustive enumeration cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class FiniteGroupTable:
    name: str
    order: int
    product: tuple[tuple[int, ...], ...]
    identity: int = field(init=False, default=0)
    inverse: tuple[int, ...] = field(init=False, default=())
    orders: tuple[int, ...] = field(init=False, default=())

    def __post_init__(self):
        n = self.order
        if n <= 0 or len(self.product) != n or any(len(r) != n for r in self.product):
            raise ValueError(f"{self.name}: bad table shape")
        ident = None
        for e in range(n):
            if all(self.product[e][x] == x == self.product[x][e] for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError(f"{self.name}: no identity element")
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if self.product[x][y] == ident and self.product[y][x] == ident:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise ValueError(f"{self.name}: element {x} has no inverse")
        p = self.product
        for x in range(n):
            for y in range(n):
                xy = p[x][y]
                for z in range(n):
                    if p[xy][z] != p[x][p[y][z]]:
                        raise ValueError(f"{self.name}: not associative")
        object.__setattr__(self, "identity", ident)
        object.__setattr__(self, "inverse", tuple(inv))
        orders = []
        for x in range(n):
            y, k = x, 1
            while y != ident:
                y = p[y][x]
                k += 1
            orders.append(k)
        object.__setattr__(self, "orders", tuple(orders))

    def element_order(self, x: int) -> int:
        return self.orders[x]

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inverse[x], -e
        e %= self.orders[x]
        y = self.identity
        for _ in range(e):
            y = self.product[y][x]
        return y


def _perm_compose(p, q):
    """(p then q): i -> q[p[i]]."""
    return tuple(q[p[i]] for i in range(len(p)))


def _table_from_perms(name, perms):
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[_perm_compose(p, q)] for q in perms) for p in perms
    )
    return FiniteGroupTable(name=name, order=len(perms), product=table)


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _closure(gens):
    elems = {tuple(range(len(gens[0])))}
    frontier = list(elems)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _perm_compose(p, g)
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return elems


def cyclic_group(n: int) -> FiniteGroupTable:
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroupTable(name=f"Z{n}", order=n, product=table)


def symmetric_group(n: int) -> FiniteGroupTable:
    return _table_from_perms(f"S{n}", itertools.permutations(range(n)))


def alternating_group(n: int) -> FiniteGroupTable:
    perms = [p for p in itertools.permutations(range(n)) if _perm_sign(p) == 1]
    return _table_from_perms(f"A{n}", perms)


def dihedral_group_4() -> FiniteGroupTable:
    rotation = (1, 2, 3, 0)
    reflection = (0, 3, 2, 1)
    return _table_from_perms("D4", _closure([rotation, reflection]))


@lru_cache(maxsize=None)
def builtin_targets() -> dict[str, FiniteGroupTable]:
    groups = [cyclic_group(n) for n in range(2, 7)]
    groups += [
        symmetric_group(3),
        symmetric_group(4),
        alternating_group(4),
        alternating_group(5),
        dihedral_group_4(),
    ]
    return {g.name: g for g in groups}


def get_target(name: str) -> FiniteGroupTable:
    table = builtin_targets().get(name.upper().replace("ℤ", "Z"))
    if table is None:
        known = ", ".join(sorted(builtin_targets()))
        raise KeyError(f"unknown target group {name!r}; known: {known}")
    return table
