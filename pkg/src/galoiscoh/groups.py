"""Finite groups as multiplication tables.

Elements are the dense indices ``0..order-1`` and index 0 is always the
identity, so cochain tables can be addressed by flat mixed-radix indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Sequence


class GroupAxiomError(ValueError):
    pass


class HomomorphismError(ValueError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    name: str = ""
    inverse: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise GroupAxiomError("a group needs at least one element")
        for a, row in enumerate(table):
            if len(row) != n or any(not 0 <= x < n for x in row):
                raise GroupAxiomError(f"row {a} is malformed")
        for a in range(n):
            if table[0][a] != a or table[a][0] != a:
                raise GroupAxiomError(f"index 0 is not an identity (fails at {a})")
        inv = []
        for a in range(n):
            cands = [b for b in range(n) if table[a][b] == 0]
            if len(cands) != 1 or table[cands[0]][a] != 0:
                raise GroupAxiomError(f"element {a} has no two-sided inverse")
            inv.append(cands[0])
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise GroupAxiomError(f"associativity fails at {(a, b, c)}")
        object.__setattr__(self, "inverse", tuple(inv))
        object.__setattr__(self, "_hash", hash(table))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return self._hash

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def violations(self) -> list[tuple[int, int]]:
        S, T, f = self.source, self.target, self.images
        return [(a, b) for a in S.elements() for b in S.elements()
                if f[S.table[a][b]] != T.table[f[a]][f[b]]]

    def compose(self, other: GroupHom) -> GroupHom:
        """self ∘ other (apply ``other`` first)."""
        if other.target != self.source:
            raise ValueError("cannot compose: target/source mismatch")
        return GroupHom(other.source, self.target, tuple(self.images[x] for x in other.images))


def validate_hom(f: GroupHom) -> GroupHom:
    """Return ``f`` if it respects multiplication, else raise with the violating pairs."""
    if len(f.images) != f.source.order:
        raise HomomorphismError(f"expected {f.source.order} images, got {len(f.images)}")
    if any(not 0 <= x < f.target.order for x in f.images):
        raise HomomorphismError("image index out of range")
    bad = f.violations()
    if bad:
        raise HomomorphismError(f"not a homomorphism; first violation at {bad[0]}", bad)
    return f


def make_hom(source: FiniteGroup, target: FiniteGroup, images: Sequence[int]) -> GroupHom:
    return validate_hom(GroupHom(source, target, tuple(int(x) for x in images)))


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
                       name=f"Z/{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Componentwise product; the pair (g, h) has index g·|H| + h."""
    m = H.order
    table = tuple(
        tuple(G.table[a // m][b // m] * m + H.table[a % m][b % m]
              for b in range(G.order * m))
        for a in range(G.order * m))
    return FiniteGroup(table, name=f"{G.name or G.order} x {H.name or H.order}")


def projections(G: FiniteGroup, H: FiniteGroup) -> tuple[GroupHom, GroupHom]:
    P = direct_product(G, H)
    m = H.order
    return (GroupHom(P, G, tuple(a // m for a in P.elements())),
            GroupHom(P, H, tuple(a % m for a in P.elements())))


def unit_residues(n: int) -> list[int]:
    """Representatives of (Z/n)^x in increasing order, 1 first."""
    if n <= 2:
        return [1]
    return [k for k in range(1, n) if gcd(k, n) == 1]


def units_group(n: int) -> tuple[FiniteGroup, list[int]]:
    """(Z/n)^x as a table, plus the residue represented by each index."""
    res = unit_residues(n)
    pos = {k: i for i, k in enumerate(res)}
    if n <= 2:
        return FiniteGroup(((0,),), name=f"(Z/{n})^x"), res
    table = tuple(tuple(pos[a * b % n] for b in res) for a in res)
    return FiniteGroup(table, name=f"(Z/{n})^x"), res


def enumerate_tuples(G: FiniteGroup, n: int):
    """All n-tuples of element indices in lexicographic order."""
    if n < 0:
        raise ValueError("tuple length must be non-negative")
    return product(range(G.order), repeat=n)


def tuple_index(t: Sequence[int], order: int) -> int:
    idx = 0
    for x in t:
        idx = idx * order + x
    return idx
