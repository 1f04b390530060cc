"""Modules over finite groups and morphisms of (group, module) pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import FgAbelianGroup
from .groups import FiniteGroup, GroupHom, make_cyclic, units_group, validate_hom


class ModuleError(ValueError):
    pass


class MorphismError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


Matrix = tuple[tuple[int, ...], ...]


def _freeze(M) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in M)


@dataclass(frozen=True)
class GModule:
    """An abelian group with a G-action; ``action[g]`` acts on coordinate columns."""

    group: FiniteGroup
    underlying: FgAbelianGroup
    action: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(_freeze(A) for A in self.action))
        r = self.underlying.rank
        if len(self.action) != self.group.order:
            raise ModuleError(f"need {self.group.order} action matrices, got {len(self.action)}")
        for g, A in enumerate(self.action):
            if len(A) != r or any(len(row) != r for row in A):
                raise ModuleError(f"action matrix of {g} is not {r}x{r}")
        # each matrix must be a well-defined endomorphism of the quotient
        fs = self.underlying.invariant_factors
        for g, A in enumerate(self.action):
            for j, dj in enumerate(fs):
                for i, di in enumerate(fs):
                    if di and (dj * A[i][j]) % di:
                        raise ModuleError(f"action of {g} is not well defined on generator {j}")
        basis = [self.basis_vector(j) for j in range(r)]
        for j, e in enumerate(basis):
            if self.act(0, e) != e:
                raise ModuleError("identity does not act trivially")
        G = self.group
        for g in G.elements():
            for h in G.elements():
                gh = G.table[g][h]
                for e in basis:
                    if self.act(g, self.act(h, e)) != self.act(gh, e):
                        raise ModuleError(f"action is not multiplicative at {(g, h)}")
        # invertibility follows from the group law: act(g^-1) inverts act(g)

    @property
    def rank(self) -> int:
        return self.underlying.rank

    @property
    def factors(self) -> tuple[int, ...]:
        return self.underlying.invariant_factors

    def basis_vector(self, j: int) -> tuple[int, ...]:
        return self.underlying.reduce([int(i == j) for i in range(self.rank)])

    def zero(self) -> tuple[int, ...]:
        return self.underlying.zero()

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.underlying.reduce(v)

    def act(self, g: int, v: Sequence[int]) -> tuple[int, ...]:
        A = self.action[g]
        return self.underlying.reduce([sum(a * x for a, x in zip(row, v)) for row in A])

    def add(self, u, v):
        return self.underlying.reduce([a + b for a, b in zip(u, v)])

    def neg(self, v):
        return self.underlying.reduce([-a for a in v])

    def scale(self, k: int, v):
        return self.underlying.reduce([k * a for a in v])

    def elements(self):
        return self.underlying.elements()

    def fixed_submodule_order(self) -> int:
        return sum(1 for v in self.elements()
                   if all(self.act(g, v) == v for g in self.group.elements()))


def make_module(group: FiniteGroup, factors: Sequence[int],
                generator_actions: dict[int, Sequence[Sequence[int]]]) -> GModule:
    """Build a module from the action of some group elements; the rest of the
    action is filled in by closing under products."""
    A = FgAbelianGroup(tuple(factors))
    r = A.rank
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))

    def reduce_mat(M):
        return tuple(tuple(x % d if d else x for x in row) for row, d in zip(M, A.invariant_factors))

    def mul(M, N):
        return reduce_mat([[sum(M[i][k] * N[k][j] for k in range(r)) for j in range(r)]
                           for i in range(r)])

    known = {0: ident}
    for g, M in generator_actions.items():
        M = reduce_mat(_freeze(M))
        if g in known and known[g] != M:
            raise ModuleError(f"conflicting action for element {g}")
        known[g] = M
    frontier = list(known)
    gens = dict(known)
    while frontier:
        nxt = []
        for a in frontier:
            for b, Mb in gens.items():
                c = group.table[a][b]
                Mc = mul(known[a], Mb)
                if c in known:
                    if known[c] != Mc:
                        raise ModuleError(f"action is not multiplicative at {(a, b)}")
                else:
                    known[c] = Mc
                    nxt.append(c)
        frontier = nxt
    if len(known) != group.order:
        raise ModuleError("given actions do not generate the group")
    return GModule(group, A, tuple(known[g] for g in group.elements()))


def make_trivial_module(group: FiniteGroup, A: FgAbelianGroup | Sequence[int]) -> GModule:
    if not isinstance(A, FgAbelianGroup):
        A = FgAbelianGroup(tuple(A))
    r = A.rank
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    return GModule(group, A, (ident,) * group.order)


def _cyclic_coeffs(modulus: int) -> FgAbelianGroup:
    return FgAbelianGroup((modulus,) if modulus != 1 else ())


def _scalar_module(group: FiniteGroup, modulus: int, multipliers: Sequence[int]) -> GModule:
    A = _cyclic_coeffs(modulus)
    if A.is_trivial:
        return GModule(group, A, ((),) * group.order)
    return GModule(group, A, tuple(((k % modulus,),) for k in multipliers))


def make_finite_field_units(p: int, n: int):
    """F_{p^n}^x as a module over Gal(F_{p^n}/F_p) = Z/n.

    Coordinate k stands for alpha^k with alpha the least primitive element;
    Frobenius^j acts by multiplication by p^j. Returns (module, units table).
    """
    from .fields import finite_field, units_table

    spec = finite_field(p, n)
    q1 = p ** n - 1
    module = _scalar_module(make_cyclic(n), q1, [pow(p, j, q1) if q1 > 1 else 0 for j in range(n)])
    return module, units_table(spec)


def make_finite_field_torsion(p: int, n: int, m: int) -> GModule:
    """The m-torsion of F_{p^n}^x (m | p^n - 1) as a Gal(F_{p^n}/F_p)-module."""
    from .fields import is_prime

    if not is_prime(p):
        raise ModuleError(f"{p} is not prime")
    if m < 1 or (p ** n - 1) % m:
        raise ModuleError(f"{m} does not divide {p ** n - 1}")
    return _scalar_module(make_cyclic(n), m, [pow(p, j, m) if m > 1 else 0 for j in range(n)])


def make_roots_of_unity(conductor: int, subgroup_order: int) -> GModule:
    """mu_m inside Q(zeta_n) as a module over (Z/n)^x (class k acts by k)."""
    n, m = conductor, subgroup_order
    if n < 1 or m < 1 or n % m:
        raise ModuleError(f"mu_{m} is not contained in Q(zeta_{n})")
    G, res = units_group(n)
    return _scalar_module(G, m, res)


@dataclass(frozen=True)
class TwModMorphism:
    """(G, A) -> (H, B): a group map f: H -> G and phi: A -> B with
    phi(f(h)·a) = h·phi(a)."""

    source: GModule
    target: GModule
    group_map: GroupHom
    module_map: Matrix

    def __post_init__(self):
        object.__setattr__(self, "module_map", _freeze(self.module_map))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce([sum(a * x for a, x in zip(row, v)) for row in self.module_map])

    def then(self, other: TwModMorphism) -> TwModMorphism:
        """Composite (self first, then other): (G,A) -> (H,B) -> (J,C)."""
        if other.source != self.target:
            raise MorphismError("cannot compose: intermediate pairs differ")
        f = self.group_map.compose(other.group_map)
        phi = [[sum(other.module_map[i][k] * self.module_map[k][j]
                    for k in range(self.target.rank))
                for j in range(self.source.rank)]
               for i in range(other.target.rank)]
        return TwModMorphism(self.source, other.target, f, phi)


def identity_morphism(M: GModule) -> TwModMorphism:
    from .groups import GroupHom

    r = M.rank
    return TwModMorphism(M, M, GroupHom(M.group, M.group, tuple(M.group.elements())),
                         tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))


def validate_twmorphism(m: TwModMorphism) -> TwModMorphism:
    """Check shapes, that phi is a well-defined homomorphism, and the twisted
    compatibility on every (h, generator) pair."""
    f = m.group_map
    if f.source != m.target.group or f.target != m.source.group:
        raise MorphismError("group map must go from the target's group to the source's group")
    validate_hom(f)
    phi = m.module_map
    A, B = m.source, m.target
    if len(phi) != B.rank or any(len(row) != A.rank for row in phi):
        raise MorphismError(f"module map must be {B.rank}x{A.rank}")
    for j, dj in enumerate(A.factors):
        if dj and B.scale(dj, m.apply(A.basis_vector(j))) != B.zero():
            raise MorphismError(
                f"module map is not well defined: {dj} * phi(e_{j}) != 0", witness=("relation", j))
    for h in B.group.elements():
        for j in range(A.rank):
            e = A.basis_vector(j)
            lhs = m.apply(A.act(f(h), e))
            rhs = B.act(h, m.apply(e))
            if lhs != rhs:
                raise MorphismError(
                    f"compatibility fails at h={h}, generator {j}: {lhs} != {rhs}", witness=(h, j))
    return m
