"""Structure-constant algebras over an exact field, semilinear automorphisms,
crossed products, Skolem-Noether witnesses and the Teichmüller 3-cocycle.

An :class:`LAlgebra` is bilinear over its coordinate field. Algebras over
L (matrix algebras, G-normal algebras) use L itself; crossed products, where
L is not central, are stored over the base field K with basis b_i·u_g.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from . import linalg
from .cohomology import Cochain, is_cocycle
from .extensions import GaloisExtensionDatum, cyclotomic_extension, finite_extension
from .fields import FieldAut, FieldElement, FieldSpec, identity_aut


class AlgebraError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotCentralSimpleError(AlgebraError):
    pass


Vector = tuple[FieldElement, ...]


@dataclass(frozen=True, eq=False)
class LAlgebra:
    field: FieldSpec
    dim: int
    sc: tuple[tuple[Vector, ...], ...] = field(repr=False)
    unit: Vector = field(repr=False)
    name: str = ""

    def __post_init__(self):
        F = self.field
        sc = tuple(tuple(tuple(_coerce(F, c) for c in v) for v in row) for row in self.sc)
        object.__setattr__(self, "sc", sc)
        object.__setattr__(self, "unit", tuple(_coerce(F, c) for c in self.unit))
        m = self.dim
        if len(sc) != m or any(len(row) != m or any(len(v) != m for v in row) for row in sc):
            raise AlgebraError(f"structure constants must be {m}x{m} vectors of length {m}")
        if len(self.unit) != m:
            raise AlgebraError("unit has the wrong length")

    # -- arithmetic
    def vector(self, coords: Sequence) -> Vector:
        return tuple(_coerce(self.field, c) for c in coords)

    def basis(self, i: int) -> Vector:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def zero(self) -> Vector:
        return (self.field.zero,) * self.dim

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        m = self.dim
        acc = [self.field.zero] * m
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.sc[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(row[j]):
                    if s:
                        acc[k] = acc[k] + c * s
        return tuple(acc)

    def add(self, x, y) -> Vector:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y) -> Vector:
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c, x) -> Vector:
        return tuple(c * a for a in x)

    def left_matrix(self, x) -> list[list[FieldElement]]:
        """Matrix of y -> x·y."""
        cols = [self.mul(x, self.basis(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def inverse(self, x) -> Vector:
        F = self.field
        y = linalg.solve(self.left_matrix(x), list(self.unit), F.zero, F.one)
        if y is None or self.mul(y, x) != self.unit:
            raise AlgebraError("element is not invertible")
        return tuple(y)

    def associativity_violation(self):
        for i, j, k in product(range(self.dim), repeat=3):
            ei, ej, ek = self.basis(i), self.basis(j), self.basis(k)
            if self.mul(self.mul(ei, ej), ek) != self.mul(ei, self.mul(ej, ek)):
                return (i, j, k)
        return None

    def unit_violation(self):
        for i in range(self.dim):
            e = self.basis(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                return i
        return None

    def validate(self) -> LAlgebra:
        bad = self.unit_violation()
        if bad is not None:
            raise AlgebraError(f"unit is not a two-sided identity on basis element {bad}", bad)
        bad = self.associativity_violation()
        if bad is not None:
            raise AlgebraError(f"associativity fails on basis triple {bad}", bad)
        return self

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "dim": self.dim,
                "sc": [[[c.to_json() for c in v] for v in row] for row in self.sc],
                "unit": [c.to_json() for c in self.unit]}


def _coerce(F: FieldSpec, c) -> FieldElement:
    if isinstance(c, FieldElement):
        if c.spec != F:
            raise AlgebraError(f"coordinate from {c.spec} in an algebra over {F}")
        return c
    if isinstance(c, (list, tuple)):
        return F.element(c)
    return F.scalar(c)


def algebra_product(A: LAlgebra, x: Sequence, y: Sequence) -> Vector:
    return A.mul(A.vector(x), A.vector(y))


def make_algebra(field: FieldSpec, sc, unit, name: str = "") -> LAlgebra:
    return LAlgebra(field, len(unit), sc, unit, name).validate()


def matrix_algebra(F: FieldSpec, n: int) -> LAlgebra:
    """M_n(F) in the matrix-unit basis E_ij (index i·n + j)."""
    m = n * n
    sc = []
    for a in range(m):
        i, j = divmod(a, n)
        row = []
        for b in range(m):
            k, l = divmod(b, n)
            v = [F.zero] * m
            if j == k:
                v[i * n + l] = F.one
            row.append(tuple(v))
        sc.append(tuple(row))
    unit = tuple(F.one if a // n == a % n else F.zero for a in range(m))
    return LAlgebra(F, m, tuple(sc), unit, name=f"M_{n}({F})").validate()


def split_product(F: FieldSpec, copies: int = 2) -> LAlgebra:
    """F x ... x F with orthogonal idempotent basis."""
    sc = tuple(tuple(tuple(F.one if (i == j == k) else F.zero for k in range(copies))
                     for j in range(copies)) for i in range(copies))
    return LAlgebra(F, copies, sc, (F.one,) * copies, name=f"{F}^{copies}").validate()


def matrix_to_vector(F: FieldSpec, rows: Sequence[Sequence]) -> Vector:
    """Matrix-unit coordinates of a square matrix."""
    return tuple(_coerce(F, c) for row in rows for c in row)


def center_basis(A: LAlgebra) -> list[Vector]:
    """Basis over the coordinate field of {z : z·x = x·z for all x}."""
    F, m = A.field, A.dim
    eqs = []
    for k in range(m):
        for out in range(m):
            eqs.append([A.sc[i][k][out] - A.sc[k][i][out] for i in range(m)])
    return [tuple(v) for v in linalg.nullspace(eqs, m, F.zero, F.one)]


def is_simple(A: LAlgebra) -> bool:
    """Central simplicity over the coordinate field: x (x) y -> (z -> x z y)
    spans all of End(A)."""
    F, m = A.field, A.dim
    rows = []
    for i in range(m):
        ei = A.basis(i)
        for j in range(m):
            ej = A.basis(j)
            rows.append([c for k in range(m) for c in A.mul(A.mul(ei, A.basis(k)), ej)])
    return linalg.rank(rows, F.zero, F.one) == m * m


# -- semilinear maps


@dataclass(frozen=True, eq=False)
class SemilinearMap:
    """T(x) = matrix · twist(x), where twist acts on each coordinate."""

    algebra: LAlgebra
    matrix: tuple[tuple[FieldElement, ...], ...]
    twist: FieldAut

    def __post_init__(self):
        F = self.algebra.field
        object.__setattr__(self, "matrix",
                           tuple(tuple(_coerce(F, c) for c in row) for row in self.matrix))

    def __call__(self, x: Sequence) -> Vector:
        tx = [self.twist(c) for c in x]
        return tuple(linalg.mat_vec(self.matrix, tx, self.algebra.field.zero))

    def compose(self, other: SemilinearMap) -> SemilinearMap:
        """self ∘ other."""
        F = self.algebra.field
        tw = [[self.twist(c) for c in row] for row in other.matrix]
        return SemilinearMap(self.algebra, tuple(map(tuple, linalg.mat_mul(self.matrix, tw, F.zero))),
                             self.twist.compose(other.twist))

    def inverse(self) -> SemilinearMap:
        F = self.algebra.field
        inv_twist = _inverse_aut(self.twist)
        Minv = linalg.inverse(self.matrix, F.zero, F.one)
        return SemilinearMap(self.algebra, tuple(tuple(inv_twist(c) for c in row) for row in Minv),
                             inv_twist)

    def multiplicativity_violation(self):
        A = self.algebra
        if self(A.unit) != A.unit:
            return "unit"
        for i, j in product(range(A.dim), repeat=2):
            ei, ej = A.basis(i), A.basis(j)
            if self(A.mul(ei, ej)) != A.mul(self(ei), self(ej)):
                return (i, j)
        return None

    def validate(self) -> SemilinearMap:
        bad = self.multiplicativity_violation()
        if bad is not None:
            raise AlgebraError(f"map is not an algebra automorphism (fails at {bad})", bad)
        return self


def _inverse_aut(g: FieldAut) -> FieldAut:
    h = g
    while not h.compose(g).is_identity:
        h = h.compose(g)
    return h


def entrywise_lift(A: LAlgebra, g: FieldAut) -> SemilinearMap:
    """Apply g to every coordinate; an automorphism whenever the structure
    constants lie in the fixed field of g."""
    F = A.field
    ident = tuple(tuple(F.one if i == j else F.zero for j in range(A.dim)) for i in range(A.dim))
    return SemilinearMap(A, ident, g).validate()


def inner_automorphism(A: LAlgebra, u: Sequence) -> SemilinearMap:
    """x -> u x u^{-1} as an L-linear map."""
    u = A.vector(u)
    ui = A.inverse(u)
    cols = [A.mul(A.mul(u, A.basis(j)), ui) for j in range(A.dim)]
    M = tuple(tuple(cols[j][i] for j in range(A.dim)) for i in range(A.dim))
    return SemilinearMap(A, M, identity_aut(A.field))


def perturb_lift(lift: SemilinearMap, u: Sequence) -> SemilinearMap:
    """Conjugate-by-u after the lift."""
    return inner_automorphism(lift.algebra, u).compose(lift)


def _unit_projection_index(A: LAlgebra) -> int:
    return next(k for k, c in enumerate(A.unit) if c)


def normalize_witness(A: LAlgebra, r: Sequence) -> Vector:
    """Scale r so that its unit coordinate is 1, or failing that, its first
    nonzero coordinate."""
    k = _unit_projection_index(A)
    p = r[k] / A.unit[k]
    if not p:
        p = next(c for c in r if c)
    inv = A.field.one / p
    return tuple(inv * c for c in r)


def skolem_noether(A: LAlgebra, phi: SemilinearMap | Sequence[Sequence]) -> Vector:
    """Nonzero r with r·x = phi(x)·r for every x, for an L-linear automorphism phi."""
    if not isinstance(phi, SemilinearMap):
        phi = SemilinearMap(A, phi, identity_aut(A.field))
    if not phi.twist.is_identity:
        raise AlgebraError("Skolem-Noether needs an L-linear automorphism")
    phi.validate()
    F, m = A.field, A.dim
    eqs = []
    images = [phi(A.basis(k)) for k in range(m)]
    for k in range(m):
        ek = A.basis(k)
        cols = [A.sub(A.mul(A.basis(i), ek), A.mul(images[k], A.basis(i))) for i in range(m)]
        for out in range(m):
            eqs.append([cols[i][out] for i in range(m)])
    sols = linalg.nullspace(eqs, m, F.zero, F.one)
    if len(sols) != 1:
        raise NotCentralSimpleError(
            f"inner witness space has dimension {len(sols)}, expected 1 (algebra not central simple?)")
    r = normalize_witness(A, sols[0])
    for k in range(m):
        ek = A.basis(k)
        assert A.mul(r, ek) == A.mul(images[k], r)
    return r


def default_extension(F: FieldSpec) -> GaloisExtensionDatum:
    if F.is_finite:
        return finite_extension(F.p, F.n)
    return cyclotomic_extension(F.conductor)


@dataclass(frozen=True, eq=False)
class TeichmullerData:
    cocycle: Cochain
    witnesses: dict = field(repr=False)
    scalars: dict = field(repr=False)


def teichmuller_data(A: LAlgebra, lifts: Sequence[SemilinearMap],
                     ext: GaloisExtensionDatum | None = None) -> TeichmullerData:
    ext = default_extension(A.field) if ext is None else ext
    if ext.field != A.field:
        raise AlgebraError("algebra and extension have different fields")
    G = ext.group
    if len(lifts) != G.order:
        raise AlgebraError(f"need one lift per group element ({G.order}), got {len(lifts)}")
    for g, lift in enumerate(lifts):
        if lift.twist != ext.auts[g]:
            raise AlgebraError(f"lift {g} twists by {lift.twist.k}, expected {ext.auts[g].k}")
        lift.validate()
    inverses = [lift.inverse() for lift in lifts]
    r = {}
    for a, b in product(G.elements(), repeat=2):
        phi = lifts[a].compose(lifts[b]).compose(inverses[G.mul(a, b)])
        if not phi.twist.is_identity:
            raise AlgebraError(f"lift composition defect at {(a, b)} is not L-linear")
        r[a, b] = skolem_noether(A, phi)
    r_inv = {k: A.inverse(v) for k, v in r.items()}
    k0 = _unit_projection_index(A)
    scalars, values = {}, []
    for a, b, c in product(G.elements(), repeat=3):
        ab, bc = G.mul(a, b), G.mul(b, c)
        w = A.mul(A.mul(A.mul(r_inv[ab, c], r_inv[a, b]), lifts[a](r[b, c])), r[a, bc])
        s = w[k0] / A.unit[k0]
        if A.scale(s, A.unit) != w:
            raise AlgebraError(f"Teichmüller value at {(a, b, c)} is not central", (a, b, c))
        scalars[a, b, c] = s
        values.append(ext.from_field(s))
    return TeichmullerData(Cochain(ext.coefficients, 3, tuple(values)), r, scalars)


def teichmuller_cocycle(A: LAlgebra, lifts: Sequence[SemilinearMap],
                        ext: GaloisExtensionDatum | None = None) -> Cochain:
    """omega(a,b,c) = r(ab,c)^-1 r(a,b)^-1 ã(r(b,c)) r(a,bc) as a 3-cochain in
    the extension's coefficient module."""
    return teichmuller_data(A, lifts, ext).cocycle


def brauer_twist(g: FieldAut, A: LAlgebra) -> LAlgebra:
    """Rewrite every structure constant through g^{-1}."""
    gi = _inverse_aut(g)
    sc = tuple(tuple(tuple(gi(c) for c in v) for v in row) for row in A.sc)
    return LAlgebra(A.field, A.dim, sc, tuple(gi(c) for c in A.unit), name=A.name)


# -- crossed products


@dataclass(frozen=True, eq=False)
class CrossedProduct:
    """⊕_g L·u_g with u_g x = g(x) u_g and u_g u_h = beta(g,h) u_gh, stored
    over the base field K with basis index g·[L:K] + i for b_i·u_g."""

    algebra: LAlgebra
    extension: GaloisExtensionDatum
    beta: Cochain

    @property
    def l_dimension(self) -> int:
        return self.extension.group.order

    @property
    def degree(self) -> int:
        return self.extension.field.degree

    def element(self, parts: dict) -> Vector:
        """Vector of sum_g parts[g]·u_g, with parts[g] in L."""
        K = self.algebra.field
        v = [K.zero] * self.algebra.dim
        d = self.degree
        for g, l in parts.items():
            for i, c in enumerate(l.base_coords()):
                v[g * d + i] = c
        return tuple(v)

    def u(self, g: int) -> Vector:
        return self.element({g: self.extension.field.one})

    def embed(self, l: FieldElement) -> Vector:
        """l times the unit of the algebra; the unit is beta(1,1)^-1·u_1."""
        b11 = self.extension.to_field(self.beta(0, 0))
        return self.element({0: l / b11})


def _crossed_product_table(ext: GaloisExtensionDatum, beta: Cochain) -> LAlgebra:
    L = ext.field
    K = L.base_field()
    G = ext.group
    d = L.degree
    m = G.order * d
    powers = [L.element([0] * i + [1]) for i in range(d)]
    bvals = {(g, h): ext.to_field(beta(g, h)) for g in G.elements() for h in G.elements()}
    sc = []
    for a in range(m):
        g, i = divmod(a, d)
        row = []
        for b in range(m):
            h, j = divmod(b, d)
            c = powers[i] * ext.auts[g](powers[j]) * bvals[g, h]
            v = [K.zero] * m
            gh = G.mul(g, h)
            for k, ck in enumerate(c.base_coords()):
                v[gh * d + k] = ck
            row.append(tuple(v))
        sc.append(tuple(row))
    unit = [K.zero] * m
    for k, ck in enumerate((L.one / bvals[0, 0]).base_coords()):
        unit[k] = ck
    return LAlgebra(K, m, tuple(sc), tuple(unit), name=f"crossed product over {L}")


def crossed_product(ext: GaloisExtensionDatum, beta: Cochain) -> CrossedProduct:
    """Crossed-product algebra of a 2-cocycle; non-cocycles are refused with
    the triple where the cocycle identity fails."""
    if beta.degree != 2 or beta.module != ext.coefficients:
        raise AlgebraError("beta must be a 2-cochain in the extension's coefficient module")
    v = is_cocycle(beta)
    if not v:
        raise AlgebraError(f"factor set is not a cocycle (fails at {v.witness})", v.witness)
    A = _crossed_product_table(ext, beta).validate()
    return CrossedProduct(A, ext, beta)


def diagonal_isomorphism_check(ext: GaloisExtensionDatum, beta1: Cochain, beta2: Cochain,
                               tau: Cochain):
    """Check that u_g -> tau(g)·u_g is an algebra isomorphism from the crossed
    product of beta1 onto that of beta2 (beta1 - beta2 = d tau additively).

    Returns a Verdict whose witness is the first failing basis pair.
    """
    from .cohomology import Verdict

    A1 = _crossed_product_table(ext, beta1)
    A2 = _crossed_product_table(ext, beta2)
    L = ext.field
    d = L.degree
    G = ext.group
    K = A1.field
    powers = [L.element([0] * i + [1]) for i in range(d)]
    images = []
    for a in range(A1.dim):
        g, i = divmod(a, d)
        c = powers[i] * ext.to_field(tau(g))
        v = [K.zero] * A2.dim
        for k, ck in enumerate(c.base_coords()):
            v[g * d + k] = ck
        images.append(tuple(v))

    def Phi(x):
        out = A2.zero()
        for xi, img in zip(x, images):
            if xi:
                out = A2.add(out, A2.scale(xi, img))
        return out

    if Phi(A1.unit) != A2.unit:
        return Verdict(False, "unit")
    for a, b in product(range(A1.dim), repeat=2):
        ea, eb = A1.basis(a), A1.basis(b)
        if Phi(A1.mul(ea, eb)) != A2.mul(Phi(ea), Phi(eb)):
            return Verdict(False, (a, b))
    return Verdict(True)
