"""Cocycle-level data of Galois-twisted graded categories Vec_L^omega.

A category is stored as its extension datum plus a normalized associator
3-cocycle; monoidal equivalence, Deligne products, inflation and Morita
triviality all reduce to cocycle arithmetic here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from . import linalg
from .algebras import LAlgebra, SemilinearMap, teichmuller_cocycle
from .cohomology import (Cochain, CocycleError, Verdict, cohomologous, express_as_coboundary,
                         inflate, is_cocycle, normalize_cocycle, zero_cochain)
from .extensions import ExtensionTower, GaloisExtensionDatum
from .fields import FieldElement


class CategoryError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GradingError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TwistedGradedCategory:
    extension: GaloisExtensionDatum
    omega: Cochain
    inflated_from: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if self.omega.degree != 3 or self.omega.module != self.extension.coefficients:
            raise CategoryError("associator must be a 3-cochain in the extension's coefficients")
        if not self.omega.is_normalized():
            raise CategoryError("associator is not normalized")

    def __eq__(self, other):
        return (isinstance(other, TwistedGradedCategory) and self.extension == other.extension
                and self.omega == other.omega)

    def __hash__(self):
        return hash((self.extension, self.omega))


def make_category(ext: GaloisExtensionDatum, omega: Cochain) -> TwistedGradedCategory:
    """Validate the pentagon (cocycle) condition and normalize the associator."""
    if omega.degree != 3 or omega.module != ext.coefficients:
        raise CategoryError("associator must be a 3-cochain in the extension's coefficients")
    v = is_cocycle(omega)
    if not v:
        raise CategoryError(f"associator is not a cocycle; pentagon fails at {v.witness}", v.witness)
    normalized, _ = normalize_cocycle(omega)
    return TwistedGradedCategory(ext, normalized)


def trivial_category(ext: GaloisExtensionDatum) -> TwistedGradedCategory:
    """The datum of L-Bim_K (omega = 1)."""
    return TwistedGradedCategory(ext, zero_cochain(ext.coefficients, 3))


def pentagon_check(ext: GaloisExtensionDatum, omega: Cochain) -> Verdict:
    """Evaluate the associator pentagon directly in L^x:

        w(ab,c,d)·w(a,b,cd) == w(a,b,c)·w(a,bc,d)·a(w(b,c,d))

    for every quadruple; the witness is the first failing (a,b,c,d).
    """
    G = ext.group
    q = G.order
    mul = G.table
    field_vals = {}
    for t, v in omega.items():
        if v not in field_vals:
            field_vals[v] = ext.to_field(v)
    w = {t: field_vals[v] for t, v in omega.items()}
    twisted = {}
    products = {}

    def times(x: FieldElement, y: FieldElement) -> FieldElement:
        key = (x, y)
        out = products.get(key)
        if out is None:
            out = products[key] = x * y
        return out

    for a, b, c, d in product(range(q), repeat=4):
        ab, bc, cd = mul[a][b], mul[b][c], mul[c][d]
        key = (a, w[b, c, d])
        tw = twisted.get(key)
        if tw is None:
            tw = twisted[key] = ext.auts[a](w[b, c, d])
        lhs = times(w[ab, c, d], w[a, b, cd])
        rhs = times(times(w[a, b, c], w[a, bc, d]), tw)
        if lhs != rhs:
            return Verdict(False, (a, b, c, d))
    return Verdict(True)


def category_pentagon(cat: TwistedGradedCategory) -> Verdict:
    return pentagon_check(cat.extension, cat.omega)


# -- bimodules and gradings


@dataclass(frozen=True, eq=False)
class BimoduleDatum:
    """L as a left module over itself with a right action; ``right_action``
    gives the K-matrix of right multiplication by the generator of L."""

    extension: GaloisExtensionDatum
    right_action: tuple

    def __post_init__(self):
        L = self.extension.field
        K = L.base_field()
        R = tuple(tuple(c if isinstance(c, FieldElement) else K.scalar(c) for c in row)
                  for row in self.right_action)
        object.__setattr__(self, "right_action", R)
        Lx = [[K.scalar(c) for c in row] for row in L.gen.multiplication_matrix()]
        if linalg.mat_mul(R, Lx, K.zero) != linalg.mat_mul(Lx, R, K.zero):
            raise CategoryError("right action does not commute with the left action")


def twisted_bimodule(ext: GaloisExtensionDatum, g: int) -> BimoduleDatum:
    """L_g: the right action of l is left multiplication by g(l)."""
    K = ext.field.base_field()
    img = ext.auts[g](ext.field.gen)
    return BimoduleDatum(ext, tuple(tuple(K.scalar(c) for c in row)
                                    for row in img.multiplication_matrix()))


def grading_of(b: BimoduleDatum) -> int:
    """The unique g with right action by l equal to left multiplication by g(l)."""
    ext = b.extension
    K = ext.field.base_field()
    for g in ext.group.elements():
        img = ext.auts[g](ext.field.gen)
        target = tuple(tuple(K.scalar(c) for c in row) for row in img.multiplication_matrix())
        if target == b.right_action:
            return g
    raise GradingError("right action is not twisted by any Galois automorphism")


# -- products, equivalences, inflation


def deligne_diagonal(c1: TwistedGradedCategory, c2: TwistedGradedCategory) -> TwistedGradedCategory:
    """Diagonal summand of the Deligne product: associator omega1·omega2."""
    if c1.extension != c2.extension:
        raise CategoryError("Deligne product needs categories over the same extension")
    return make_category(c1.extension, c1.omega + c2.omega)


def inverse_category(c: TwistedGradedCategory) -> TwistedGradedCategory:
    return make_category(c.extension, -c.omega)


def product_simple_label(G, f: int, g: int, h: int, i: int, j: int, k: int):
    """X_{f,g,h} (x) X_{i,j,k} = delta_{h=i} X_{f,gj,k}; None stands for the zero object."""
    if h != i:
        return None
    return (f, G.mul(g, j), k)


def monoidally_equivalent(c1: TwistedGradedCategory, c2: TwistedGradedCategory) -> Cochain | None:
    """Tensorator witness tau (J_{a,b} = tau(a,b)·id) or None."""
    if c1.extension != c2.extension:
        raise CategoryError("categories over different extensions")
    return cohomologous(c1.omega, c2.omega)


def categorical_inflate(cat: TwistedGradedCategory, tower: ExtensionTower) -> TwistedGradedCategory:
    """Vec_E^omega -> Vec_F^{infl omega} along E ⊂ F. The result is Morita
    equivalent to the input; that fact is only recorded, not verified."""
    if tower.lower != cat.extension:
        raise CategoryError("tower does not start at the category's extension")
    omega = inflate(tower.morphism, cat.omega)
    return TwistedGradedCategory(tower.upper, omega,
                                 inflated_from=cat.inflated_from + (cat.extension,))


@dataclass(frozen=True)
class MoritaReport:
    """``trivial`` is True or None (inconclusive); never False."""

    trivial: bool | None
    level: int | None = None
    witness: Cochain | None = None
    category: TwistedGradedCategory | None = None

    @property
    def status(self) -> str:
        return "trivial" if self.trivial else "inconclusive"


def morita_trivial(cat: TwistedGradedCategory, probes: Sequence[ExtensionTower] = ()) -> MoritaReport:
    """Look for a level where the associator becomes a coboundary.

    Level 0 is the category's own extension; level i >= 1 is the i-th probe.
    Failing every probe gives an inconclusive report.
    """
    for p in probes:
        if p.lower != cat.extension:
            raise CategoryError("probe tower does not start at the category's extension")
    tau = express_as_coboundary(cat.omega)
    if tau is not None:
        return MoritaReport(True, 0, tau, cat)
    for i, p in enumerate(probes, start=1):
        up = categorical_inflate(cat, p)
        tau = express_as_coboundary(up.omega, check=False)
        if tau is not None:
            return MoritaReport(True, i, tau, up)
    return MoritaReport(None)


def teichmuller_to_category(A: LAlgebra, lifts: Sequence[SemilinearMap],
                            ext: GaloisExtensionDatum | None = None) -> TwistedGradedCategory:
    """D-Bim_K in cocycle form: the category with associator T(D)."""
    from .algebras import default_extension

    ext = default_extension(A.field) if ext is None else ext
    return make_category(ext, teichmuller_cocycle(A, lifts, ext))


__all__ = [
    "BimoduleDatum", "CategoryError", "GradingError", "MoritaReport", "TwistedGradedCategory",
    "categorical_inflate", "category_pentagon", "deligne_diagonal", "grading_of",
    "inverse_category", "make_category", "monoidally_equivalent", "morita_trivial",
    "pentagon_check", "product_simple_label", "teichmuller_to_category", "trivial_category",
    "twisted_bimodule", "CocycleError",
]
