"""Galois extensions with a coefficient module embedded in L^x, and towers
of such extensions (the data needed to inflate along E ⊂ L)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .fields import (FieldAut, FieldElement, FieldSpec, cyclotomic_field, finite_field,
                     galois_group, units_table)
from .gmodules import (GModule, MorphismError, TwModMorphism, make_finite_field_units,
                       make_finite_field_torsion, make_roots_of_unity,
                       validate_twmorphism)
from .groups import FiniteGroup, GroupHom


class ExtensionError(ValueError):
    pass


@dataclass(frozen=True)
class UnitEmbedding:
    """Injective hom from a cyclic coefficient module into L^x.

    ``kind`` is "ff_units" (coordinate k -> alpha^(k·(q-1)/m), the m-torsion
    of F_q^x; m = q - 1 is the full unit group) or "roots_of_unity"
    (coordinate k -> zeta_N^(k·N/m)).
    """

    field: FieldSpec
    kind: str
    m: int

    def to_field(self, v: Sequence[int]) -> FieldElement:
        k = v[0] if v else 0
        if self.kind == "ff_units":
            return units_table(self.field).exp(k * ((self.field.size - 1) // self.m))
        N = self.field.conductor
        return self.field.zeta_power(k * N // self.m)

    @cached_property
    def _logs(self) -> dict:
        if self.kind == "ff_units":
            return None
        return {self.to_field((k,) if self.m > 1 else ()): k for k in range(self.m)}

    def from_field(self, a: FieldElement) -> tuple[int, ...]:
        if self.kind == "ff_units":
            k, rem = divmod(units_table(self.field).log(a), (self.field.size - 1) // self.m)
            if rem:
                raise ValueError(f"{a!r} is not an {self.m}-torsion unit")
        else:
            try:
                k = self._logs[a]
            except KeyError:
                raise ValueError(f"{a!r} is not an {self.m}-th root of unity") from None
        return (k,) if self.m > 1 else ()

    def to_json(self) -> dict:
        if self.kind == "ff_units":
            out = {"kind": "ff_units", "p": self.field.p, "n": self.field.n}
            if self.m != self.field.size - 1:
                out["m"] = self.m
            return out
        return {"kind": "roots_of_unity", "conductor": self.field.conductor, "m": self.m}


@dataclass(frozen=True, eq=False)
class GaloisExtensionDatum:
    field: FieldSpec
    group: FiniteGroup
    auts: tuple[FieldAut, ...]
    coefficients: GModule
    embedding: UnitEmbedding

    def __post_init__(self):
        if self.coefficients.group != self.group:
            raise ExtensionError("coefficient module is over a different group")
        emb = self.embedding
        for j in range(self.coefficients.rank):
            e = self.coefficients.basis_vector(j)
            for g in self.group.elements():
                if emb.to_field(self.coefficients.act(g, e)) != self.auts[g](emb.to_field(e)):
                    raise ExtensionError(f"coefficient action of {g} disagrees with the Galois action")

    def __eq__(self, other):
        return (isinstance(other, GaloisExtensionDatum) and self.field == other.field
                and self.coefficients == other.coefficients and self.embedding == other.embedding)

    def __hash__(self):
        return hash((self.field, self.coefficients, self.embedding))

    def to_field(self, v) -> FieldElement:
        return self.embedding.to_field(v)

    def from_field(self, a: FieldElement) -> tuple[int, ...]:
        return self.embedding.from_field(a)

    def __repr__(self):
        return f"GaloisExtensionDatum({self.field}, coefficients {self.coefficients.underlying})"


def finite_extension(p: int, n: int, m: int | None = None) -> GaloisExtensionDatum:
    """F_{p^n}/F_p with coefficients the full unit group, or its m-torsion."""
    spec = finite_field(p, n)
    G, auts = galois_group(spec)
    q1 = p ** n - 1
    if m is None or m == q1:
        module, _ = make_finite_field_units(p, n)
        m = q1
    else:
        module = make_finite_field_torsion(p, n, m)
    return GaloisExtensionDatum(spec, G, auts, module, UnitEmbedding(spec, "ff_units", m))


def cyclotomic_extension(conductor: int, m: int | None = None) -> GaloisExtensionDatum:
    """Q(zeta_N)/Q with coefficients mu_m (default m = N)."""
    m = conductor if m is None else m
    spec = cyclotomic_field(conductor)
    G, auts = galois_group(spec)
    module = make_roots_of_unity(conductor, m)
    return GaloisExtensionDatum(spec, G, auts, module, UnitEmbedding(spec, "roots_of_unity", m))


def extension_from_embedding(emb: UnitEmbedding) -> GaloisExtensionDatum:
    if emb.kind == "ff_units":
        return finite_extension(emb.field.p, emb.field.n, emb.m)
    return cyclotomic_extension(emb.field.conductor, emb.m)


def _evaluate(a: FieldElement, y: FieldElement) -> FieldElement:
    """Image of a under the field map sending the generator to y."""
    return _eval_poly(a.coeffs, y)


def _eval_poly(coeffs, y: FieldElement) -> FieldElement:
    out = y.spec.zero
    power = y.spec.one
    for c in coeffs:
        if c:
            out = out + power * y.spec.scalar(c)
        power = power * y
    return out


@dataclass(frozen=True, eq=False)
class ExtensionTower:
    """E ⊂ F with the morphism (Gal(E), A) -> (Gal(F), B) used for inflation.

    ``generator_image`` is where the field embedding sends E's power-basis
    generator.
    """

    lower: GaloisExtensionDatum
    upper: GaloisExtensionDatum
    morphism: TwModMorphism
    generator_image: FieldElement

    def embed(self, a: FieldElement) -> FieldElement:
        return _evaluate(a, self.generator_image)

    def then(self, other: ExtensionTower) -> ExtensionTower:
        if other.lower != self.upper:
            raise ExtensionError("towers do not chain")
        return ExtensionTower(self.lower, other.upper, self.morphism.then(other.morphism),
                              other.embed(self.generator_image))


def _tower_problems(lower, upper, morphism, y) -> str | None:
    E, F = lower.field, upper.field
    if y.spec != F:
        return "generator image is not in the upper field"
    if _eval_poly(E.modulus, y):
        return "generator image is not a root of the lower modulus"
    f = morphism.group_map
    x = E.gen
    for h in upper.group.elements():
        if upper.auts[h](y) != _evaluate(lower.auts[f(h)](x), y):
            return f"field embedding is not Galois-equivariant at {h}"
    A = lower.coefficients
    for j in range(A.rank):
        e = A.basis_vector(j)
        if _evaluate(lower.to_field(e), y) != upper.to_field(morphism.apply(e)):
            return f"module map disagrees with the field embedding on generator {j}"
    return None


def make_tower(lower: GaloisExtensionDatum, upper: GaloisExtensionDatum,
               morphism: TwModMorphism, generator_image: FieldElement | None = None) -> ExtensionTower:
    """Validate a tower; without a generator image, search for a compatible one."""
    if morphism.source != lower.coefficients or morphism.target != upper.coefficients:
        raise ExtensionError("morphism does not connect the two coefficient modules")
    try:
        validate_twmorphism(morphism)
    except MorphismError as exc:
        raise ExtensionError(f"invalid tower morphism: {exc}") from exc
    if generator_image is not None:
        problem = _tower_problems(lower, upper, morphism, generator_image)
        if problem:
            raise ExtensionError(problem)
        return ExtensionTower(lower, upper, morphism, generator_image)
    F = upper.field
    if F.is_finite:
        candidates = F.elements()
    else:
        candidates = [F.zeta_power(k) for k in range(F.conductor)] + [F.one, -F.one]
    last = "no candidate generator image"
    for y in candidates:
        problem = _tower_problems(lower, upper, morphism, y)
        if problem is None:
            return ExtensionTower(lower, upper, morphism, y)
        last = problem
    raise ExtensionError(f"incompatible tower: {last}")


def finite_field_tower(p: int, n: int, N: int, m: int | None = None,
                       M: int | None = None) -> ExtensionTower:
    """F_{p^n} ⊂ F_{p^N}: restriction Z/N -> Z/n and the induced map on units.

    ``m``/``M`` select torsion subgroups of the two unit groups (default: all).
    """
    if N % n:
        raise ExtensionError(f"F_{p}^{n} is not a subfield of F_{p}^{N}")
    lower, upper = finite_extension(p, n, m), finite_extension(p, N, M)
    E, F = lower.field, upper.field
    big = units_table(F)
    roots = [y for y in F.elements() if not _eval_poly(E.modulus, y)]
    y = min(roots, key=lambda r: big.log(r) if r else -1)
    f = GroupHom(upper.group, lower.group, tuple(k % n for k in range(N)))
    A, B = lower.coefficients, upper.coefficients
    if A.rank and B.rank:
        image = upper.from_field(_evaluate(lower.to_field(A.basis_vector(0)), y))
        phi = ((image[0],),)
    else:
        phi = tuple(tuple(0 for _ in range(A.rank)) for _ in range(B.rank))
    return make_tower(lower, upper, TwModMorphism(A, B, f, phi), y)


def cyclotomic_tower(n: int, m: int, N: int, M: int) -> ExtensionTower:
    """Q(zeta_n) ⊂ Q(zeta_N) with mu_m -> mu_M."""
    if N % n or M % m:
        raise ExtensionError("conductors or root-of-unity orders do not divide")
    lower, upper = cyclotomic_extension(n, m), cyclotomic_extension(N, M)
    F = upper.field
    y = F.zeta_power(N // n)
    upper_res = [a.k for a in upper.auts]
    lower_pos = {a.k % n if n > 2 else 1: i for i, a in enumerate(lower.auts)}
    f = GroupHom(upper.group, lower.group,
                 tuple(lower_pos[k % n if n > 2 else 1] for k in upper_res))
    A, B = lower.coefficients, upper.coefficients
    phi = tuple(tuple(M // m for _ in range(A.rank)) for _ in range(B.rank))
    return make_tower(lower, upper, TwModMorphism(A, B, f, phi), y)


def identity_tower(ext: GaloisExtensionDatum) -> ExtensionTower:
    from .gmodules import identity_morphism

    return make_tower(ext, ext, identity_morphism(ext.coefficients), ext.field.gen)
