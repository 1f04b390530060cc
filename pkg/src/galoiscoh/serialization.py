"""JSON readers and writers for every object the CLI exchanges.

Readers raise :class:`SchemaError` on malformed documents; writers emit
plain dicts/lists that the matching reader accepts.
"""

from __future__ import annotations

from fractions import Fraction

from .abelian import FgAbelianGroup
from .algebras import (LAlgebra, SemilinearMap, crossed_product, entrywise_lift,
                       inner_automorphism, matrix_algebra)
from .categories import TwistedGradedCategory, make_category
from .cohomology import Cochain, cochain_from_dict
from .extensions import (ExtensionTower, GaloisExtensionDatum, cyclotomic_extension,
                         cyclotomic_tower, finite_extension, finite_field_tower, make_tower)
from .fields import FieldElement, FieldSpec, cyclotomic_field, finite_field
from .gmodules import (GModule, TwModMorphism, make_finite_field_torsion, make_finite_field_units,
                       make_module, make_roots_of_unity, make_trivial_module,
                       validate_twmorphism)
from .groups import FiniteGroup, GroupHom, make_cyclic, units_group


class SchemaError(ValueError):
    pass


def _require(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(f"missing key {key!r}")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"key {key!r} has the wrong type")
    return val


def _int(x, what="integer"):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"expected an {what}, got {x!r}")
    return x


# -- groups


def read_group(doc) -> FiniteGroup:
    kind = _require(doc, "kind", str)
    if kind == "cyclic":
        return make_cyclic(_int(_require(doc, "n")))
    if kind == "table":
        return FiniteGroup(tuple(tuple(_int(x) for x in row) for row in _require(doc, "table", list)))
    if kind == "units":
        return units_group(_int(_require(doc, "n")))[0]
    raise SchemaError(f"unknown group kind {kind!r}")


def write_group(G: FiniteGroup) -> dict:
    return {"kind": "table", "table": [list(r) for r in G.table]}


# -- modules


def read_module(doc) -> GModule:
    if not isinstance(doc, dict):
        raise SchemaError("module must be an object")
    kind = doc.get("kind")
    if kind == "ff_units":
        p, n = _int(_require(doc, "p")), _int(_require(doc, "n"))
        if "m" in doc and doc["m"] != p ** n - 1:
            return make_finite_field_torsion(p, n, _int(doc["m"]))
        return make_finite_field_units(p, n)[0]
    if kind == "roots_of_unity":
        return make_roots_of_unity(_int(_require(doc, "conductor")), _int(_require(doc, "m")))
    group = read_group(_require(doc, "group"))
    factors = [_int(d) for d in _require(doc, "invariant_factors", list)]
    if kind == "trivial":
        return make_trivial_module(group, factors)
    action = doc.get("action", {})
    if not isinstance(action, dict):
        raise SchemaError("action must map element indices to matrices")
    try:
        acts = {int(k): v for k, v in action.items()}
    except ValueError as exc:
        raise SchemaError(f"bad action key: {exc}") from exc
    if not acts and group.order > 1 and factors:
        raise SchemaError("non-trivial group needs an action (or kind 'trivial')")
    if not acts:
        return make_trivial_module(group, factors)
    return make_module(group, factors, acts)


def write_module(M: GModule) -> dict:
    return {"group": write_group(M.group),
            "invariant_factors": list(M.factors),
            "action": {str(g): [list(r) for r in M.action[g]] for g in M.group.elements() if g}}


# -- cochains


def read_cochain(doc, module: GModule) -> Cochain:
    n = _int(_require(doc, "degree"))
    values = _require(doc, "values", dict)
    parsed = {}
    for key, v in values.items():
        t = tuple(int(x) for x in key.split(",")) if key != "" else ()
        if isinstance(v, int):
            v = [v]
        parsed[t] = tuple(_int(x) for x in v)
    return cochain_from_dict(module, n, parsed)


def write_cochain(c: Cochain) -> dict:
    zero = c.module.zero()
    return {"degree": c.degree,
            "values": {",".join(map(str, t)): list(v) for t, v in c.items() if v != zero}}


# -- fields


def read_field(doc) -> FieldSpec:
    kind = _require(doc, "kind", str)
    if kind == "finite":
        return finite_field(_int(_require(doc, "p")), _int(doc.get("n", 1)))
    if kind == "cyclotomic":
        return cyclotomic_field(_int(_require(doc, "conductor")))
    raise SchemaError(f"unknown field kind {kind!r}")


def read_element(F: FieldSpec, doc) -> FieldElement:
    if isinstance(doc, (int, str)):
        doc = [doc]
    if not isinstance(doc, list):
        raise SchemaError("field elements are coefficient arrays")
    return F.element([Fraction(c) if isinstance(c, str) else _int(c) for c in doc])


# -- extensions, categories, towers


def read_extension(doc) -> GaloisExtensionDatum:
    F = read_field(_require(doc, "field"))
    coeffs = doc.get("coefficients")
    if F.is_finite:
        m = None
        if coeffs is not None:
            if coeffs.get("kind") != "ff_units" or coeffs.get("p") != F.p or coeffs.get("n") != F.n:
                raise SchemaError("finite-field coefficients must be {'kind': 'ff_units'} for the same field")
            m = coeffs.get("m")
        return finite_extension(F.p, F.n, m)
    m = None
    if coeffs is not None:
        if coeffs.get("kind") != "roots_of_unity" or coeffs.get("conductor") != F.conductor:
            raise SchemaError("cyclotomic coefficients must be {'kind': 'roots_of_unity'} for the same conductor")
        m = _int(_require(coeffs, "m"))
    return cyclotomic_extension(F.conductor, m)


def write_extension(ext: GaloisExtensionDatum) -> dict:
    return {"field": ext.field.to_json(), "coefficients": ext.embedding.to_json()}


def read_category(doc) -> TwistedGradedCategory:
    ext = read_extension(_require(doc, "extension"))
    omega = read_cochain(_require(doc, "omega"), ext.coefficients)
    return make_category(ext, omega)


def read_raw_category(doc):
    """Extension and associator without validation (for pentagon checks)."""
    ext = read_extension(_require(doc, "extension"))
    return ext, read_cochain(_require(doc, "omega"), ext.coefficients)


def write_category(cat: TwistedGradedCategory) -> dict:
    return {"extension": write_extension(cat.extension), "omega": write_cochain(cat.omega)}


def read_tower(doc) -> ExtensionTower:
    kind = doc.get("kind")
    if kind == "ff_tower":
        return finite_field_tower(_int(_require(doc, "p")), _int(_require(doc, "n")),
                                  _int(_require(doc, "N")), doc.get("m"), doc.get("M"))
    if kind == "cyclotomic_tower":
        n, N = _int(_require(doc, "n")), _int(_require(doc, "N"))
        return cyclotomic_tower(n, _int(doc.get("m", n)), N, _int(doc.get("M", N)))
    lower = read_extension(_require(doc, "lower"))
    upper = read_extension(_require(doc, "upper"))
    f = GroupHom(upper.group, lower.group, tuple(_int(x) for x in _require(doc, "group_map", list)))
    phi = _require(doc, "module_map", list)
    y = read_element(upper.field, doc["generator_image"]) if "generator_image" in doc else None
    return make_tower(lower, upper, TwModMorphism(lower.coefficients, upper.coefficients, f, phi), y)


def write_tower(t: ExtensionTower) -> dict:
    return {"lower": write_extension(t.lower), "upper": write_extension(t.upper),
            "group_map": list(t.morphism.group_map.images),
            "module_map": [list(r) for r in t.morphism.module_map],
            "generator_image": t.generator_image.to_json()}


def read_morphism(doc) -> TwModMorphism:
    """A bare TwModMorphism, or the morphism inside a tower document."""
    if "source" in doc:
        src = read_module(_require(doc, "source"))
        tgt = read_module(_require(doc, "target"))
        f = GroupHom(tgt.group, src.group, tuple(_int(x) for x in _require(doc, "group_map", list)))
        return validate_twmorphism(TwModMorphism(src, tgt, f, _require(doc, "module_map", list)))
    return read_tower(doc).morphism


def write_morphism(m: TwModMorphism) -> dict:
    return {"source": write_module(m.source), "target": write_module(m.target),
            "group_map": list(m.group_map.images),
            "module_map": [list(r) for r in m.module_map]}


# -- algebras


def read_algebra(doc):
    """Returns (algebra, extension or None, crossed product or None)."""
    kind = doc.get("kind")
    if kind == "crossed":
        ext = read_extension(_require(doc, "extension"))
        beta = read_cochain(_require(doc, "beta"), ext.coefficients)
        cp = crossed_product(ext, beta)
        return cp.algebra, ext, cp
    F = read_field(_require(doc, "field"))
    if kind == "matrix":
        return matrix_algebra(F, _int(_require(doc, "n"))), None, None
    m = _int(_require(doc, "dim"))
    sc = _require(doc, "sc", list)
    try:
        sc = tuple(tuple(tuple(read_element(F, c) for c in v) for v in row) for row in sc)
    except TypeError as exc:
        raise SchemaError(f"bad structure constants: {exc}") from exc
    unit = tuple(read_element(F, c) for c in _require(doc, "unit", list))
    return LAlgebra(F, m, sc, unit).validate(), None, None


def write_algebra(A: LAlgebra) -> dict:
    return A.to_json()


def read_lifts(doc, A: LAlgebra, ext: GaloisExtensionDatum) -> list[SemilinearMap]:
    """Each lift is {"element": g, "matrix": [[...]] (default identity),
    "conjugate_by": [...] (optional)}; ordered by group element."""
    if not isinstance(doc, list):
        raise SchemaError("lifts must be a list")
    lifts = {}
    for item in doc:
        g = _int(_require(item, "element"))
        if not 0 <= g < ext.group.order:
            raise SchemaError(f"group element {g} out of range")
        if "matrix" in item:
            M = [[read_element(A.field, c) for c in row] for row in item["matrix"]]
            lift = SemilinearMap(A, M, ext.auts[g])
        else:
            lift = entrywise_lift(A, ext.auts[g])
        if "conjugate_by" in item:
            u = [read_element(A.field, c) for c in item["conjugate_by"]]
            lift = inner_automorphism(A, u).compose(lift)
        lifts[g] = lift
    if sorted(lifts) != list(range(ext.group.order)):
        raise SchemaError("need exactly one lift per group element")
    return [lifts[g] for g in range(ext.group.order)]


def write_group_structure(G: FgAbelianGroup) -> list[int]:
    return list(G.invariant_factors)
