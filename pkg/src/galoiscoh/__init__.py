"""Exact Galois cohomology, crossed products and Galois-twisted graded
categories over small finite and cyclotomic fields."""

from .abelian import (Cokernel, ConsistencyError, FgAbelianGroup, SmithForm, Subquotient,
                      cokernel_structure, integer_kernel, smith_form, smith_normal_form,
                      solve_modular, subquotient_structure)
from .algebras import (AlgebraError, CrossedProduct, LAlgebra, NotCentralSimpleError,
                       SemilinearMap, algebra_product, brauer_twist, center_basis, crossed_product,
                       diagonal_isomorphism_check, entrywise_lift, inner_automorphism, is_simple,
                       make_algebra, matrix_algebra, matrix_to_vector, perturb_lift,
                       skolem_noether, split_product,
                       teichmuller_cocycle, teichmuller_data)
from .categories import (BimoduleDatum, CategoryError, GradingError, MoritaReport,
                         TwistedGradedCategory, categorical_inflate, deligne_diagonal, grading_of,
                         inverse_category, make_category, monoidally_equivalent, morita_trivial,
                         pentagon_check, product_simple_label, teichmuller_to_category,
                         trivial_category, twisted_bimodule)
from .cohomology import (Cochain, CocycleError, CohomologyGroup, ResourceLimitError, Verdict,
                         checked_inflate, coboundary, cochain_from_dict, cochain_from_flat,
                         cochain_from_function, cohomologous, compute_cohomology,
                         express_as_coboundary, inflate, is_cocycle, normalize_cocycle,
                         zero_cochain)
from .extensions import (ExtensionError, ExtensionTower, GaloisExtensionDatum, UnitEmbedding,
                         cyclotomic_extension, cyclotomic_tower, finite_extension,
                         finite_field_tower, identity_tower, make_tower)
from .fields import (FieldAut, FieldElement, FieldSpec, apply_aut, cyclotomic_field, finite_field,
                     galois_group, primitive_element, rationals, units_dictionary, units_table)
from .gmodules import (GModule, ModuleError, MorphismError, TwModMorphism, identity_morphism,
                       make_finite_field_torsion, make_finite_field_units, make_module,
                       make_roots_of_unity, make_trivial_module, validate_twmorphism)
from .groups import (FiniteGroup, GroupAxiomError, GroupHom, HomomorphismError, direct_product,
                     make_cyclic, make_hom, units_group, validate_hom)

__version__ = "0.1.0"
