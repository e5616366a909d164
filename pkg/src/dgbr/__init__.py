"""Exact-arithmetic toolkit for finite-dimensional differential graded algebras.

Everything is computed over the rationals or a prime field with no floating
point anywhere: graded tensor products and opposites with the sign rule,
Hom-complexes and endomorphism dg-algebras, good gradings on matrix algebras
with inner differentials, acyclicity and kernel-semisimplicity checks, and
machine-verified isomorphism and equivalence witnesses.
"""

from .brauer import (
    IdempotentChoice,
    IsoChecks,
    IsoWitness,
    KunnethReport,
    StructureRealization,
    UngradedDescriptor,
    forget_descriptor,
    idempotent_containment,
    is_central_simple,
    kunneth_check,
    lambda_map,
    quaternion_algebra,
    rho_map,
    sandwich_iso,
    sandwich_map,
    structure_realize,
    verify_dg_iso,
    verify_equivalence,
)
from .dg import (
    ContractingElement,
    DgAlgebra,
    DgModule,
    KComplex,
    KernelAlgebra,
    SemisimplicityReport,
    TgrReport,
    center,
    contracting_element,
    homology,
    is_semisimple_ungraded,
    is_tgr_semisimple,
    kernel_subalgebra,
    ksign,
    opposite,
    swap_iso,
    swap_map,
    tensor_product,
    trivial_dg,
    regrade_trivial,
    unsigned_swap_map,
    validate_module,
)
from .errors import (
    AxiomViolation,
    ContainmentCertificate,
    DgError,
    FieldMismatch,
    NoSuitableIdempotent,
    NotCentralSimple,
    ParseError,
    ShapeMismatch,
    ValidationError,
)
from .fields import GF, QQ, field_from_description
from .formats import (
    algebra_from_obj,
    algebra_to_obj,
    complex_from_obj,
    complex_to_obj,
    map_from_obj,
    map_to_obj,
    parse_algebra_text,
    parse_complex_text,
    serialize_algebra,
    serialize_complex,
    serialize_map,
)
from .graded import GradedVector, GradedVectorSpace, HomogeneousMap, LinearMap
from .homs import HomComplex, end_dg_algebra, hom_complex, hom_of_complexes
from .linalg import Matrix
from .matrix_algebras import (
    GoodGrading,
    enumerate_good_gradings,
    good_grading_matrix_algebra,
    inner_differential,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "ContainmentCertificate",
    "ContractingElement",
    "DgAlgebra",
    "DgError",
    "DgModule",
    "FieldMismatch",
    "GF",
    "GoodGrading",
    "GradedVector",
    "GradedVectorSpace",
    "HomComplex",
    "HomogeneousMap",
    "IdempotentChoice",
    "IsoChecks",
    "IsoWitness",
    "KComplex",
    "KernelAlgebra",
    "KunnethReport",
    "LinearMap",
    "Matrix",
    "NoSuitableIdempotent",
    "NotCentralSimple",
    "ParseError",
    "QQ",
    "SemisimplicityReport",
    "ShapeMismatch",
    "StructureRealization",
    "TgrReport",
    "UngradedDescriptor",
    "ValidationError",
    "algebra_from_obj",
    "algebra_to_obj",
    "center",
    "complex_from_obj",
    "complex_to_obj",
    "contracting_element",
    "end_dg_algebra",
    "enumerate_good_gradings",
    "field_from_description",
    "forget_descriptor",
    "good_grading_matrix_algebra",
    "hom_complex",
    "hom_of_complexes",
    "homology",
    "idempotent_containment",
    "inner_differential",
    "is_central_simple",
    "is_semisimple_ungraded",
    "is_tgr_semisimple",
    "kernel_subalgebra",
    "ksign",
    "kunneth_check",
    "lambda_map",
    "map_from_obj",
    "map_to_obj",
    "opposite",
    "parse_algebra_text",
    "parse_complex_text",
    "quaternion_algebra",
    "regrade_trivial",
    "rho_map",
    "sandwich_iso",
    "sandwich_map",
    "serialize_algebra",
    "serialize_complex",
    "serialize_map",
    "structure_realize",
    "swap_iso",
    "swap_map",
    "tensor_product",
    "trivial_dg",
    "unsigned_swap_map",
    "validate_module",
    "verify_dg_iso",
    "verify_equivalence",
]
