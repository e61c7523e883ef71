"""Knot invariants from Seifert matrices and braid closures.

Computes Alexander polynomials, signatures, a certified block reduction
exhibiting a trivial-Alexander subform, and two-sided bounds on the
topological slice genus.
"""

from .bounds import GenusBounds, InvariantReport, bounds, report
from .braid import (
    BraidError,
    BraidWord,
    CanonicalSurface,
    burau_alexander,
    canonical_seifert_matrix,
    closure_component_count,
    parse_braid,
)
from .laurent import LaurentMatrix, LaurentPolynomial, laurent_determinant
from .reduction import (
    ReductionCertificate,
    ReductionError,
    certificate_problem,
    check_block_form,
    peel_hyperbolic_pair,
    primitive_kernel_vector,
    reduce_to_block_form,
    symplectic_completion,
)
from .seifert import (
    SeifertMatrix,
    SeifertMatrixError,
    UnimodularTransform,
    alexander,
    alexander_degree,
    apply_congruence,
    integer_determinant,
    signature,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BraidError",
    "BraidWord",
    "CanonicalSurface",
    "GenusBounds",
    "InvariantReport",
    "LaurentMatrix",
    "LaurentPolynomial",
    "ReductionCertificate",
    "ReductionError",
    "SeifertMatrix",
    "SeifertMatrixError",
    "UnimodularTransform",
    "alexander",
    "alexander_degree",
    "apply_congruence",
    "bounds",
    "burau_alexander",
    "canonical_seifert_matrix",
    "certificate_problem",
    "check_block_form",
    "closure_component_count",
    "integer_determinant",
    "laurent_determinant",
    "parse_braid",
    "peel_hyperbolic_pair",
    "primitive_kernel_vector",
    "reduce_to_block_form",
    "report",
    "signature",
    "symplectic_completion",
    "validate",
]
