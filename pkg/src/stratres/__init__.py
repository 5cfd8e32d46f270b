"""Exact-arithmetic toolkit for intersection data of highly connected
even-dimensional manifolds and resolution rules for stratified spaces with
isolated singularities."""

from .decider import (
    ElementaryVerdict,
    LagrangianWitness,
    SymplecticBasis,
    arf_invariant,
    brute_force_lagrangian,
    characteristic_element,
    decide_elementary,
    hyperbolic_basis_symmetric,
    symplectic_basis_skew,
    verify_witness,
    witness_case2,
    witness_case3,
)
from .groups import (
    INTEGERS,
    ORDER_TWO,
    ORDER_TWO_SQUARED,
    TRIVIAL,
    CoefficientGroup,
)
from .intlinalg import (
    BilinearForm,
    FormType,
    IntMatrix,
    Signature,
    determinant,
    form_type,
    invariant_factors,
    primitive_reduce,
    signature,
    smith_normal_form,
    solve_dual,
)
from .resolution import (
    ClassificationReport,
    LinkDescriptor,
    NeighborhoodDescriptor,
    ResolutionVerdict,
    check_optimal_resolution,
    check_resolution_exists,
    check_s1_quotient,
    classify_resolutions,
    classify_resolutions_dim4,
)
from .surgery import SurgeryStep, SurgeryTrace, reduce_to_sphere, surgery_step
from .triples import (
    HOMOLOGY_SPHERE,
    IntersectionTriple,
    QuadraticData,
    SubgroupIndex,
    direct_sum,
    eval_form,
    eval_nu,
    glue_along_homology_sphere,
    index_of,
    pi_bo,
    stable_so,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
