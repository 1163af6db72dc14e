"""Exact polynomial composition algebra and the polynomial moment problem.

The public API is re-exported here; see the submodules for details.
"""

from .decomposition import (
    DecompPair,
    ReducedTuple,
    all_right_factors,
    common_right_component,
    inner_quotient,
    left_quotient,
    normalize_inner,
    reduce_coprime,
    right_factor,
)
from .errors import (
    ClassificationError,
    ConsistencyError,
    ConsistencyWarning,
    DenominatorMismatchError,
    EndpointError,
    HypothesisError,
    InvalidDegreeError,
    NotInvertibleError,
    NotReducibleError,
    ParseError,
    ParseWarning,
    PolyMomentError,
)
from .linalg import express_in_composition_span, solve_linear
from .moments import (
    Endpoints,
    Instance,
    MomentCertificate,
    ReducibleTerm,
    RemarkReport,
    SolutionClass,
    certify_reducible,
    classify_solution,
    find_case4_endpoints,
    gen_case2,
    gen_case3,
    gen_case4,
    merge_reducible,
    moment,
    moments_vanish,
    skun_checks,
    triple_decomposition_chain,
    verify_remark_example,
    verify_solution_class,
)
from .numeric import (
    FieldElement,
    NodeAngle,
    NumberField,
    cos_field,
    field_inverse,
    minpoly_two_cos,
    node_cheb_image,
    node_embed,
    node_relations,
)
from .parser import parse_poly
from .poly import (
    LinearMap,
    Poly,
    X,
    calculus,
    chebyshev,
    compose,
    critical_value_poly,
    eval_at,
    format_poly,
    gcd_and_squarefree,
    poly_gcd,
    resultant,
    squarefree,
)
from .ritt import (
    EquivWitness,
    FactorForm,
    RittForm,
    cheb_equiv,
    lemma_c2_form,
    lemma_c3_form,
    linear_equivalence,
    os1_witness,
    power_equiv,
    ritt2_normal_form,
)
from .serialize import dumps, to_jsonable

__version__ = "0.1.0"
