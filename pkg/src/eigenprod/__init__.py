"""Verification toolkit for Eisenstein product identities over real
quadratic fields.

The package is organized bottom-up:

    exact       integer and rational arithmetic (Bernoulli numbers,
                Kronecker characters, special L-values)
    interval    certified real arithmetic and comparison decisions
    quadfield   class numbers, narrow class numbers, unit norms
    hmf_coeffs  Fourier coefficients of Eisenstein series and their
                products
    fixtures    audited external facts consumed by the verifier
    report      serializable run reports and the golden baseline
    verifier    the section-by-section verification routines
    cli         command line entry point
"""

from .exact import (
    KroneckerCharacter,
    bernoulli,
    dedekind_zeta_neg,
    dirichlet_l_neg,
    generalized_bernoulli,
    is_fundamental_discriminant,
    kronecker,
    riemann_zeta_neg,
    zagier_zeta_minus_one,
)
from .interval import (
    PI,
    Abs,
    CertifiedReal,
    Decision,
    Exp,
    GammaInt,
    Log,
    Outcome,
    Pow,
    Rat,
    Sqrt,
    Zeta,
    certified_compare,
    enclose_exp,
    enclose_log,
    enclose_pi,
    enclose_sqrt,
    enclose_zeta,
    evaluate_with_escalation,
    gamma_integer,
)
from .quadfield import (
    FieldDescriptor,
    Splitting,
    class_number_imaginary,
    field_descriptor,
    fundamental_unit_norm,
    narrow_class_number,
    narrow_one_fields,
    ramare_bound,
    splitting_of_two,
)
from .hmf_coeffs import (
    EisensteinDescriptor,
    IdealFactorization,
    PrimeClass,
    SqrtFiveIdentityReport,
    TotallyPositiveElement,
    coeff_bound_check,
    coefficient,
    cusp_dim_lower_bound,
    eisenstein_coeff,
    enumerate_totally_nonneg,
    factor_ideal,
    hecke_recurrence_check,
    ideal_from_prime_powers,
    ideals_of_norm,
    product_coefficient,
    verify_sqrt5_identity,
)
from .fixtures import (
    Fixture,
    Fixtures,
    MissingFixtureError,
    ishikawa_zero_dim_fields,
    magma_weight_range,
    takeuchi_constants,
    voight_min_disc,
)
from .report import (
    CandidateRecord,
    CheckRecord,
    VerificationReport,
    compare_to_golden,
    golden_tables,
    resolve_verdict,
)
from .verifier import (
    c_equal,
    c_equal_expr,
    c_unequal,
    c_unequal_expr,
    exact_identity_scan,
    inert_one_fields,
    noninert_one_fields,
    residual_inert,
    residual_noninert,
    residual_unequal,
    verify_section3_equal,
    verify_section3_unequal,
    verify_section4_inert,
    verify_section4_noninert,
    verify_section5,
)

__version__ = "0.1.0"

__all__ = [
    "KroneckerCharacter",
    "bernoulli",
    "dedekind_zeta_neg",
    "dirichlet_l_neg",
    "generalized_bernoulli",
    "is_fundamental_discriminant",
    "kronecker",
    "riemann_zeta_neg",
    "zagier_zeta_minus_one",
    "PI",
    "Abs",
    "CertifiedReal",
    "Decision",
    "Exp",
    "GammaInt",
    "Log",
    "Outcome",
    "Pow",
    "Rat",
    "Sqrt",
    "Zeta",
    "certified_compare",
    "enclose_exp",
    "enclose_log",
    "enclose_pi",
    "enclose_sqrt",
    "enclose_zeta",
    "evaluate_with_escalation",
    "gamma_integer",
    "FieldDescriptor",
    "Splitting",
    "class_number_imaginary",
    "field_descriptor",
    "fundamental_unit_norm",
    "narrow_class_number",
    "narrow_one_fields",
    "ramare_bound",
    "splitting_of_two",
    "EisensteinDescriptor",
    "IdealFactorization",
    "PrimeClass",
    "SqrtFiveIdentityReport",
    "TotallyPositiveElement",
    "coeff_bound_check",
    "coefficient",
    "cusp_dim_lower_bound",
    "eisenstein_coeff",
    "enumerate_totally_nonneg",
    "factor_ideal",
    "hecke_recurrence_check",
    "ideal_from_prime_powers",
    "ideals_of_norm",
    "product_coefficient",
    "verify_sqrt5_identity",
    "Fixture",
    "Fixtures",
    "MissingFixtureError",
    "ishikawa_zero_dim_fields",
    "magma_weight_range",
    "takeuchi_constants",
    "voight_min_disc",
    "CandidateRecord",
    "CheckRecord",
    "VerificationReport",
    "compare_to_golden",
    "golden_tables",
    "resolve_verdict",
    "c_equal",
    "c_equal_expr",
    "c_unequal",
    "c_unequal_expr",
    "exact_identity_scan",
    "inert_one_fields",
    "noninert_one_fields",
    "residual_inert",
    "residual_noninert",
    "residual_unequal",
    "verify_section3_equal",
    "verify_section3_unequal",
    "verify_section4_inert",
    "verify_section4_noninert",
    "verify_section5",
    "__version__",
]
