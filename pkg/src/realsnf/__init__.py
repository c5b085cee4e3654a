"""Exact Smith Normal Forms and real-spectrum positivity.

Supported rings: the rational integers, univariate rational polynomials, and
the norm-Euclidean real quadratic integer rings.  All arithmetic is exact;
there is no floating point anywhere in the decision paths.
"""

from ._kernels import BACKEND as kernel_backend
from .matrices import (
    Matrix,
    MinorGcdProfile,
    SnfResult,
    determinant,
    minor_gcd_profile,
    smith_normal_form,
    verify_snf,
)
from .polynomials import (
    RatPoly,
    SturmChain,
    count_real_roots,
    is_nonneg_on_reals,
    is_real_irreducible,
    squarefree_decomposition,
    sturm_chain,
)
from .quadratic import (
    FundamentalUnit,
    QuadElem,
    SignPattern,
    achievable_sign_patterns,
    fundamental_unit,
    pnri_holds,
)
from .rings import (
    DivResult,
    are_associated,
    euclidean_div,
    gcd,
    valuation,
)
from .ringspec import (
    INTEGERS,
    RATIONAL_POLYNOMIALS,
    RingFamily,
    RingSpec,
    parse_ring,
    quadratic_ring,
)
from .spectrum import PsdReport, element_is_nonneg, is_psd_on_spectrum, psd_exact_ordered
from .verify import (
    Conclusion,
    CounterexampleRecipe,
    SplitMix64,
    TheoremReport,
    TrialConfig,
    build_counterexample,
    builtin_counterexample_recipe,
    check_valuation_lemma,
    random_psd_matrix,
    run_property_suite,
    verify_field_identity,
    verify_main_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Conclusion",
    "CounterexampleRecipe",
    "DivResult",
    "FundamentalUnit",
    "INTEGERS",
    "Matrix",
    "MinorGcdProfile",
    "PsdReport",
    "QuadElem",
    "RATIONAL_POLYNOMIALS",
    "RatPoly",
    "RingFamily",
    "RingSpec",
    "SignPattern",
    "SnfResult",
    "SplitMix64",
    "SturmChain",
    "TheoremReport",
    "TrialConfig",
    "achievable_sign_patterns",
    "are_associated",
    "build_counterexample",
    "builtin_counterexample_recipe",
    "check_valuation_lemma",
    "count_real_roots",
    "determinant",
    "element_is_nonneg",
    "euclidean_div",
    "fundamental_unit",
    "gcd",
    "is_nonneg_on_reals",
    "is_psd_on_spectrum",
    "is_real_irreducible",
    "kernel_backend",
    "minor_gcd_profile",
    "parse_ring",
    "pnri_holds",
    "psd_exact_ordered",
    "quadratic_ring",
    "random_psd_matrix",
    "run_property_suite",
    "smith_normal_form",
    "squarefree_decomposition",
    "sturm_chain",
    "valuation",
    "verify_field_identity",
    "verify_main_theorem",
    "verify_snf",
]
