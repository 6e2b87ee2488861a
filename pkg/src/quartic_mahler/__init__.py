"""Minimal Mahler measures of integral generators of Galois quartic number fields."""

__version__ = "0.1.0"

from .exactfield import (
    AmbientBasis,
    FieldElement,
    IntegerPolynomial,
    basis_for,
    conjugates,
    is_integral,
    is_primitive,
    minimal_polynomial,
    mul,
)
from .fields import (
    IMAGINARY,
    REAL,
    BiquadraticField,
    CyclicQuarticField,
    canonicalize_biquadratic,
    classify_cyclic,
    enumerate_biquadratic,
    enumerate_cyclic,
)
from .measure import (
    BoundSet,
    LiouvilleBound,
    PrecisionContext,
    QuadraticSurd,
    c_k,
    liouville_mu,
    m_prime,
    mahler_measure,
    theoretical_bounds,
    torsion_nontrivial,
)
from .search import (
    MinimizationResult,
    SearchBox,
    brute_force_min,
    min_mahler,
    minimize_over_fields,
    search_box,
)
from .families import (
    FamilySpec,
    SieveReport,
    build_family_instance,
    catalan_A_poly,
    decompose_exponent,
    family_spec,
    squarefree_sieve,
    verify_family_bounds,
)
from .rootsofunity import TorsionGenerator, reproduce_tables, torsion_generator

__all__ = [
    "__version__",
    "AmbientBasis", "FieldElement", "IntegerPolynomial", "basis_for",
    "conjugates", "is_integral", "is_primitive", "minimal_polynomial", "mul",
    "REAL", "IMAGINARY", "BiquadraticField", "CyclicQuarticField",
    "canonicalize_biquadratic", "classify_cyclic",
    "enumerate_biquadratic", "enumerate_cyclic",
    "BoundSet", "LiouvilleBound", "PrecisionContext", "QuadraticSurd",
    "c_k", "liouville_mu", "m_prime", "mahler_measure",
    "theoretical_bounds", "torsion_nontrivial",
    "MinimizationResult", "SearchBox", "brute_force_min", "min_mahler",
    "minimize_over_fields", "search_box",
    "FamilySpec", "SieveReport", "build_family_instance", "catalan_A_poly",
    "decompose_exponent", "family_spec", "squarefree_sieve", "verify_family_bounds",
    "TorsionGenerator", "reproduce_tables", "torsion_generator",
]
