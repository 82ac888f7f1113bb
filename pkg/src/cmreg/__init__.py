"""Exact computation of Castelnuovo-Mumford regularity over prime fields.

The package computes minimal graded free resolutions of finitely presented
graded modules over F_p[x_1..x_v] (optionally modulo a homogeneous ideal),
derives regularity, Betti tables, Hilbert data and friends, and certifies a
family of closed-form regularity bounds against the computed values.
"""

from cmreg.bounds import (
    degree_cap,
    dim1_module_fitt,
    dim1_module_sym,
    dim1_ring_fitt,
    dim1_ring_sym,
    ideal_bounds,
    main_bound,
    multiplicity_bound_binomial,
    multiplicity_bound_series,
    multiplicity_bound_sum,
    refined_bracket_bound,
    refined_exact_bound,
    sym_main_bound,
    uniform_dim1_bound,
)
from cmreg.complexes import ComplexTerm, complex_regularity_bound, complex_terms
from cmreg.core import (
    AlgebraError,
    EmptyColumn,
    GradedPresentation,
    GradedRing,
    NonHomogeneous,
    NonPrime,
    ParseError,
    Polynomial,
    PrimeField,
    RingMismatch,
    ZeroModule,
    validate_presentation,
)
from cmreg.invariants import (
    HilbertData,
    ModuleInvariants,
    betti_numbers,
    hilbert_data,
    hilbert_numerator,
    minimal_resolution,
    module_invariants,
    regularity,
    ring_invariants,
)
from cmreg.modops import (
    H0Profile,
    colon_kernel,
    fitting_ideal_0,
    h0_profile,
    minimal_presentation,
    quotient_by_linear,
    sym_power,
)
from cmreg.verify import (
    BoundReport,
    SectionReport,
    TowerReport,
    audit,
    audit_random,
    mayr_meyer,
    random_complete_intersection,
    random_module,
    section_check,
    tower_check,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BoundReport",
    "ComplexTerm",
    "EmptyColumn",
    "GradedPresentation",
    "GradedRing",
    "H0Profile",
    "HilbertData",
    "ModuleInvariants",
    "NonHomogeneous",
    "NonPrime",
    "ParseError",
    "Polynomial",
    "PrimeField",
    "RingMismatch",
    "SectionReport",
    "TowerReport",
    "ZeroModule",
    "audit",
    "audit_random",
    "betti_numbers",
    "colon_kernel",
    "complex_regularity_bound",
    "complex_terms",
    "degree_cap",
    "dim1_module_fitt",
    "dim1_module_sym",
    "dim1_ring_fitt",
    "dim1_ring_sym",
    "fitting_ideal_0",
    "h0_profile",
    "hilbert_data",
    "hilbert_numerator",
    "ideal_bounds",
    "main_bound",
    "mayr_meyer",
    "minimal_presentation",
    "minimal_resolution",
    "module_invariants",
    "multiplicity_bound_binomial",
    "multiplicity_bound_series",
    "multiplicity_bound_sum",
    "quotient_by_linear",
    "random_complete_intersection",
    "random_module",
    "refined_bracket_bound",
    "refined_exact_bound",
    "regularity",
    "ring_invariants",
    "section_check",
    "sym_main_bound",
    "sym_power",
    "tower_check",
    "uniform_dim1_bound",
    "validate_presentation",
]
