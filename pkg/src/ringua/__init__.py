"""ringua: finite rings and one-sided ideals, sublanguage grammars with the
right-ideal absorption check, Yale sparse matrices, operator-precedence
parsing, and Hasse / unit-square visual output.

Everything is exhaustive and exact: rings are Cayley tables, subsets are
bitmasks, sparse values are rationals, and every structural claim is decided
by enumeration. The hot scan loops run on a compiled kernel when available
(see ringua.kernels.BACKEND) with a pure-Python fallback.
"""

from .errors import AxiomError, BudgetError, FormatError, QuotientError, RinguaError
from .ideals import (
    DEFAULT_ENUM_BUDGET,
    FamilyReport,
    IdealClassification,
    IdealFlags,
    PrimeGenerators,
    check_ako_family,
    check_oka_family,
    classify_subset,
    cohen_check,
    enumerate_one_sided_ideals,
    generated_ideal,
    ideal_arithmetic,
    ideal_list_json,
    longest_ideal_chain,
    maximal_and_prime,
    principal_ideal,
    principal_ideal_family,
)
from .kernels import BACKEND
from .modules import (
    GroupSpec,
    ModuleSpec,
    QuotientModule,
    ideal_as_module,
    module_from_json,
    quotient_right_module,
    regular_module,
    verify_module_axioms,
)
from .rings import (
    AxiomCheck,
    AxiomReport,
    RingSpec,
    load_ring,
    make_boolean_ring,
    make_cyclic_ring,
    make_matrix_ring,
    make_triangular_ring,
    members_to_mask,
    multiplication_illdefined_witness,
    opposite_ring,
    parse_ring_json,
    quotient_ring,
    subset_members,
    verify_ring_axioms,
)

__version__ = "0.1.0"
