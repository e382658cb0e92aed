"""Exact verification of binary-ternary Hom-algebra identities over structure constants."""

from .algebra import (
    Algebra,
    algebras_equal,
    cyclic_rotation,
    eval_binary,
    eval_ternary,
    from_products,
    is_multiplicative,
    random_algebra,
)
from .constructions import (
    commutator_product,
    eq41_algebra,
    hom_associator,
    j_alpha,
    lie_to_ly,
    probe_homly_from_hommalcev,
    prop24_triple,
    ternary_33,
    ternary_41,
    twist_ly,
    twist_malcev,
    yau_twist,
)
from .errors import (
    DimensionMismatchError,
    DocumentError,
    HomlyError,
    MalformedScalarError,
    PreconditionError,
    SuiteInapplicableError,
    TooManyCandidatesError,
    UnknownSuiteError,
)
from .exact import (
    LinearMap,
    format_rational,
    map_apply,
    map_compose,
    map_power,
    maps_commute,
    parse_rational,
    rat_canonical,
)
from .io import emit_algebra, emit_report, parse_algebra, parse_map
from .morphisms import (
    CandidateSet,
    diagonal_candidates,
    filter_endomorphisms,
    is_endomorphism,
    permutation_candidates,
    scalar_candidates,
)
from .report import AxiomVerdict, CheckReport, Counterexample
from .suites import (
    SUITE_IDS,
    check_eq44,
    check_eq45,
    check_hom_akivis,
    check_hom_jacobi,
    check_hom_lie_triple,
    check_hom_ly,
    check_hom_malcev,
    check_hom_nambu,
    check_hom_triple,
    check_ly,
    check_multiplicativity,
    run_suite,
)

__version__ = "0.1.0"
