"""Exact-arithmetic construction and verification of generalized vector
cross products: the canonical 3D and 7D products, the full identity suite
with falsification certificates, the dimension obstruction, and the
derivation of the 7D product from octonion commutators."""

from .cayley_dickson import (
    CDElement,
    HurwitzReport,
    SignedPermutation,
    cd_mul,
    cd_norm_sq,
    commutator_cross,
    conjugate,
    count_verified_pairs,
    derived_table,
    find_iso,
    hurwitz_boundary_check,
)
from .falsify import (
    FalsificationCertificate,
    SWEEP_DIMENSIONS,
    epsilon_embedding_table,
    falsification_sweep,
)
from .identities import (
    Eq6Counterexample,
    IDENTITY_IDS,
    IdentityReport,
    ObstructionReport,
    TernaryTensor,
    basis_sum_eq7,
    basis_sum_eq8,
    basis_sum_eq9,
    basis_sum_eq10,
    basis_sum_eq13,
    check_axioms,
    check_eq5,
    check_eq12,
    check_eq15,
    find_eq6_counterexample,
    g_tensor,
    obstruction_report,
    run_suite,
    ternary,
)
from .rationals import Rational, as_rational, format_rational, parse_rational
from .tables import (
    CROSS7_COMPONENTS,
    ProductTable,
    TableFormatError,
    canonical_table,
    cross,
    dump_table,
    load_table,
    make_table,
    structure_constant,
    table_from_json_dict,
    table_to_json_dict,
)
from .vectors import (
    Vector,
    axpy,
    basis,
    dot,
    norm_sq,
    vector_from_json,
    vector_to_strings,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "CDElement",
    "CROSS7_COMPONENTS",
    "Eq6Counterexample",
    "FalsificationCertificate",
    "HurwitzReport",
    "IDENTITY_IDS",
    "IdentityReport",
    "ObstructionReport",
    "ProductTable",
    "Rational",
    "SWEEP_DIMENSIONS",
    "SignedPermutation",
    "TableFormatError",
    "TernaryTensor",
    "Vector",
    "as_rational",
    "axpy",
    "basis",
    "basis_sum_eq7",
    "basis_sum_eq8",
    "basis_sum_eq9",
    "basis_sum_eq10",
    "basis_sum_eq13",
    "canonical_table",
    "cd_mul",
    "cd_norm_sq",
    "check_axioms",
    "check_eq5",
    "check_eq12",
    "check_eq15",
    "commutator_cross",
    "conjugate",
    "count_verified_pairs",
    "cross",
    "derived_table",
    "dot",
    "dump_table",
    "epsilon_embedding_table",
    "falsification_sweep",
    "find_eq6_counterexample",
    "find_iso",
    "format_rational",
    "g_tensor",
    "hurwitz_boundary_check",
    "load_table",
    "make_table",
    "norm_sq",
    "obstruction_report",
    "parse_rational",
    "run_suite",
    "structure_constant",
    "table_from_json_dict",
    "table_to_json_dict",
    "ternary",
    "vector_from_json",
    "vector_to_strings",
    "zero",
]
