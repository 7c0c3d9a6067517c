"""Exact verification toolkit for sets of rational functions over Q that
together represent every rational number over almost all completions Q_p.

The heart is a decision procedure for "t0 is a value of f over Q_p" that
never leaves exact arithmetic, plus prime scans built on it, ramification
bookkeeping for the branch data the scans depend on, and brute-force
permutation group certificates (covering-by-conjugates checks) for the
named example sets in the catalog.
"""

from __future__ import annotations

from .exact import (
    INF,
    Poly,
    QQ,
    RatFunc,
    poly_from_ints,
    ratfunc_eval,
    ratfunc_from_ints,
    ratfunc_make,
)
from .padic import (
    BadPrimeSet,
    PadicDecision,
    bad_primes,
    is_kp_value,
    qp_root_exists,
    zp_root_exists,
)
from .primes import is_prime, primes_up_to
from .ramification import (
    GENERIC_ALGEBRAIC,
    BranchData,
    critical_values,
    disc_square_class,
    galois_closure_genus,
    multiplicity_partition,
    quadratic_companion,
    quadratic_resolvent,
    rh_verify,
    verify_branch_cycle_tuple,
)
from .permgroup import (
    CapExceeded,
    CoverReport,
    GroupSpec,
    MarkedAction,
    branch_cycle_constraint,
    coset_action,
    fixed_point_free_elements,
    generate,
    minimal_covering_check,
    normal_covering_check,
    union_coset_action,
    wreath_product,
)
from .verify import (
    AggregateScan,
    MinimalityReport,
    ScanReport,
    assemble_report,
    certify_with_group,
    check_locally_representing,
    check_minimality,
    default_t0_samples,
    group_consistency,
    sample_cycle_types,
)
from .catalog import CatalogEntry, entry, entry_names, entry_verify
from .cli import format_ratfunc, parse_ratfunc

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Poly",
    "QQ",
    "RatFunc",
    "poly_from_ints",
    "ratfunc_eval",
    "ratfunc_from_ints",
    "ratfunc_make",
    "BadPrimeSet",
    "PadicDecision",
    "bad_primes",
    "is_kp_value",
    "qp_root_exists",
    "zp_root_exists",
    "is_prime",
    "primes_up_to",
    "GENERIC_ALGEBRAIC",
    "BranchData",
    "critical_values",
    "disc_square_class",
    "galois_closure_genus",
    "multiplicity_partition",
    "quadratic_companion",
    "quadratic_resolvent",
    "rh_verify",
    "verify_branch_cycle_tuple",
    "CapExceeded",
    "CoverReport",
    "GroupSpec",
    "MarkedAction",
    "branch_cycle_constraint",
    "coset_action",
    "fixed_point_free_elements",
    "generate",
    "minimal_covering_check",
    "normal_covering_check",
    "union_coset_action",
    "wreath_product",
    "AggregateScan",
    "MinimalityReport",
    "ScanReport",
    "assemble_report",
    "certify_with_group",
    "check_locally_representing",
    "check_minimality",
    "default_t0_samples",
    "group_consistency",
    "sample_cycle_types",
    "CatalogEntry",
    "entry",
    "entry_names",
    "entry_verify",
    "format_ratfunc",
    "parse_ratfunc",
    "__version__",
]
