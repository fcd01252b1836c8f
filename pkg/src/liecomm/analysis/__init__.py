from .census import CensusEntry, census, iter_tables, stem_profile
from .degree import DegreeReport, Method, breadth, comm_degree, degree
from .isoclinism import (
    DEFAULT_BUDGET,
    IsoclinismWitness,
    invariant_dims,
    search_isoclinism,
    verify_isoclinism,
)
from .theorems import (
    FIVE_EIGHTHS,
    Check,
    all_passed,
    bound_lower,
    bound_upper_centerless,
    bound_upper_general,
    check_bounds,
    check_gap,
    check_quotient_monotonicity,
    check_quotient_product,
    check_subalgebra_sandwich,
)

__all__ = [
    "CensusEntry",
    "Check",
    "DEFAULT_BUDGET",
    "DegreeReport",
    "FIVE_EIGHTHS",
    "IsoclinismWitness",
    "Method",
    "all_passed",
    "bound_lower",
    "bound_upper_centerless",
    "bound_upper_general",
    "breadth",
    "census",
    "check_bounds",
    "check_gap",
    "check_quotient_monotonicity",
    "check_quotient_product",
    "check_subalgebra_sandwich",
    "comm_degree",
    "degree",
    "invariant_dims",
    "iter_tables",
    "search_isoclinism",
    "stem_profile",
    "verify_isoclinism",
]
