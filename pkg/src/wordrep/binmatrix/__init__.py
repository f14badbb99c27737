"""Binary matrices, circular-ones orders and the circularly compatible ones property."""

from .cco import (CCOResult, check_cco_biorder, check_monotone_circular, dcircular_order,
                  difference_rows, find_monotone_circular_biorder, is_cco, is_cco_forbidden,
                  is_dcircular_order, search_cco_biorder)
from .config import ConfigHit, contains_configuration, find_fcco, find_forbidden, find_mik_star
from .matrix import (BASE_PATTERNS, BinaryMatrix, Biorder, PatternId, add_empty_column,
                     bracelet_orbit, bracelets, canonical_form, circular_endpoints,
                     delete_column, fcco_members, generate_pattern, is_circular_interval,
                     is_linear_interval, mik, row_complement, transpose)
from .ones import (circular_ones_column_complemented, circular_ones_order,
                   consecutive_ones_order, has_circular_ones, has_consecutive_ones)

__all__ = [
    "BASE_PATTERNS", "BinaryMatrix", "Biorder", "CCOResult", "ConfigHit", "PatternId",
    "add_empty_column", "bracelet_orbit", "bracelets", "canonical_form",
    "check_cco_biorder", "check_monotone_circular", "circular_endpoints",
    "circular_ones_column_complemented", "circular_ones_order", "consecutive_ones_order",
    "contains_configuration", "dcircular_order", "delete_column", "difference_rows",
    "fcco_members", "find_fcco", "find_forbidden", "find_mik_star",
    "find_monotone_circular_biorder", "generate_pattern", "has_circular_ones",
    "has_consecutive_ones", "is_cco", "is_cco_forbidden", "is_circular_interval",
    "is_dcircular_order", "is_linear_interval", "mik", "row_complement",
    "search_cco_biorder", "transpose",
]
