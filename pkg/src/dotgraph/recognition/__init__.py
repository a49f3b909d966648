"""Positive and negative recognition of low-dimensional dot product graphs."""

from .ordering import OrderingConstraintViolation, ordering_violations, recheck_violation
from .refute import RefutationCertificate, check_nested, is_cobipartite, refute_2dpr
from .search import NotFound, SearchBudget, search_dpr
from .threshold import dot_dimension_at_most_1, is_threshold, random_threshold_graph, threshold_peeling

__all__ = [
    "OrderingConstraintViolation",
    "ordering_violations",
    "recheck_violation",
    "RefutationCertificate",
    "check_nested",
    "is_cobipartite",
    "refute_2dpr",
    "NotFound",
    "SearchBudget",
    "search_dpr",
    "dot_dimension_at_most_1",
    "is_threshold",
    "random_threshold_graph",
    "threshold_peeling",
]
