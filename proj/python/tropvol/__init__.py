"""Exact tropical polytope volumes, lattice counts and rank bounds."""

from _tropvol import (
    BudgetExceeded,
    InputError,
    choice_epsilon,
    contains,
    count,
    hilbert_count,
    hilbert_generators,
    hilbert_volume,
    hopb_volume,
    minplus_product,
    normalize,
    outer_parallel_body,
    parse_matrix,
    rank,
    rank_from_counting,
    rank_from_volume,
    sat_count,
    sat_gadget_count,
    sat_gadget_volume,
    type_of,
    volume,
    zero_volume,
)

__all__ = [
    "BudgetExceeded",
    "InputError",
    "choice_epsilon",
    "contains",
    "count",
    "hilbert_count",
    "hilbert_generators",
    "hilbert_volume",
    "hopb_volume",
    "minplus_product",
    "normalize",
    "outer_parallel_body",
    "parse_matrix",
    "rank",
    "rank_from_counting",
    "rank_from_volume",
    "sat_count",
    "sat_gadget_count",
    "sat_gadget_volume",
    "type_of",
    "volume",
    "zero_volume",
]
