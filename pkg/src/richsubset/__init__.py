"""Exact selection of small coordinatewise-rich subsets of nonnegative vectors."""
from .exceptions import ParseError, SizeLimitError, ValidationError
from .extremal import ExtremalSpec, extremal_instance, extremal_min_size, extremal_witness, mod_inverse
from .instances import emit_instance, format_rational, parse_instance, parse_rational, random_instance
from .numeric import ceil_div, kernel_vector, vec_geq
from .oracle import OracleResult, brute_min_rich, greedy_top_k
from .selector import (
    Case,
    Instance,
    PurifiedPoint,
    Selection,
    TargetRatio,
    TraceStep,
    alon_bound,
    is_rich,
    purify,
    select_rich_subset,
    sw_bound,
    upper_bound_f,
)

__version__ = "0.1.0"
