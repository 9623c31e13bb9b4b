"""Exact construction and dissection analysis of geometrically growing unary languages."""

from .analysis import (
    DissectionVerdict,
    DivisibilityReport,
    EmpiricalCounts,
    GapSkip,
    GrowthReport,
    RatioReport,
    certificate,
    check_divisibility,
    check_growth,
    check_ratio_bounds,
    cross_check,
    dissect_verdict,
    empirical_counts,
)
from .automata import (
    ApComponent,
    UnaryDfa,
    ap_machine,
    component_language,
    decompose,
    dfa_accept,
    dfa_from_json,
    dfa_from_table,
)
from .construction import (
    IntegrityError,
    Params,
    contiguous_levels_from,
    floor_log_ratio,
    growth_cutoff,
    in_index_set,
    level_admitted,
    level_divisor,
    next_index,
    stabilization_threshold,
    suggest_params,
    word_length,
)
from .lengthsets import (
    ApSet,
    FactorialSet,
    FileSet,
    LengthSet,
    ScaledFactorialSet,
    core_min_level,
    dropped_prefix,
    make_ap,
    make_factorial,
    make_file_set,
    make_geometric_core,
    make_scaled_factorials,
)

__version__ = "0.1.0"
