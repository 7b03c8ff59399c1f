"""Optimal cyclic ladder lotteries: arithmetic, reconfiguration, enumeration."""

from .core import (
    DisplacementVector,
    Permutation,
    base_dv,
    c_min,
    crossing_number,
    inversion_number,
    is_optimal_dv,
    is_valid_dv,
    optimal_dv,
    wrap_position,
)
from .lottery import (
    Bar,
    Chirality,
    ConstructionError,
    CyclicLadderLottery,
    TangledTriple,
    apply_braid,
    canonicalize,
    construct_lottery,
    dv_of,
    evaluate,
    is_at_most_once,
    left_triples,
    tangled_triples,
    to_svg,
)
from .reconfig import (
    BraidMove,
    MaxMinContraction,
    ReconfigSequence,
    UnreachableError,
    cll_distance,
    cll_path,
    dv_distance,
    dv_path,
    dv_symmetric_difference,
    lt_symmetric_difference,
    push_to_top,
    replay,
)
from .enumerate import (
    TraversalCounters,
    cll_children,
    cll_parent,
    cll_root,
    dv_children,
    dv_parent,
    dv_root,
    enum_all,
    enum_cll,
    enum_dv,
)

__version__ = "0.1.0"
