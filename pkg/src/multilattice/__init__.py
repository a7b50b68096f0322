"""Concatenation patterns of multigraph layers and their order structure."""
from .algebra import padd, subtract
from .layers import (
    Edge,
    Layer,
    LayerError,
    UniverseMismatch,
    color_count,
    layer_stats,
    merge_all,
    merge_layers,
    validate_layer,
)
from .parsing import PatternSyntaxError, parse_pattern
from .patterns import (
    CapacityError,
    Op,
    OpSequence,
    Pattern,
    PatternError,
    canonicalize,
    common_sectors,
    compare,
    complement,
    enumerate_ideals,
    enumerate_patterns,
    f_compose,
    f_merge,
    is_ideal_downdirected,
    is_ideal_joinclosed,
    join,
    leq,
    level,
    meet,
    minimal_patterns,
    representatives,
    top_pattern,
)
from .posets import ExceptionMap, FiniteLattice, FiniteMonoid, FinitePoset, PosetError
from .suites import run_suite

__version__ = "0.1.0"
