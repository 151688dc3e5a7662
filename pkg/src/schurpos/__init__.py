"""Schur-basis arithmetic, the dealing operation on pairs of partitions, and the
posets and sweeps built on top of them."""
from .algebra import (
    ONE,
    e_to_schur,
    h_difference_positive,
    h_to_schur,
    multiply,
    multiply_skew,
    product,
    schur,
    support,
)
from .errors import SchurposError
from .lr import (
    LRFilling,
    enumerate_lr_fillings,
    is_lattice,
    lr_coefficient,
    reading_word,
    skew_schur_expand,
    star_concatenate,
)
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    classify_shape,
    conjugate,
    dominance_leq,
    parse_partition,
    parse_skew,
    strip_kind,
    union,
)
from .tilde import SkewPair, skew_tilde, tilde_m, tilde_pair
from .vector import ZERO, SchurVector, is_schur_positive, omega

__version__ = "0.1.0"

__all__ = [
    "EMPTY", "ONE", "ZERO", "LRFilling", "Partition", "SchurVector", "SchurposError",
    "SkewPair", "SkewShape", "classify_shape", "conjugate", "dominance_leq", "e_to_schur",
    "enumerate_lr_fillings", "h_difference_positive", "h_to_schur", "is_lattice",
    "is_schur_positive", "lr_coefficient", "multiply", "multiply_skew", "omega",
    "parse_partition", "parse_skew", "product", "reading_word", "schur", "skew_schur_expand",
    "skew_tilde", "star_concatenate", "strip_kind", "support", "tilde_m", "tilde_pair", "union",
]
