"""Ternary (and q-ary) cyclic codes defined by q-weights modulo 4."""

from .bounds import BoundReport, delta_max, lemma_window_check, longest_cyclic_run, multiplied_set, theorem_bound
from .codes import (
    CyclicCode,
    DefiningSet,
    build_code,
    complement_code,
    dual_code,
    is_codeword,
    weight_class_set,
)
from .distance import DistanceReport, bounded_weight_search, exhaustive_min_distance, min_distance, weight_distribution
from .gf import FieldSpec, build_field
from .poly import Poly

__version__ = "0.1.0"
