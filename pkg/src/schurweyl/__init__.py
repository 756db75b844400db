"""Exact classical engine for the quantum Schur transform on n qudits.

Everything is computed over the ring of rational linear combinations of
square roots of square-free integers, so equality tests (unitarity, engine
agreement, round trips) are exact rather than approximate.
"""

from schurweyl.amplitudes import (
    ENGINES,
    EngineMismatch,
    NotAnEdge,
    WrongDimension,
    down_transitions,
    edge_amplitude,
    louck_amplitude,
    pattern_amplitude_d2,
    up_transitions,
)
from schurweyl.branching import (
    ComputationalState,
    HybridState,
    SchurWeylState,
    SchurWeylTriplet,
    branch_down,
    branch_down_state,
    branch_up,
    branch_up_state,
    empty_triplet,
    validate_triplet,
)
from schurweyl.graph import SWYEdge, SWYGraph, SWYVertex, build
from schurweyl.radicals import Radical, Rational, radical_from_sqrt
from schurweyl.tableaux import (
    GTPattern,
    InvariantViolation,
    WeylTableau,
    enumerate_gt,
    enumerate_paths,
    enumerate_syt,
    enumerate_weyl,
    gt_to_weyl,
    make_weyl,
    parse_word,
    partitions,
    path_to_syt,
    syt_to_path,
    weyl_to_gt,
    word_to_text,
)
from schurweyl.transform import (
    DEFAULT_SIZE_BOUND,
    ExactSparseMatrix,
    SizeBoundExceeded,
    decode,
    dimension_check,
    encode,
    schur_basis,
    schur_matrix,
    verify_unitary,
    words,
)

__all__ = [
    "DEFAULT_SIZE_BOUND",
    "ENGINES",
    "ComputationalState",
    "EngineMismatch",
    "ExactSparseMatrix",
    "GTPattern",
    "HybridState",
    "InvariantViolation",
    "NotAnEdge",
    "Radical",
    "Rational",
    "SWYEdge",
    "SWYGraph",
    "SWYVertex",
    "SchurWeylState",
    "SchurWeylTriplet",
    "SizeBoundExceeded",
    "WeylTableau",
    "WrongDimension",
    "branch_down",
    "branch_down_state",
    "branch_up",
    "branch_up_state",
    "build",
    "decode",
    "dimension_check",
    "down_transitions",
    "edge_amplitude",
    "empty_triplet",
    "encode",
    "enumerate_gt",
    "enumerate_paths",
    "enumerate_syt",
    "enumerate_weyl",
    "gt_to_weyl",
    "louck_amplitude",
    "make_weyl",
    "parse_word",
    "partitions",
    "path_to_syt",
    "pattern_amplitude_d2",
    "radical_from_sqrt",
    "schur_basis",
    "schur_matrix",
    "syt_to_path",
    "up_transitions",
    "validate_triplet",
    "verify_unitary",
    "weyl_to_gt",
    "word_to_text",
    "words",
]

__version__ = "0.1.0"
