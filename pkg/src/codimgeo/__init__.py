"""Exact permutation geometry for spanning-set size bounds.

Inversion sets and the word metric on the symmetric group, left greedy chunk
forms, chunk-preserving decompositions and their rearrangements, Mahonian
counting with exact ball complements, bound calculators with crossover
thresholds, and constructive rewriting closures that verify the two spanning
mechanisms at desk scale.
"""

__version__ = "0.1.0"

from .bounds import (
    AsymptoticConstants,
    BoundReport,
    BoundRow,
    TailEstimate,
    classic_bound,
    compare_bounds,
    complement_lower_bound,
    crossover_n,
    mahonian_asymptotic,
    q_constant,
    tensor_identity_degree,
    theorem_bound,
    threshold_radius,
)
from .errors import FalsificationError, InvalidInversionSetError, ScaleError
from .greedy import (
    ChunkStats,
    GreedyForm,
    Piece,
    PieceDecomposition,
    Span,
    apply_rearrangement,
    check_growth,
    chunk_stats,
    enumerate_chunk_preserving,
    initial_chunk,
    left_greedy_form,
)
from .mahonian import (
    MahonianRow,
    ball_complement_count,
    ball_complement_via_subtraction,
    ball_count,
    brute_force_row,
    mahonian_knuth,
    mahonian_row,
    pentagonal,
)
from .perm import (
    InversionSet,
    Permutation,
    all_permutations,
    cayley_distance_bfs,
    count_d_good,
    dictionary_compare,
    find_d_bad_witness,
    from_inversion_set,
    identity,
    inversion_set,
    is_d_good,
    longest_decreasing,
    make_permutation,
    parse_permutation,
    reversal,
    validate_inversion_set,
    word_length,
)
from .reduction import (
    ReductionTrace,
    classic_closure,
    classic_step,
    main_closure,
    main_step,
)
from .verify import SUITES, SuiteResult, run_suite

__all__ = [
    "AsymptoticConstants",
    "BoundReport",
    "BoundRow",
    "ChunkStats",
    "FalsificationError",
    "GreedyForm",
    "InvalidInversionSetError",
    "InversionSet",
    "MahonianRow",
    "Permutation",
    "Piece",
    "PieceDecomposition",
    "ReductionTrace",
    "ScaleError",
    "Span",
    "SuiteResult",
    "SUITES",
    "TailEstimate",
    "all_permutations",
    "apply_rearrangement",
    "ball_complement_count",
    "ball_complement_via_subtraction",
    "ball_count",
    "brute_force_row",
    "cayley_distance_bfs",
    "check_growth",
    "chunk_stats",
    "classic_bound",
    "classic_closure",
    "classic_step",
    "compare_bounds",
    "complement_lower_bound",
    "count_d_good",
    "crossover_n",
    "dictionary_compare",
    "enumerate_chunk_preserving",
    "find_d_bad_witness",
    "from_inversion_set",
    "identity",
    "initial_chunk",
    "inversion_set",
    "is_d_good",
    "left_greedy_form",
    "longest_decreasing",
    "mahonian_asymptotic",
    "mahonian_knuth",
    "mahonian_row",
    "main_closure",
    "main_step",
    "make_permutation",
    "parse_permutation",
    "pentagonal",
    "q_constant",
    "reversal",
    "run_suite",
    "tensor_identity_degree",
    "theorem_bound",
    "threshold_radius",
    "validate_inversion_set",
    "word_length",
]
