"""Deletion-channel combinatorics: deletion balls and their intersections,
exhaustive extremal pair search, deletion-correcting codes, and multi-read
reconstruction."""

from .balls import (
    Ball,
    IntersectionRecord,
    ball_restrict_last,
    ball_size_max,
    count_ball,
    deletion_ball,
    intersection_size,
    is_subsequence,
)
from .codes import (
    Codebook,
    CodebookIntegrityError,
    brute_decode,
    greedy_codebook,
    vt_codebook,
    vt_codeword_by_index,
    vt_decode,
    vt_decoder,
    vt_syndrome,
)
from .distance import (
    DistanceResult,
    check_distance_recursion,
    deletion_distance,
    lcs_length,
)
from .reconstruct import (
    AmbiguousReadsError,
    CandidatePair,
    DrawBudgetError,
    InsufficientDiversityError,
    ReadSet,
    ReconstructionError,
    TrialRecord,
    candidates_from_two_reads,
    collect_distinct_reads,
    deletion_channel,
    explicit_trial,
    feasible_codewords,
    longest_common_suffix,
    reconstruct,
    sample_vt_codeword,
    summarize_trials,
    vt_trial,
)
from .search import (
    BoundReport,
    BudgetError,
    InfeasibleQueryError,
    NEntry,
    NQuery,
    NTable,
    RecurrenceReport,
    build_table,
    common_subsequence_count,
    compute_n_exhaustive,
    delta_fast,
    n_formula_dist1,
    n_formula_dist2,
    overlap_lower_bound,
    overlap_upper_bound,
    recurrence_report,
    verify_overlap_bound,
)
from .words import (
    CAPACITY,
    CapacityError,
    EMPTY,
    RunProfile,
    Word,
    alternating,
    block_deletion_family,
    complement,
    concat,
    delete_positions,
    extremal_pair,
    parse_word,
    prefix,
    reverse,
    runs,
    seed_pair,
    suffix,
)

__version__ = "0.1.0"
