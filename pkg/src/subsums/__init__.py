"""Thresholded subset-sum and subsequence-sum sets: exact computation,
closed-form size floors, extremal families, and exhaustive verification.
"""

from .bounds import (
    ALL_THEOREM_IDS,
    BoundResult,
    applicable_bounds,
    bound_disjoint,
    bound_fp,
    bound_general,
    bound_mixed,
    bound_mixed_zero,
    bound_seq_disjoint,
    bound_seq_general,
    bound_seq_mixed,
    bound_seq_mixed_zero,
    bound_seq_zero,
    bound_zero,
    m_index,
    min_fold_size,
    min_sumset_size,
)
from .engine import (
    add_sets,
    fold_fast,
    h_fold,
    sequence_layers,
    sigma,
    sigma_seq,
    subset_layers,
)
from .fp import FpSubset, is_prime, sigma_fp, verify_balandraud
from .model import (
    AT_LEAST,
    AT_MOST,
    DEFAULT_LIMITS,
    GENERALIZED,
    IntegerSet,
    Limits,
    ParseError,
    RESTRICTED,
    RepSequence,
    SignProfile,
    SumSet,
    UNRESTRICTED,
    classify,
    parse_sequence,
    parse_set,
)
from .oracle import (
    oracle_fold,
    oracle_sigma_seq,
    oracle_sigma_set,
    sequence_sums_by_size,
    subset_sums_by_size,
)
from .verifier import (
    BudgetExceeded,
    CampaignReport,
    VerificationRecord,
    empirical_minimum,
    sweep_sequences,
    sweep_sets,
    write_records_csv,
)
from .witnesses import (
    FAMILY_IDS,
    TightnessReport,
    WitnessFamily,
    alpha_values,
    check_tightness,
    claimed_bound,
    witness,
)

__all__ = [
    "ALL_THEOREM_IDS",
    "AT_LEAST",
    "AT_MOST",
    "BoundResult",
    "BudgetExceeded",
    "CampaignReport",
    "DEFAULT_LIMITS",
    "FAMILY_IDS",
    "FpSubset",
    "GENERALIZED",
    "IntegerSet",
    "Limits",
    "ParseError",
    "RESTRICTED",
    "RepSequence",
    "SignProfile",
    "SumSet",
    "TightnessReport",
    "UNRESTRICTED",
    "VerificationRecord",
    "WitnessFamily",
    "add_sets",
    "alpha_values",
    "applicable_bounds",
    "bound_disjoint",
    "bound_fp",
    "bound_general",
    "bound_mixed",
    "bound_mixed_zero",
    "bound_seq_disjoint",
    "bound_seq_general",
    "bound_seq_mixed",
    "bound_seq_mixed_zero",
    "bound_seq_zero",
    "bound_zero",
    "check_tightness",
    "claimed_bound",
    "classify",
    "empirical_minimum",
    "fold_fast",
    "h_fold",
    "is_prime",
    "m_index",
    "min_fold_size",
    "min_sumset_size",
    "oracle_fold",
    "oracle_sigma_seq",
    "oracle_sigma_set",
    "parse_sequence",
    "parse_set",
    "sequence_layers",
    "sequence_sums_by_size",
    "sigma",
    "sigma_fp",
    "sigma_seq",
    "subset_layers",
    "subset_sums_by_size",
    "sweep_sequences",
    "sweep_sets",
    "verify_balandraud",
    "witness",
    "write_records_csv",
]

__version__ = "0.1.0"
