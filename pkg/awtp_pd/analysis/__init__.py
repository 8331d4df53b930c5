"""Measures, bound calculators, round checker and security verification."""

from .measures import (
    Distribution,
    statistical_distance,
    statistical_distance_exact,
    shannon_entropy,
    min_entropy,
    binary_entropy,
    mutual_information_bound,
    fano_bound,
    one_round_awtp_rate,
)
from .bounds import (
    BoundsQuery,
    TrVariant,
    ComparisonProtocol,
    rate_upper_bound,
    min_delta_two_round,
    epsilon_prime,
    smt_tr_lower_bound,
    comparison_rate,
    comparison_rows,
    garay_protocol1_rate,
    garay_protocol1_error,
    garay_protocol2_rate_bound,
)
from .rounds import (
    ChannelKind,
    RoundStep,
    RoundForm,
    RoundVerdict,
    CONSTRUCTION_DESCRIPTOR,
    two_round_forms,
    minimum_message_rounds,
    descriptor_from_transcript,
    check_round_complexity,
)
from .verification import (
    DEFAULT_ENUMERATION_BUDGET,
    SecurityReport,
    resolve_sets,
    enumeration_size,
    check_enumeration_budget,
    view_counts,
    view_distribution,
    verify_secrecy_exhaustive,
    verify_secrecy_all_pairs,
    reliability_margin,
    run_trial,
    count_failures,
    estimate_reliability,
)

__all__ = [
    'Distribution',
    'statistical_distance',
    'statistical_distance_exact',
    'shannon_entropy',
    'min_entropy',
    'binary_entropy',
    'mutual_information_bound',
    'fano_bound',
    'one_round_awtp_rate',
    'BoundsQuery',
    'TrVariant',
    'ComparisonProtocol',
    'rate_upper_bound',
    'min_delta_two_round',
    'epsilon_prime',
    'smt_tr_lower_bound',
    'comparison_rate',
    'comparison_rows',
    'garay_protocol1_rate',
    'garay_protocol1_error',
    'garay_protocol2_rate_bound',
    'ChannelKind',
    'RoundStep',
    'RoundForm',
    'RoundVerdict',
    'CONSTRUCTION_DESCRIPTOR',
    'two_round_forms',
    'minimum_message_rounds',
    'descriptor_from_transcript',
    'check_round_complexity',
    'DEFAULT_ENUMERATION_BUDGET',
    'SecurityReport',
    'resolve_sets',
    'enumeration_size',
    'check_enumeration_budget',
    'view_counts',
    'view_distribution',
    'verify_secrecy_exhaustive',
    'verify_secrecy_all_pairs',
    'reliability_margin',
    'run_trial',
    'count_failures',
    'estimate_reliability',
]
