"""
Exhaustive secrecy verification and Monte Carlo reliability estimation.

Secrecy: the adversary's coins r_E are fixed and every (r_A, r_B) pair is
enumerated, so the view distributions and their distance are exact.
Reliability: independent trials with per-trial generators derived from the
master seed; failures are compared against delta <= uN/q.
"""

import itertools
import logging
import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from pydantic import BaseModel

from ..adversary import AdversarySpec
from ..channels import ReadWriteSets
from ..protocol import Message, ProtocolConfig, ProtocolTapes, run_protocol
from ..smt import awtp_to_smt, decode_from_wires
from ..utils.errors import ConfigurationError, EnumerationBudgetError
from ..utils.tapes import FixedTape, GeneratorTape, sets_rng, trial_rng
from .measures import statistical_distance_exact

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BUDGET = 10_000_000
MARGIN_SIGMAS = 3
ADVERSARY_STREAM = 2
REPRESENTATIONS = ("awtp", "smt")


class SecurityReport(BaseModel):
    """Measured (epsilon, delta) next to the analytic bounds."""

    kind: str
    measured_sd: Optional[float] = None
    measured_sd_exact: Optional[str] = None
    measured_failure_rate: Optional[float] = None
    failures: Optional[int] = None
    bound_sd: Optional[float] = None
    bound_failure: Optional[float] = None
    margin: Optional[float] = None
    trials: Optional[int] = None
    enumeration_size: Optional[int] = None
    exact: bool = False
    secrecy_condition_holds: Optional[bool] = None

    @property
    def within_bounds(self) -> bool:
        if self.kind == "secrecy":
            if self.secrecy_condition_holds:
                return self.measured_sd == 0
            return True
        return self.measured_failure_rate <= self.bound_failure + (self.margin or 0.0)


def _check_representation(representation: str):
    if representation not in REPRESENTATIONS:
        raise ConfigurationError(f"Unknown representation '{representation}', expected one of {REPRESENTATIONS}")


def resolve_sets(config: ProtocolConfig, adversary: AdversarySpec, seed: int) -> ReadWriteSets:
    """Explicit sets as given; random sets drawn once from the seed's set stream."""
    return adversary.resolve_sets(
        config.N, config.read_budget, config.write_budget, config.union_budget, sets_rng(seed)
    )


# Secrecy

def enumeration_size(config: ProtocolConfig) -> int:
    """Number of (r_A, r_B) tape pairs: q^(uN) * q^N."""
    return config.q ** (config.u * config.N) * config.q ** config.N


def check_enumeration_budget(config: ProtocolConfig, budget: int, messages: int = 1) -> int:
    size = enumeration_size(config)
    if size * messages > budget:
        raise EnumerationBudgetError(
            f"Exhaustive enumeration needs {size * messages:,} executions, budget is {budget:,}"
        )
    return size


def alice_tape_count(config: ProtocolConfig) -> int:
    return config.q ** (config.u * config.N)


def _adversary_view(transcript, representation: str) -> tuple:
    if representation == "smt":
        return awtp_to_smt(transcript).adversary_view()
    return transcript.adversary_view()


def view_counts(
    config: ProtocolConfig,
    message: Message,
    adversary: AdversarySpec,
    sets: ReadWriteSets,
    adversary_seed: int = 0,
    alice_range: Optional[Tuple[int, int]] = None,
    representation: str = "awtp",
) -> Counter:
    """
    Histogram of adversary views over Alice tapes in ``alice_range`` (all by
    default) crossed with every Bob tape, with the adversary coins fixed.
    """
    _check_representation(representation)
    q, u, N = config.q, config.u, config.N
    start, stop = alice_range if alice_range is not None else (0, alice_tape_count(config))
    bob_tapes = list(itertools.product(range(q), repeat=N))

    counts: Counter = Counter()
    alice_tapes = itertools.islice(itertools.product(range(q), repeat=u * N), start, stop)
    for alice_values in alice_tapes:
        for bob_values in bob_tapes:
            strategy = adversary.build(sets, GeneratorTape.from_seed([adversary_seed, ADVERSARY_STREAM], q), u)
            tapes = ProtocolTapes(alice=FixedTape(alice_values, q), bob=FixedTape(bob_values, q))
            _, transcript = run_protocol(config, message, strategy, tapes)
            counts[_adversary_view(transcript, representation)] += 1
    return counts


def view_distribution(
    config: ProtocolConfig,
    message: Message,
    adversary: AdversarySpec,
    adversary_seed: int = 0,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    representation: str = "awtp",
) -> Counter:
    """Exact view histogram for one message (every tape pair counted once)."""
    check_enumeration_budget(config, budget)
    sets = resolve_sets(config, adversary, adversary_seed)
    return view_counts(config, message, adversary, sets, adversary_seed, representation=representation)


def secrecy_report(config: ProtocolConfig, distance: Fraction, size: int) -> SecurityReport:
    return SecurityReport(
        kind="secrecy",
        measured_sd=float(distance),
        measured_sd_exact=str(distance),
        bound_sd=0.0 if config.secrecy_condition_holds else None,
        enumeration_size=size,
        exact=True,
        secrecy_condition_holds=config.secrecy_condition_holds,
    )


def verify_secrecy_exhaustive(
    config: ProtocolConfig,
    m1: Message,
    m2: Message,
    adversary: AdversarySpec,
    adversary_seed: int = 0,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    representation: str = "awtp",
) -> SecurityReport:
    """
    Exact statistical distance between the adversary's views for m1 and m2.

    Raises:
        EnumerationBudgetError: if q^(uN) * q^N executions per message exceed the budget
    """
    size = check_enumeration_budget(config, budget)
    sets = resolve_sets(config, adversary, adversary_seed)
    logger.info(f"🧮 Enumerating {size:,} tape pairs per message ({config.describe()})")

    counts1 = view_counts(config, m1, adversary, sets, adversary_seed, representation=representation)
    counts2 = counts1 if m1 == m2 else view_counts(
        config, m2, adversary, sets, adversary_seed, representation=representation
    )
    distance = statistical_distance_exact(counts1, counts2)
    logger.info(f"🔒 Exact view distance {distance}")
    return secrecy_report(config, distance, size)


def all_messages(config: ProtocolConfig) -> Iterable[Message]:
    for values in itertools.product(range(config.q), repeat=config.message_length):
        yield Message(values, config.q)


def verify_secrecy_all_pairs(
    config: ProtocolConfig,
    adversary: AdversarySpec,
    adversary_seed: int = 0,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    representation: str = "awtp",
) -> SecurityReport:
    """Largest exact view distance over every pair of messages in F_q^l."""
    size = check_enumeration_budget(config, budget, messages=config.message_space_size)
    sets = resolve_sets(config, adversary, adversary_seed)
    histograms = [
        view_counts(config, m, adversary, sets, adversary_seed, representation=representation)
        for m in all_messages(config)
    ]
    worst = Fraction(0)
    for a, b in itertools.combinations(histograms, 2):
        worst = max(worst, statistical_distance_exact(a, b))
    logger.info(f"🔒 Max view distance over {len(histograms)} messages: {worst}")
    return secrecy_report(config, worst, size)


# Reliability

def reliability_margin(bound: float, trials: int) -> float:
    """Three binomial standard deviations at p = bound."""
    p = min(1.0, bound)
    return MARGIN_SIGMAS * math.sqrt(p * (1 - p) / trials)


def run_trial(
    config: ProtocolConfig,
    adversary: AdversarySpec,
    sets: ReadWriteSets,
    seed: int,
    trial: int,
    representation: str = "awtp",
):
    """One execution with a uniformly random message; returns (success, m, m', transcript)."""
    rng = trial_rng(seed, trial)
    q = config.q
    message = Message(tuple(rng.integers(0, q, size=config.message_length).tolist()), q)
    tape = GeneratorTape(rng, q)
    strategy = adversary.build(sets, tape, config.u)
    m_prime, transcript = run_protocol(config, message, strategy, ProtocolTapes(alice=tape, bob=tape))
    if representation == "smt":
        m_prime = decode_from_wires(config, awtp_to_smt(transcript))
    return m_prime == message, message, m_prime, transcript


def count_failures(
    config: ProtocolConfig,
    adversary: AdversarySpec,
    sets: ReadWriteSets,
    seed: int,
    start: int,
    stop: int,
    representation: str = "awtp",
) -> int:
    """Decoding failures over trials [start, stop)."""
    _check_representation(representation)
    failures = 0
    for trial in range(start, stop):
        ok, *_ = run_trial(config, adversary, sets, seed, trial, representation)
        failures += not ok
    return failures


def reliability_report(config: ProtocolConfig, failures: int, trials: int) -> SecurityReport:
    bound = float(config.reliability_bound)
    return SecurityReport(
        kind="reliability",
        measured_failure_rate=failures / trials,
        failures=failures,
        bound_failure=bound,
        margin=reliability_margin(bound, trials),
        trials=trials,
        exact=False,
        secrecy_condition_holds=config.secrecy_condition_holds,
    )


def estimate_reliability(
    config: ProtocolConfig,
    adversary: AdversarySpec,
    trials: int,
    seed: int,
    representation: str = "awtp",
) -> SecurityReport:
    """Monte Carlo failure rate of Bob's decoder over ``trials`` independent executions."""
    if trials < 1:
        raise ConfigurationError(f"trials must be at least 1, got {trials}")
    sets = resolve_sets(config, adversary, seed)
    logger.info(f"🎲 {trials:,} reliability trials, seed={seed}, adversary={adversary.kind.value}")
    failures = count_failures(config, adversary, sets, seed, 0, trials, representation)
    report = reliability_report(config, failures, trials)
    logger.info(f"📊 Failure rate {report.measured_failure_rate:.6f} (bound {report.bound_failure:.6f})")
    return report
