"""Tests for adversary strategies, partitions and set resolution."""

import numpy as np
import pytest
from scipy.stats import chisquare

from awtp_pd.adversary import (
    AdversaryKind,
    AdversarySpec,
    PartitionMode,
    PassiveStrategy,
    SubstitutionStrategy,
    UniformErrorStrategy,
    adv1_uniform,
    partition_sets,
    passive,
    substitution,
)
from awtp_pd.channels import ReadWriteSets, Transcript, awtp_transmit
from awtp_pd.utils.errors import ConfigurationError
from awtp_pd.utils.tapes import FixedTape, GeneratorTape


def transmit(strategy, c, q=5):
    sets = strategy.sets
    transcript = Transcript(N=sets.N, u=len(c[0]), q=q, sets=sets)
    return awtp_transmit(c, sets, strategy, transcript), transcript


def test_passive_never_writes():
    sets = ReadWriteSets.of(3, [0, 1, 2], [0, 1, 2])
    y, transcript = transmit(passive(sets), ((1, 2), (3, 4), (0, 1)))
    assert y == ((1, 2), (3, 4), (0, 1))
    assert transcript.error_weights() == [0]


def test_substitution_on_read_component_replaces_the_symbol():
    sets = ReadWriteSets.of(2, [0], [0])
    strategy = substitution(sets, FixedTape([3, 4], 5))
    y, _ = transmit(strategy, ((1, 2), (0, 0)))
    assert y[0] == (3, 4)
    assert y[1] == (0, 0)


def test_substitution_on_write_only_component_adds_uniform_error():
    sets = ReadWriteSets.of(2, [], [1])
    strategy = substitution(sets, FixedTape([3, 4], 5))
    y, transcript = transmit(strategy, ((0, 0), (1, 1)))
    assert transcript.errors[0][1] == (3, 4)
    assert y[1] == (4, 0)


def test_uniform_error_only_touches_write_set():
    sets = ReadWriteSets.of(4, [], [1, 3])
    strategy = adv1_uniform(sets, GeneratorTape.from_seed(7, 11))
    _, transcript = transmit(strategy, ((0, 0),) * 4, q=11)
    errors = transcript.errors[0]
    assert errors[0] == (0, 0)
    assert errors[2] == (0, 0)


def test_uniform_errors_are_uniform_over_the_field():
    sets = ReadWriteSets.of(4, [], [0, 1])
    strategy = adv1_uniform(sets, GeneratorTape.from_seed(17, 67))
    transcript = Transcript(N=4, u=2, q=67, sets=sets)
    for _ in range(25_000):
        awtp_transmit(((0, 0),) * 4, sets, strategy, transcript)
    symbols = np.array([e[j] for e in transcript.errors for j in (0, 1)]).ravel()
    assert symbols.size == 10 ** 5
    counts = np.bincount(symbols, minlength=67)
    assert chisquare(counts).pvalue > 1e-3


def test_strategies_without_tape_refuse_to_draw():
    sets = ReadWriteSets.of(1, [], [0])
    with pytest.raises(ValueError):
        UniformErrorStrategy(sets).decide(0, {}, ())


def test_spec_builds_matching_strategy():
    sets = ReadWriteSets.of(2, [0], [0])
    assert isinstance(AdversarySpec(kind=AdversaryKind.PASSIVE).build(sets, None, 2), PassiveStrategy)
    built = AdversarySpec(kind="substitution").build(sets, FixedTape([1, 1], 5), 2)
    assert isinstance(built, SubstitutionStrategy)
    assert built.sets == sets


@pytest.mark.parametrize("mode,read,write", [
    (PartitionMode.ADV2, {0, 1, 2}, {2, 3}),
    (PartitionMode.ADV2_HAT, {0, 1, 4}, {3, 4}),
])
def test_partition_modes(mode, read, write):
    sets = partition_sets(5, mode, S_a=[0, 1], S_b=[2], S_c=[3], S_d=[4])
    assert sets.S_r == read
    assert sets.S_w == write


def test_partition_must_cover_n_without_overlap():
    with pytest.raises(ConfigurationError):
        partition_sets(4, PartitionMode.ADV2, [0], [1], [2], [2])
    with pytest.raises(ConfigurationError):
        partition_sets(4, PartitionMode.ADV2, [0], [1], [2], [])


def test_paired_partition_needs_equal_b_and_d():
    with pytest.raises(ConfigurationError):
        partition_sets(4, PartitionMode.ADV2_HAT, [0], [1, 2], [], [3])


def test_explicit_sets_are_budget_checked():
    spec = AdversarySpec(read_set=[0, 1], write_set=[2])
    assert spec.resolve_sets(4, 2, 1, 3).S_r == {0, 1}
    with pytest.raises(ConfigurationError):
        spec.resolve_sets(4, 1, 1, 3)
    with pytest.raises(ConfigurationError):
        spec.resolve_sets(4, 2, 1, 2)


def test_random_sets_are_reproducible():
    spec = AdversarySpec()
    a = spec.resolve_sets(8, 3, 2, 4, np.random.default_rng([42, 0]))
    b = spec.resolve_sets(8, 3, 2, 4, np.random.default_rng([42, 0]))
    assert a == b
    assert (len(a.S_r), len(a.S_w), len(a.union)) == (3, 2, 4)


def test_random_sets_need_a_generator():
    with pytest.raises(ConfigurationError):
        AdversarySpec().resolve_sets(4, 1, 1, 2)


def test_half_specified_sets_are_completed():
    spec = AdversarySpec(read_set=[0])
    sets = spec.resolve_sets(4, 1, 2, 2, np.random.default_rng(3))
    assert sets.S_r == {0}
    assert len(sets.S_w) == 2
    assert len(sets.union) == 2
    assert 0 in sets.S_w

    spec = AdversarySpec(write_set=[1, 2])
    sets = spec.resolve_sets(4, 1, 2, 2, np.random.default_rng(3))
    assert sets.S_w == {1, 2}
    assert sets.S_r <= {1, 2}
    assert len(sets.S_r) == 1
