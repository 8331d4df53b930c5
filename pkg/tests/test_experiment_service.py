"""Tests for the sharded experiment service."""

import pytest
from hypothesis import given, strategies as st

from awtp_pd.adversary import AdversaryKind, AdversarySpec
from awtp_pd.analysis import estimate_reliability, verify_secrecy_exhaustive
from awtp_pd.protocol import Message
from awtp_pd.services import ExperimentService, split_range
from awtp_pd.utils.errors import ConfigurationError, EnumerationBudgetError


@given(st.integers(min_value=1, max_value=5000), st.integers(min_value=1, max_value=64))
def test_split_range_covers_in_order(total, parts):
    ranges = split_range(total, parts)
    assert 1 <= len(ranges) <= min(total, parts)
    assert ranges[0][0] == 0
    assert ranges[-1][1] == total
    for (a, b), (c, _) in zip(ranges, ranges[1:]):
        assert b == c
    sizes = [b - a for a, b in ranges]
    assert min(sizes) >= 1
    assert max(sizes) - min(sizes) <= 1


def test_service_rejects_zero_workers(config_manager):
    with pytest.raises(ConfigurationError):
        ExperimentService(config_manager, workers=0)


def test_service_reads_worker_count(config_manager, single_worker):
    assert ExperimentService(config_manager).workers == 1


@pytest.mark.asyncio
async def test_single_worker_matches_direct_estimate(config_manager, reliability_config):
    spec = AdversarySpec(kind=AdversaryKind.SUBSTITUTION)
    service = ExperimentService(config_manager, workers=1)
    report = await service.run_reliability(reliability_config, spec, 300, seed=9)
    assert report == estimate_reliability(reliability_config, spec, 300, seed=9)


@pytest.mark.asyncio
async def test_worker_count_does_not_change_results(config_manager, reliability_config):
    spec = AdversarySpec(kind=AdversaryKind.ADV1_UNIFORM)
    one = await ExperimentService(config_manager, workers=1).run_reliability(reliability_config, spec, 200, seed=4)
    two = await ExperimentService(config_manager, workers=2).run_reliability(reliability_config, spec, 200, seed=4)
    assert one == two
    assert one.trials == 200


@pytest.mark.asyncio
async def test_reliability_needs_trials(config_manager, reliability_config):
    service = ExperimentService(config_manager, workers=1)
    with pytest.raises(ConfigurationError):
        await service.run_reliability(reliability_config, AdversarySpec(), 0, seed=1)


@pytest.mark.asyncio
async def test_secrecy_respects_budget(config_manager, small_config, component_zero_spec):
    service = ExperimentService(config_manager, workers=1)
    with pytest.raises(EnumerationBudgetError):
        await service.run_secrecy(
            small_config, Message((0,), 5), Message((1,), 5), component_zero_spec("passive"), budget=10
        )


@pytest.mark.slow
@pytest.mark.asyncio
async def test_sharded_secrecy_matches_direct_enumeration(config_manager, small_config, component_zero_spec):
    spec = component_zero_spec("substitution")
    m1, m2 = Message((1,), 5), Message((4,), 5)
    report = await ExperimentService(config_manager, workers=2).run_secrecy(small_config, m1, m2, spec)
    assert report.measured_sd == 0
    assert report.exact
    assert report == verify_secrecy_exhaustive(small_config, m1, m2, spec)
