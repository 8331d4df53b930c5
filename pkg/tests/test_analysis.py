"""Tests for measures, bound calculators, the round checker and security verification."""

import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from awtp_pd.adversary import AdversaryKind, AdversarySpec
from awtp_pd.analysis import (
    CONSTRUCTION_DESCRIPTOR,
    BoundsQuery,
    Distribution,
    RoundStep,
    TrVariant,
    binary_entropy,
    check_enumeration_budget,
    check_round_complexity,
    count_failures,
    enumeration_size,
    epsilon_prime,
    estimate_reliability,
    fano_bound,
    garay_protocol1_rate,
    garay_protocol2_rate_bound,
    min_delta_two_round,
    min_entropy,
    minimum_message_rounds,
    mutual_information_bound,
    one_round_awtp_rate,
    rate_upper_bound,
    reliability_margin,
    shannon_entropy,
    smt_tr_lower_bound,
    statistical_distance,
    statistical_distance_exact,
    comparison_rows,
    two_round_forms,
    verify_secrecy_all_pairs,
    verify_secrecy_exhaustive,
    view_distribution,
)
from awtp_pd.channels import Party
from awtp_pd.analysis.rounds import ChannelKind
from awtp_pd.protocol import Message
from awtp_pd.utils.errors import ChannelUsageError, ConfigurationError, EnumerationBudgetError


# Measures

def test_statistical_distance_examples():
    p = Distribution(["a", "b"], [0.5, 0.5])
    assert statistical_distance(p, p) == 0
    assert statistical_distance(Distribution.point_mass("a"), Distribution.point_mass("b")) == 1
    assert statistical_distance(p, Distribution.point_mass("a")) == pytest.approx(0.5)


@given(
    a=st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=6),
    b=st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=6),
)
def test_exact_and_float_distances_agree(a, b):
    counts1 = Counter({i: c for i, c in enumerate(a)})
    counts2 = Counter({i: c for i, c in enumerate(b)})
    exact = statistical_distance_exact(counts1, counts2)
    assert 0 <= exact <= 1
    approx = statistical_distance(Distribution.from_counts(counts1), Distribution.from_counts(counts2))
    assert approx == pytest.approx(float(exact), abs=1e-9)


def test_distribution_validation():
    with pytest.raises(ValueError):
        Distribution(["a", "b"], [0.5, 0.6])
    with pytest.raises(ValueError):
        Distribution(["a", "a"], [0.5, 0.5])
    with pytest.raises(ValueError):
        Distribution(["a", "b"], [1.5, -0.5])
    with pytest.raises(ValueError):
        Distribution.from_counts({})


def test_entropies():
    uniform = Distribution.uniform(range(8))
    assert shannon_entropy(uniform) == pytest.approx(3.0)
    assert min_entropy(uniform) == pytest.approx(3.0)
    skewed = Distribution(["x", "y"], [0.75, 0.25])
    assert min_entropy(skewed) == pytest.approx(-np.log2(0.75))
    assert shannon_entropy(skewed) == pytest.approx(binary_entropy(0.25))
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    with pytest.raises(ValueError):
        binary_entropy(1.5)


def test_leakage_and_fano_bounds():
    assert mutual_information_bound(0, 10, 25, 100) == 0
    assert mutual_information_bound(0.5, 2, 4, 3) == pytest.approx(2 * 0.5 * 2 * 3 + 2 * 0.5 * 3)
    assert fano_bound(0, 1024) == 0
    assert fano_bound(0.5, 4) == pytest.approx(1 + 0.5 * 2)
    assert one_round_awtp_rate(0.3, 0.2) == pytest.approx(0.5)
    assert one_round_awtp_rate(0.6, 0.6) == 0


# Bounds

def test_perfect_secrecy_capacity():
    assert rate_upper_bound(BoundsQuery(rho=0.5, epsilon=0)) == pytest.approx(0.5)
    assert rate_upper_bound(BoundsQuery(rho_r=0.25, rho_w=0.5)) == pytest.approx(0.25)


def test_rate_bound_grows_with_epsilon():
    base = rate_upper_bound(BoundsQuery(rho=0.5, epsilon=0.01, sigma_size=4))
    expected = 0.5 + 2 * 0.01 * (1 + math.log(100, 4))
    assert base == pytest.approx(expected)
    assert rate_upper_bound(BoundsQuery(rho=0.5, epsilon=0.01, sigma_size=4, n=10)) == pytest.approx(expected + 0.2)


@pytest.mark.parametrize("sigma_size", [2, 4, 67 ** 2])
def test_rate_bound_is_monotone(sigma_size):
    rhos = np.linspace(0, 1, 21)
    epsilons = np.linspace(0, 0.5, 26)
    ns = [0, 1, 8, 64, 1024]
    by_rho = [rate_upper_bound(BoundsQuery(rho=r, epsilon=0.05, sigma_size=sigma_size)) for r in rhos]
    by_eps = [rate_upper_bound(BoundsQuery(rho=0.5, epsilon=e, sigma_size=sigma_size)) for e in epsilons]
    by_n = [rate_upper_bound(BoundsQuery(rho=0.5, epsilon=0.05, sigma_size=sigma_size, n=n)) for n in ns]
    assert all(a > b for a, b in zip(by_rho, by_rho[1:]))
    assert all(a < b for a, b in zip(by_eps, by_eps[1:]))
    assert all(a <= b for a, b in zip(by_n, by_n[1:]))


def test_min_delta_two_round():
    delta = min_delta_two_round(2)
    assert abs(delta - 0.0415) < 5e-4
    assert 2 * binary_entropy(delta) == pytest.approx(0.5, abs=1e-6)
    assert min_delta_two_round(1) == 0
    assert min_delta_two_round(math.inf) == pytest.approx(0.110027, abs=1e-5)


def test_ggo10_bound_for_large_message_space():
    N, t = 16, 8
    M = 2.0 ** N
    query = BoundsQuery(N=N, t=t, message_space_size=M, epsilon=1 / M)
    expected = (N / (N - t)) * (1 - math.log2(3) / N)
    assert smt_tr_lower_bound(query, TrVariant.GGO10) == pytest.approx(expected, abs=1e-9)


def test_epsec_and_perfect_bounds():
    N, t = 16, 8
    M = 2.0 ** N
    eps = 1 / M
    query = BoundsQuery(N=N, t=t, message_space_size=M, epsilon=eps, sigma_size=2)
    eps_prime = 2 * N * eps * (1 + math.log2(1 / eps))
    assert epsilon_prime(query) == pytest.approx(eps_prime, abs=1e-12)
    assert smt_tr_lower_bound(query, "epsec") == pytest.approx(N / (N - t + eps_prime), abs=1e-9)
    assert smt_tr_lower_bound(query, TrVariant.PERF) == pytest.approx(N / (N - t))


def test_transmission_bounds_need_wires():
    with pytest.raises(ConfigurationError):
        smt_tr_lower_bound(BoundsQuery(), TrVariant.PERF)
    with pytest.raises(ConfigurationError):
        smt_tr_lower_bound(BoundsQuery(N=4, t=4), TrVariant.PERF)
    with pytest.raises(ConfigurationError):
        smt_tr_lower_bound(BoundsQuery(N=4, t=1), TrVariant.GGO10)


def test_comparison_table():
    frame = comparison_rows(8, 16, 0.01)
    assert list(frame['protocol']) == ['shi', 'garay1', 'garay2', 'awtp_pd']
    rates = dict(zip(frame['protocol'], frame['info_rate']))
    for name in ('shi', 'garay1', 'awtp_pd'):
        assert rates[name] == pytest.approx(1 - 8 / 16 - 0.01)
    assert rates['garay2'] == pytest.approx((1 - 8 / 16) / 3)
    assert rates['garay2'] <= (1 - 8 / 16) / 3 + 1e-12
    assert set(frame['transmission_rate_order']) == {2.0}


@pytest.mark.parametrize("t,n,xi", [(1, 4, 0.1), (8, 16, 0.01), (0, 10, 0.2)])
def test_protocol_one_rate(t, n, xi):
    expected = (1 - t / n) * (1 - xi) / (1 + xi)
    assert garay_protocol1_rate(t, n, xi) == pytest.approx(expected, rel=1e-12)
    assert garay_protocol2_rate_bound(t, n) == pytest.approx((1 - t / n) / 3)


# Round complexity

def test_minimum_rounds():
    assert minimum_message_rounds(0.2, 0.3) == 1
    assert minimum_message_rounds(0.5, 0.5) == 3


def test_every_two_round_form_is_ruled_out():
    forms = two_round_forms()
    assert [f.number for f in forms] == [1, 2, 3, 4, 5]
    for form in forms:
        verdict = check_round_complexity(form.steps, 0.5, 0.5)
        assert verdict.ruled_out, form
        assert verdict.form == form.number
        if form.number in (1, 2):
            assert verdict.min_delta == pytest.approx(min_delta_two_round(math.inf))


def test_construction_is_not_ruled_out():
    verdict = check_round_complexity(CONSTRUCTION_DESCRIPTOR, 0.5, 0.5)
    assert not verdict.ruled_out


def test_round_checker_edge_cases():
    bob_awtp = (RoundStep(Party.BOB, ChannelKind.AWTP),)
    with pytest.raises(ChannelUsageError):
        check_round_complexity(bob_awtp, 0.5, 0.5)
    pd_only = (RoundStep(Party.ALICE, ChannelKind.PD), RoundStep(Party.BOB, ChannelKind.PD))
    assert check_round_complexity(pd_only, 0.1, 0.1).ruled_out
    one_round = (RoundStep(Party.ALICE, ChannelKind.AWTP),)
    assert not check_round_complexity(one_round, 0.2, 0.3).ruled_out
    assert check_round_complexity(one_round, 0.6, 0.4).ruled_out


# Secrecy

def test_enumeration_budget_is_enforced(small_config):
    assert enumeration_size(small_config) == 5 ** 4 * 5 ** 2
    with pytest.raises(EnumerationBudgetError):
        check_enumeration_budget(small_config, 1000)
    spec = AdversarySpec(kind=AdversaryKind.PASSIVE, read_set=[0], write_set=[0])
    with pytest.raises(EnumerationBudgetError):
        verify_secrecy_exhaustive(small_config, Message((0,), 5), Message((1,), 5), spec, budget=1000)


@pytest.mark.slow
def test_equal_messages_have_zero_distance(small_config, component_zero_spec):
    m = Message((2,), 5)
    report = verify_secrecy_exhaustive(small_config, m, m, component_zero_spec("substitution"))
    assert report.measured_sd == 0
    assert report.exact


@pytest.mark.slow
@pytest.mark.parametrize("representation", ["awtp", "smt"])
@pytest.mark.parametrize("kind", ["passive", "substitution"])
def test_perfect_secrecy_over_all_message_pairs(small_config, component_zero_spec, kind, representation):
    report = verify_secrecy_all_pairs(small_config, component_zero_spec(kind), representation=representation)
    assert report.measured_sd == 0
    assert report.measured_sd_exact == "0"
    assert report.within_bounds
    if representation == "smt":
        assert report == verify_secrecy_all_pairs(small_config, component_zero_spec(kind))


@pytest.mark.slow
def test_reading_every_component_leaks(leaky_config):
    spec = AdversaryKind.SUBSTITUTION
    report = verify_secrecy_exhaustive(
        leaky_config, Message((0,), 5), Message((1,), 5),
        AdversarySpec(kind=spec, read_set=[0, 1], write_set=[0]),
    )
    assert report.measured_sd > 0
    assert not report.secrecy_condition_holds
    assert report.within_bounds


@pytest.mark.slow
def test_view_distribution_counts_every_tape_pair(small_config, component_zero_spec):
    counts = view_distribution(small_config, Message((0,), 5), component_zero_spec("passive"))
    assert sum(counts.values()) == enumeration_size(small_config)


# Reliability

def test_reliability_margin():
    assert reliability_margin(8 / 67, 10 ** 5) == pytest.approx(3 * math.sqrt((8 / 67) * (59 / 67) / 10 ** 5))


def test_passive_adversary_never_causes_failures(reliability_config):
    report = estimate_reliability(reliability_config, AdversarySpec(kind="passive"), 10 ** 4, seed=42)
    assert report.failures == 0
    assert report.measured_failure_rate == 0
    assert report.within_bounds


def test_failure_counts_are_reproducible(reliability_config):
    spec = AdversarySpec(kind="substitution", read_set=[], write_set=[0, 1])
    sets = spec.resolve_sets(4, 0, 2, 2)
    first = count_failures(reliability_config, spec, sets, 7, 0, 300)
    assert first == count_failures(reliability_config, spec, sets, 7, 0, 300)
    split = count_failures(reliability_config, spec, sets, 7, 0, 120) + count_failures(
        reliability_config, spec, sets, 7, 120, 300
    )
    assert split == first


@pytest.mark.slow
@pytest.mark.parametrize("fixture, representation", [
    ("reliability_config", "awtp"),
    ("restricted_config", "awtp"),
    ("restricted_config", "smt"),
])
def test_substitution_failure_rate_within_bound(request, fixture, representation):
    config = request.getfixturevalue(fixture)
    spec = AdversarySpec(kind="substitution")
    report = estimate_reliability(config, spec, 10 ** 5, seed=42, representation=representation)
    assert report.bound_failure == pytest.approx(8 / 67)
    assert report.measured_failure_rate <= 8 / 67 + report.margin
    assert report.within_bounds
    if representation == "smt":
        assert report == estimate_reliability(config, spec, 10 ** 5, seed=42)


@pytest.mark.slow
def test_uniform_error_failure_rate_within_bound(reliability_config):
    report = estimate_reliability(reliability_config, AdversarySpec(kind="adv1_uniform"), 10 ** 5, seed=42)
    assert report.bound_failure == pytest.approx(8 / 67)
    assert report.measured_failure_rate <= 8 / 67 + report.margin
    assert report.within_bounds


def test_reliability_needs_trials(reliability_config):
    with pytest.raises(ConfigurationError):
        estimate_reliability(reliability_config, AdversarySpec(), 0, seed=1)


def test_exact_distance_is_a_fraction():
    assert statistical_distance_exact({"a": 1}, {"a": 1, "b": 1}) == Fraction(1, 2)


count_maps = st.dictionaries(st.integers(0, 5), st.integers(0, 20), min_size=1).filter(lambda c: sum(c.values()) > 0)


@given(count_maps, count_maps, count_maps)
def test_exact_distance_is_a_metric(a, b, c):
    ab = statistical_distance_exact(a, b)
    assert ab == statistical_distance_exact(b, a)
    assert 0 <= ab <= 1
    assert statistical_distance_exact(a, a) == 0
    assert ab <= statistical_distance_exact(a, c) + statistical_distance_exact(c, b)
