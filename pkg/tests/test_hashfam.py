"""Tests for the polynomial Delta-universal hash family."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from awtp_pd.ffield import PrimeModulus
from awtp_pd.hashfam import (
    HashInput,
    HashKey,
    check_delta_universality,
    collision_count,
    delta_universality_suite,
    hash_ints,
    universal_hash,
)
from awtp_pd.utils.errors import HashInputError, ModulusMismatchError


def power_sum(alpha, xs, q):
    """sum_i x_i alpha^i with i starting at 1."""
    return sum(x * pow(alpha, i, q) for i, x in enumerate(xs, start=1)) % q


@given(
    q=st.sampled_from([5, 7, 11, 67]),
    alpha=st.integers(min_value=0, max_value=10 ** 4),
    xs=st.lists(st.integers(min_value=0, max_value=10 ** 4), min_size=1, max_size=4),
)
def test_horner_matches_power_sum(q, alpha, xs):
    alpha %= q
    xs = [x % q for x in xs]
    assert hash_ints(alpha, xs, q) == power_sum(alpha, xs, q)


def test_hash_example():
    F = PrimeModulus(5)
    tag = universal_hash(HashKey(F.element(2)), [F.element(1), F.element(1)])
    assert tag == F.element(1)


def test_hash_has_no_constant_term():
    F = PrimeModulus(7)
    x = [F.element(3), F.element(5)]
    assert universal_hash(HashKey(F.zero()), x) == F.zero()


@given(
    alpha=st.integers(min_value=0, max_value=10),
    x=st.lists(st.integers(min_value=0, max_value=10), min_size=3, max_size=3),
    y=st.lists(st.integers(min_value=0, max_value=10), min_size=3, max_size=3),
)
def test_hash_is_linear_in_its_input(alpha, x, y):
    q = 11
    combined = [(a + b) % q for a, b in zip(x, y)]
    assert hash_ints(alpha, combined, q) == (hash_ints(alpha, x, q) + hash_ints(alpha, y, q)) % q


def test_input_length_is_limited_to_q_minus_one():
    F = PrimeModulus(5)
    with pytest.raises(HashInputError):
        HashInput(tuple(F.element(1) for _ in range(5)))
    with pytest.raises(HashInputError):
        HashInput(())


def test_key_and_input_fields_must_agree():
    with pytest.raises(ModulusMismatchError):
        universal_hash(HashKey(PrimeModulus(5).element(1)), [PrimeModulus(7).element(1)])


def test_collision_count_example():
    F = PrimeModulus(5)
    x1 = [F.element(1), F.element(1)]
    x2 = [F.zero(), F.zero()]
    # alpha + alpha^2 = 0 for alpha in {0, 4}
    assert collision_count(x1, x2, F.zero()) == 2


def test_collision_count_rejects_equal_inputs():
    F = PrimeModulus(7)
    x = [F.element(2), F.element(3)]
    with pytest.raises(HashInputError):
        collision_count(x, list(x), F.zero())


def test_collision_count_rejects_length_mismatch():
    F = PrimeModulus(7)
    with pytest.raises(HashInputError):
        collision_count([F.element(1)], [F.element(1), F.element(2)], F.zero())


@given(
    x1=st.lists(st.integers(min_value=0, max_value=6), min_size=2, max_size=2),
    x2=st.lists(st.integers(min_value=0, max_value=6), min_size=2, max_size=2),
    t=st.integers(min_value=0, max_value=6),
)
def test_collision_count_is_bounded_by_input_length(x1, x2, t):
    if x1 == x2:
        return
    F = PrimeModulus(7)
    count = collision_count([F.element(v) for v in x1], [F.element(v) for v in x2], F.element(t))
    assert count <= 2


@pytest.mark.slow
def test_delta_universality_exhaustive():
    results = delta_universality_suite((5, 7, 11), (1, 2, 3))
    assert len(results) == 9
    for result in results:
        assert result.holds, result
        assert result.max_collisions <= result.length
        if result.length >= 2:
            assert result.attained, result


def test_single_check_reports_pairs():
    result = check_delta_universality(5, 1)
    assert result.max_collisions == 1
    assert result.pairs_checked == 5 * 4
    assert result.bound == 1


def test_check_rejects_overlong_inputs():
    with pytest.raises(HashInputError):
        check_delta_universality(5, 5)
