"""Tests for prime-field arithmetic and prime selection."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from awtp_pd.ffield import FieldElement, PrimeModulus, inv, is_prime, protocol_threshold, select_prime
from awtp_pd.utils.errors import ConfigurationError, ModulusMismatchError, ZeroDivisionFieldError

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 67, 8009]


def naive_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def test_is_prime_matches_trial_division_below_3000():
    for n in range(-3, 3000):
        assert is_prime(n) == naive_is_prime(n), n


@pytest.mark.parametrize("n,expected", [
    (2 ** 61 - 1, True),
    (2 ** 89 - 1, True),
    (2 ** 64 + 1, False),
    (561, False),
    (3215031751, False),
    (4294967311, True),
])
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


def test_select_prime_reference_value():
    assert select_prime(2, 4).q == 67
    assert select_prime(2, 2).q == 17


@pytest.mark.parametrize("u,N", [(2, 1), (2, 3), (3, 5), (10, 20), (20, 20)])
def test_select_prime_is_smallest_above_threshold(u, N):
    q = select_prime(u, N).q
    threshold = protocol_threshold(u, N)
    assert q > threshold
    assert naive_is_prime(q)
    assert not any(naive_is_prime(c) for c in range(threshold + 1, q))


@pytest.mark.parametrize("u,N", [(1, 4), (2, 0)])
def test_select_prime_rejects_bad_parameters(u, N):
    with pytest.raises(ConfigurationError):
        select_prime(u, N)


def test_modulus_must_be_prime():
    with pytest.raises(ConfigurationError):
        PrimeModulus(4)
    with pytest.raises(ValueError):
        PrimeModulus(1)


def test_element_range_is_checked():
    with pytest.raises(ValueError):
        FieldElement(5, PrimeModulus(5))


@settings(max_examples=200)
@given(
    q=st.sampled_from(SMALL_PRIMES),
    a=st.integers(min_value=0, max_value=10 ** 6),
    b=st.integers(min_value=0, max_value=10 ** 6),
    c=st.integers(min_value=0, max_value=10 ** 6),
)
def test_field_axioms(q, a, b, c):
    F = PrimeModulus(q)
    x, y, z = F.element(a), F.element(b), F.element(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x - x == F.zero()
    assert x + (-x) == F.zero()
    if x:
        assert x * x.inverse() == F.one()
        assert inv(x) == x ** -1
        assert (y / x) * x == y


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_field_axioms_hold_for_every_triple(q):
    F = PrimeModulus(q)
    elements = [F.element(a) for a in range(q)]
    for x, y, z in itertools.product(elements, repeat=3):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
    for x in elements:
        assert x + F.zero() == x
        assert x * F.one() == x
        assert x + (-x) == F.zero()
        if x:
            assert x * x.inverse() == F.one()


@given(a=st.integers(min_value=1, max_value=66), e=st.integers(min_value=0, max_value=200))
def test_power_agrees_with_repeated_multiplication(a, e):
    F = PrimeModulus(67)
    x = F.element(a)
    expected = F.one()
    for _ in range(e):
        expected = expected * x
    assert x ** e == expected


def test_int_operands_are_reduced():
    F = PrimeModulus(7)
    assert F.element(3) + 5 == F.element(1)
    assert 10 - F.element(4) == F.element(6)
    assert 3 * F.element(5) == F.element(1)


def test_zero_has_no_inverse():
    F = PrimeModulus(11)
    with pytest.raises(ZeroDivisionFieldError):
        inv(F.zero())
    with pytest.raises(ZeroDivisionError):
        F.element(3) / 0
    with pytest.raises(ZeroDivisionFieldError):
        F.inv(134)


def test_mixing_fields_raises():
    a = PrimeModulus(5).element(1)
    b = PrimeModulus(7).element(1)
    with pytest.raises(ModulusMismatchError):
        a + b
    with pytest.raises(ModulusMismatchError):
        a * b


def test_modulus_helpers():
    F = PrimeModulus(67)
    assert F.bit_width == 7
    assert PrimeModulus(5).bit_width == 3
    assert len(list(PrimeModulus(5).elements())) == 5
    assert F.satisfies_protocol_bound(2, 4)
    assert not PrimeModulus(61).satisfies_protocol_bound(2, 4)
    assert F.sub(3, 5) == 65
    assert F.mul(F.inv(3), 3) == 1
