"""Primality testing and protocol prime selection."""

import logging
import math

from ..utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

TRIAL_DIVISION_LIMIT = 2 ** 32

# Deterministic witness set for every n < 3.3e24
MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _trial_division(n: int) -> bool:
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MILLER_RABIN_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Trial division below 2^32, deterministic Miller-Rabin above."""
    if n < 2:
        return False
    if n < TRIAL_DIVISION_LIMIT:
        return _trial_division(n)
    if any(n % p == 0 for p in MILLER_RABIN_WITNESSES):
        return n in MILLER_RABIN_WITNESSES
    return _miller_rabin(n)


def protocol_threshold(u: int, N: int) -> int:
    """The lower bound 2uN^2 that the protocol prime must exceed."""
    return 2 * u * N * N


def select_prime(u: int, N: int):
    """
    Return the smallest prime strictly greater than 2uN^2.

    Args:
        u: field symbols per codeword component, at least 2
        N: codeword length, at least 1

    Returns:
        PrimeModulus for the selected prime
    """
    from .field import PrimeModulus

    if u < 2:
        raise ConfigurationError(f"u must be at least 2, got {u}")
    if N < 1:
        raise ConfigurationError(f"N must be at least 1, got {N}")

    candidate = protocol_threshold(u, N) + 1
    while not is_prime(candidate):
        candidate += 1

    logger.debug(f"🔢 Selected prime q={candidate} for u={u}, N={N}")
    return PrimeModulus(candidate)
