"""Polynomial Delta-universal hash family used for component verification."""

from .universal import (
    HashKey,
    HashInput,
    hash_ints,
    universal_hash,
    collision_count,
    DeltaUniversalityResult,
    check_delta_universality,
    delta_universality_suite,
)

__all__ = [
    'HashKey',
    'HashInput',
    'hash_ints',
    'universal_hash',
    'collision_count',
    'DeltaUniversalityResult',
    'check_delta_universality',
    'delta_universality_suite',
]
